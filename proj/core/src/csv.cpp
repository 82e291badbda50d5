#include "manyopt/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace manyopt {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string csv_to_string(const std::vector<std::vector<double>>& rows,
                          const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& comment : comments) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& comments) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  file << csv_to_string(rows, comments);
}

std::vector<std::vector<double>> csv_from_string(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::vector<double> row;
    const char* cursor = line.c_str();
    while (true) {
      char* end = nullptr;
      const double value = std::strtod(cursor, &end);
      if (end == cursor) {
        throw std::runtime_error("malformed CSV value at line " +
                                 std::to_string(line_no));
      }
      row.push_back(value);
      cursor = end;
      while (*cursor == ' ' || *cursor == '\t' || *cursor == '\r') {
        ++cursor;
      }
      if (*cursor == '\0') {
        break;
      }
      if (*cursor != ',') {
        throw std::runtime_error("malformed CSV separator at line " +
                                 std::to_string(line_no));
      }
      ++cursor;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return csv_from_string(buffer.str());
}

}  // namespace manyopt
