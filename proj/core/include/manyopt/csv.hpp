#pragma once

#include <string>
#include <vector>

namespace manyopt {

/// Shortest text that round-trips the double exactly (17 significant digits).
std::string format_double(double value);

/// Comma-separated rows of doubles, one vector per row, 17 significant
/// digits. Lines in `comments` are emitted first, prefixed with "# ".
void write_csv(const std::string& path,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& comments = {});

std::string csv_to_string(const std::vector<std::vector<double>>& rows,
                          const std::vector<std::string>& comments = {});

/// Reads rows of comma-separated doubles, skipping blank lines and lines
/// starting with '#'. Throws std::runtime_error on malformed input.
std::vector<std::vector<double>> read_csv(const std::string& path);
std::vector<std::vector<double>> csv_from_string(const std::string& text);

}  // namespace manyopt
