#pragma once

#include <vector>

namespace manyopt {

/// Per-variable box constraints [lower_j, upper_j].
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  int size() const { return static_cast<int>(lower.size()); }
};

}  // namespace manyopt
