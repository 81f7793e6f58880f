#pragma once

#include <cstdint>
#include <string>

#include "memp/grid.hpp"

namespace memp {

// A chosen dispatching point with its round-trip delivery cost.
struct Solution {
  GridPoint dp;
  double cost = 0.0;
  std::string algorithm;
  // Cost-function queries performed while searching.
  std::int64_t evaluations = 0;
};

}  // namespace memp
