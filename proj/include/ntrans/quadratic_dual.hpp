#pragma once

#include <string>
#include <vector>

#include "ntrans/quiver.hpp"

namespace ntrans {

/// Opposite quiver with starred arrows, bound by the annihilator of the
/// relation span under the pairing that matches each length-2 word with its
/// reversed starred word. Throws std::invalid_argument on non-quadratic input.
BoundQuiver quadratic_dual(const BoundQuiver& q);

struct DoubleDualReport {
  bool pass = true;
  std::vector<std::string> mismatches;
};

/// Applying the construction twice returns the original presentation: same
/// vertices, arrows (after dropping the double star), and relation spans.
DoubleDualReport check_double_dual(const BoundQuiver& q);

}  // namespace ntrans
