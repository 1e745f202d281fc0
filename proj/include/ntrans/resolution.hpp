#pragma once

#include <map>

#include "ntrans/graded_basis.hpp"

namespace ntrans {

struct BettiEntry {
  int step = 0;
  int vertex = -1;    // projective cover P(vertex)
  int degree = 0;     // internal degree of the generators
  int multiplicity = 0;
};

/// Stepwise graded syzygy data for the minimal projective resolution of a
/// simple left module. Brute-force oracle: works one graded piece at a time
/// with plain rank computations, independent of any complex-based shortcut.
struct ResolutionResult {
  int simple_vertex = -1;
  int steps = 0;  // betti computed for 0..steps
  int cap = 0;    // internal degree cap
  bool capped = false;  // a syzygy piece is still alive at the cap
  std::vector<BettiEntry> betti;  // sorted by (step, degree, vertex)
  /// kernel_dims[r][d] = dim ker(differential at step r) in internal degree d
  /// (only nonzero entries); r runs 1..steps.
  std::map<int, std::map<int, int>> kernel_dims;

  int multiplicity(int step, int vertex, int degree) const;
  bool kernel_vanishes(int step) const;
};

ResolutionResult minimal_resolution(const GradedBasis& gb, int simple_vertex, int steps);

}  // namespace ntrans
