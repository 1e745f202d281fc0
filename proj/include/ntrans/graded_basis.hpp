#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ntrans/linalg.hpp"
#include "ntrans/quiver.hpp"

namespace ntrans {

/// Thrown when a computation would need graded pieces beyond the cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};

/// Normal-form bases of the graded pieces e_j Λ_t e_i of k(Q) up to a degree
/// cap. Per block (t, i, j): all composable paths are the coordinate columns
/// (sorted by written form); the span of all u·r·v products of relations is
/// reduced to rref; the non-pivot paths form the quotient basis, and reducing
/// against the rref rows is the normal-form map.
class GradedBasis {
 public:
  struct Block {
    std::vector<Path> paths;           // ascending written form
    Matrix rel_span;                   // canonical rref rows, path coordinates
    std::vector<bool> is_pivot;        // per column
    std::vector<Path> basis;           // the non-pivot paths
    std::map<Path, std::size_t> col;   // path -> column index
  };

  static GradedBasis compute(const BoundQuiver& q, int max_degree);

  const BoundQuiver& quiver() const { return *q_; }
  int max_degree() const { return cap_; }

  /// Null when the block has no composable paths at all.
  const Block* block(int t, int i, int j) const;
  int dim(int t, int i, int j) const;  // dim e_j Λ_t e_i
  int dim_total(int t) const;
  /// Total dimension over all degrees 0..cap.
  int dim_algebra() const;

  /// All composable paths of degree t starting at i (relation-free count).
  const std::vector<Path>& paths_from(int t, int i) const;

  /// Coordinates of the normal form of e over the basis paths of its block.
  std::vector<Scalar> normal_coords(const Element& e) const;
  /// The normal form itself, as a combination of basis paths.
  Element normal_form(const Element& e) const;
  bool is_bound(const Element& e) const;
  bool is_bound_path(const Path& p) const;

  /// Algebra product x·y (y acts first; requires target(y) = source(x)).
  /// Throws std::invalid_argument on endpoint mismatch and CapExceeded when
  /// the product degree leaves the cap.
  Element multiply(const Element& x, const Element& y) const;

  struct Loewy {
    int value = 0;        // 1 + top nonzero degree when certified
    bool exceeds_cap = false;
  };
  /// Loewy length 1 + max{t : Λ_t ≠ 0}; not certified if Λ_cap ≠ 0.
  Loewy loewy_length() const;

 private:
  const BoundQuiver* q_ = nullptr;
  int cap_ = 0;
  // paths_by_[t][i] = composable paths of length t from i
  std::vector<std::vector<std::vector<Path>>> paths_by_;
  std::map<std::tuple<int, int, int>, Block> blocks_;

  const Block* block_of(const Element& e) const;
};

}  // namespace ntrans
