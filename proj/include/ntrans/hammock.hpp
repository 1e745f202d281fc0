#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntrans/graded_basis.hpp"
#include "ntrans/koszul.hpp"
#include "ntrans/translation.hpp"

namespace ntrans {

/// Levelled support of the graded pieces out of one vertex: level t holds
/// (j, dim e_j L_t e_i) up to t = n+1, with links (j,t) -> (j',t+1) whenever
/// some bound path i -> j extends by an arrow j -> j' to a bound path.
struct Hammock {
  int vertex = -1;
  std::vector<std::vector<std::pair<int, int>>> levels;
  struct Link {
    int level = 0;  // from this level to level+1
    int from = -1;
    int to = -1;
    int arrow = -1;
  };
  std::vector<Link> links;
};

Hammock hammock(const GradedBasis& gb, const TranslationStructure& ts, int vertex);
std::string hammock_to_dot(const BoundQuiver& q, const Hammock& h);

/// Dimension vectors of the radical layers of the projective at `vertex`,
/// through the basis cap.
std::vector<std::vector<std::pair<int, int>>> radical_layers(const GradedBasis& gb, int vertex);

struct SequenceEntry {
  int vertex = -1;      // non-injective vertex i
  int end_vertex = -1;  // the translate the top level lands on
  bool exists = false;
  std::string reason;
  /// Reported module terms, one list (projective vertex, multiplicity) per
  /// level 0..n+1 of the hammock.
  std::vector<std::vector<std::pair<int, int>>> terms;
};

struct AlmostSplitReport {
  std::optional<int> q;
  bool up_to_cap = false;
  std::vector<SequenceEntry> entries;
};

/// Existence of the level-(n+1) sequences per non-injective vertex, decided on
/// the graded pieces of the quadratic dual.
AlmostSplitReport almost_split_report(const GradedBasis& gb, const TranslationStructure& ts,
                                      const KoszulReport& kr);

struct RegularReport {
  bool verdict = false;       // algebra-level structure + complex verdict
  std::map<int, int> nakayama;  // non-injective vertex -> its inverse translate
  int gorenstein = 0;         // resolution horizon when finite, else 0
  bool oracle_agrees = false; // independent exactness oracle matches
  std::vector<std::string> notes;
};

RegularReport partial_as_regular(const GradedBasis& gb, const TranslationStructure& ts,
                                 const KoszulReport& kr);

/// Keep the vertices reachable, within `cap` degrees over the dual-side
/// algebra (opposite of the quadratic dual), from the named slice; restrict
/// arrows to the surviving vertices and relations to the terms lying fully
/// inside them.
BoundQuiver slice_truncation(const BoundQuiver& big, const std::vector<std::string>& slice,
                             int cap);

}  // namespace ntrans
