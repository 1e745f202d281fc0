#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ntrans/graded_basis.hpp"
#include "ntrans/translation.hpp"

namespace ntrans {

/// Word spaces K^t of the quadratic complex, in free-word coordinates.
/// K^0 = trivial words, K^1 = arrow span, K^2 = relation span, and
/// K^{t+1} = (arrows · K^t) ∩ (K^t · arrows), componentwise per (start, end).
struct WordSpaces {
  int cap = 0;
  /// spaces[t][{start, end}]: canonical rows over the composable words
  /// start -> end of length t, columns sorted by written form.
  std::vector<std::map<std::pair<int, int>, Matrix>> spaces;

  int dim(int t, int start, int end) const;
  int dim_from(int t, int start) const;
  int top_nonzero() const;  // largest t <= cap with a nonzero space
};

WordSpaces word_spaces(const GradedBasis& gb, int cap);

/// Homology dimensions of the complex ... -> Λ ⊗ K^s e_i -> Λ e_i for one
/// vertex: (position, internal degree) -> dim, positions >= 1, nonzero only.
std::map<std::pair<int, int>, int> complex_homology(const GradedBasis& gb, const WordSpaces& ws,
                                                    int vertex);

struct HomologyEntry {
  int vertex = -1;
  int position = 0;
  int degree = 0;
  int dim = 0;
};

struct KoszulReport {
  int cap = 0;
  int p = 0;               // top nonzero degree of the algebra within the cap
  bool p_at_cap = false;
  std::optional<int> q;    // first position >= 1 carrying homology, when seen
  bool koszul_up_to_cap = false;  // complex exact at positions 1..cap horizon
  bool almost_koszul = false;     // certified (p,q) classification
  int kmax = 0;            // top t with K^t nonzero
  std::vector<HomologyEntry> homology;
  std::vector<std::string> notes;
};

/// Classify the quadratic algebra: exact complex within the cap, or homology
/// concentrated in position q / internal degree p+q with the expected
/// dimensions, or an honest failure report. Throws std::invalid_argument on a
/// non-quadratic presentation.
KoszulReport classify_pq(const GradedBasis& gb);

/// Algebra-level verdict: the checks pass, the top degree is n+1, and the
/// complex is exact up to the cap or certified almost-Koszul with q >= 2.
bool n_translation_algebra_verdict(const KoszulReport& kr, const TranslationCheck& tc);

}  // namespace ntrans
