#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ntrans/graded_basis.hpp"

namespace ntrans {

/// Raised when a quiver fails to carry the structure being inferred
/// (as opposed to a malformed input or a degree-cap problem).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TranslationStructure {
  int n = 0;
  std::map<int, int> tau;      // defined on non-projective vertices
  std::map<int, int> tau_inv;  // defined on non-injective vertices
  std::vector<int> projective; // sorted vertex indices with no maximal path in
  std::vector<int> injective;  // sorted vertex indices with no maximal path out
  std::map<int, Path> top_path;  // i -> chosen maximal bound path tau(i) -> i
  bool null_structure = false;   // every bound path has length <= n

  bool is_projective(int v) const;
  bool is_injective(int v) const;
};

struct CheckItem {
  std::string label;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct TranslationCheck {
  int n = 0;
  CheckItem maximal_paths;   // every maximal bound path runs tau(i) -> i, length n+1
  CheckItem top_dimension;   // dim e_i Lambda_{n+1} e_{tau i} = 1
  CheckItem pairing;         // bilinear pairings into the top piece nondegenerate
  bool stable = false;
  bool null_structure = false;
  bool self_injective = false;
  bool pass() const;
};

/// Enumerate maximal bound paths and read the translation off their endpoints.
/// Adopts a translation declared on the quiver when present. Throws
/// StructureError when no consistent translation exists, CapExceeded when the
/// basis cap cannot certify the top degree.
TranslationStructure infer_translation(const GradedBasis& gb, int n);

TranslationCheck check_n_translation(const GradedBasis& gb, const TranslationStructure& ts);

/// The arrow map induced by the translation: for an arrow a: i -> j between
/// non-projective vertices, the matching combination of arrows tau(i) -> tau(j).
Element arrow_translation(const GradedBasis& gb, const TranslationStructure& ts,
                          std::size_t arrow_index);

struct PathClass {
  bool left_shiftable = false;   // inside span of bound paths avoiding injectives
  bool right_shiftable = false;  // inside span of bound paths avoiding projectives
  bool semi_shiftable = false;   // inside span of two-piece splits (left part
                                 // avoids projectives, right part avoids injectives)
};

PathClass classify_path(const GradedBasis& gb, const TranslationStructure& ts, const Path& p);

/// Left multiplication by p is injective on e_{s(p)} Lambda_t e_{from_vertex}.
bool is_left_stark(const GradedBasis& gb, const Path& p, int t, int from_vertex);
/// Right multiplication by p is injective on e_{to_vertex} Lambda_t e_{t(p)}.
bool is_right_stark(const GradedBasis& gb, const Path& p, int t, int to_vertex);

struct AdmissibleReport {
  CheckItem extension;   // every bound path extends to a bound path of length n+1
  CheckItem shift_span;  // interior bound paths lie in the shiftable span
  CheckItem stark;       // multiplication conditions across the top degree
  bool pass() const;
};

AdmissibleReport check_admissible(const GradedBasis& gb, const TranslationStructure& ts);

}  // namespace ntrans
