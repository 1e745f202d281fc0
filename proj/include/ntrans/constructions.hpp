#pragma once

#include "ntrans/graded_basis.hpp"
#include "ntrans/koszul.hpp"
#include "ntrans/translation.hpp"

namespace ntrans {

/// Quiver of the trivial extension: one connector arrow i -> tau(i) per
/// non-projective vertex; relations grow by connector-squared terms and the
/// commutation terms pairing each arrow with its translation. Throws
/// StructureError when the structure or admissibility checks fail.
BoundQuiver trivial_extension(const GradedBasis& gb, const TranslationStructure& ts);

struct SmashOptions {
  int order = 1;      // layer group order; 0 = unbounded layering cut to a window
  int window_lo = 0;  // only read when order == 0
  int window_hi = 0;
};

/// Layered version of the extension: vertices i@t, one arrow copy per layer,
/// connectors crossing from layer t-1 to t. Cyclic for order >= 1; for
/// order 0 the layers form the given window and relations that would touch a
/// missing layer are dropped (recorded in the metadata).
BoundQuiver smash_extension(const GradedBasis& gb, const TranslationStructure& ts,
                            const SmashOptions& opt);

struct ExtendableReport {
  bool admissible = false;
  bool extendable = false;
  std::vector<std::string> notes;
  TranslationCheck extension_check;
  KoszulReport extension_koszul;
};

/// Build the trivial extension and decide whether it carries the full
/// (n+1)-structure: checks pass and the complex is exact or certified
/// almost-Koszul within the cap.
ExtendableReport is_extendable(const GradedBasis& gb, const TranslationStructure& ts, int cap);

}  // namespace ntrans
