#include <doctest.h>

#include "helpers.hpp"
#include "ntrans/graded_basis.hpp"
#include "ntrans/koszul.hpp"

using namespace ntrans;

TEST_CASE("word spaces of the radical-square-zero line") {
  BoundQuiver q = load_testdata("a4rad2.quiver");
  GradedBasis gb = GradedBasis::compute(q, 6);
  WordSpaces ws = word_spaces(gb, 6);
  int v1 = q.vertex_index("1"), v2 = q.vertex_index("2");
  int v3 = q.vertex_index("3"), v4 = q.vertex_index("4");
  CHECK(ws.dim(0, v1, v1) == 1);
  CHECK(ws.dim(1, v1, v2) == 1);
  CHECK(ws.dim(2, v1, v3) == 1);  // the overlap a2.a1
  CHECK(ws.dim(3, v1, v4) == 1);  // the full chain a3.a2.a1
  CHECK(ws.dim(2, v1, v2) == 0);
  CHECK(ws.top_nonzero() == 3);
  CHECK(ws.dim_from(3, v1) == 1);
  CHECK(ws.dim_from(4, v1) == 0);
}

TEST_CASE("the radical-square-zero line is exact up to the cap") {
  BoundQuiver q = load_testdata("a4rad2.quiver");
  GradedBasis gb = GradedBasis::compute(q, 8);
  KoszulReport kr = classify_pq(gb);
  CHECK(kr.p == 1);
  CHECK_FALSE(kr.p_at_cap);
  CHECK(kr.koszul_up_to_cap);
  CHECK_FALSE(kr.q.has_value());
  CHECK(kr.homology.empty());
  CHECK_FALSE(kr.almost_koszul);
}

TEST_CASE("the extended line is a (2,3) pair") {
  BoundQuiver q = load_testdata("tilde_a4rad2.quiver");
  GradedBasis gb = GradedBasis::compute(q, 8);
  KoszulReport kr = classify_pq(gb);
  CHECK(kr.p == 2);
  CHECK_FALSE(kr.p_at_cap);
  CHECK_FALSE(kr.koszul_up_to_cap);
  REQUIRE(kr.q.has_value());
  CHECK(*kr.q == 3);
  CHECK(kr.almost_koszul);
  CHECK(kr.kmax == 3);

  // One homology class per vertex, sitting at position q in degree p + q.
  CHECK(kr.homology.size() == 4);
  for (const HomologyEntry& h : kr.homology) {
    CHECK(h.position == 3);
    CHECK(h.degree == 5);
    CHECK(h.dim == 1);
  }
}

TEST_CASE("level verdict combines the two reports") {
  BoundQuiver line = load_testdata("a4rad2.quiver");
  GradedBasis gbl = GradedBasis::compute(line, 6);
  TranslationStructure tsl = infer_translation(gbl, 0);
  TranslationCheck tcl = check_n_translation(gbl, tsl);
  CHECK(n_translation_algebra_verdict(classify_pq(gbl), tcl));

  BoundQuiver ext = load_testdata("tilde_a4rad2.quiver");
  GradedBasis gbe = GradedBasis::compute(ext, 6);
  TranslationStructure tse = infer_translation(gbe, 1);
  TranslationCheck tce = check_n_translation(gbe, tse);
  CHECK(n_translation_algebra_verdict(classify_pq(gbe), tce));

  // A mismatched level breaks the verdict: the line as a null 2-structure.
  BoundQuiver plain = parse_quiver(
      "field rational\n"
      "vertex 1 2 3 4\n"
      "arrow a1 1 2\n"
      "arrow a2 2 3\n"
      "arrow a3 3 4\n"
      "relation a2.a1\n"
      "relation a3.a2\n");
  GradedBasis gbp = GradedBasis::compute(plain, 6);
  TranslationStructure tsp = infer_translation(gbp, 2);
  TranslationCheck tcp = check_n_translation(gbp, tsp);
  CHECK(tcp.pass());  // vacuous
  CHECK_FALSE(n_translation_algebra_verdict(classify_pq(gbp), tcp));
}

TEST_CASE("the windowed layering is a (2,3) pair as well") {
  BoundQuiver q = load_testdata("zq1_window.quiver");
  GradedBasis gb = GradedBasis::compute(q, 6);
  KoszulReport kr = classify_pq(gb);
  CHECK(kr.p == 2);
  REQUIRE(kr.q.has_value());
  CHECK(*kr.q == 3);
  CHECK(kr.almost_koszul);
  TranslationStructure ts = infer_translation(gb, 1);
  CHECK(n_translation_algebra_verdict(kr, check_n_translation(gb, ts)));
}

TEST_CASE("non-quadratic inputs are refused") {
  BoundQuiver q = parse_quiver(
      "field rational\n"
      "vertex 1\n"
      "arrow x 1 1\n"
      "relation x.x.x\n");
  GradedBasis gb = GradedBasis::compute(q, 6);
  CHECK_THROWS_AS(classify_pq(gb), std::invalid_argument);
}
