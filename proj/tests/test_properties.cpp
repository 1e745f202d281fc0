#include <doctest.h>

#include <random>

#include "ntrans/graded_basis.hpp"
#include "ntrans/koszul.hpp"
#include "ntrans/linalg.hpp"
#include "ntrans/quadratic_dual.hpp"
#include "ntrans/quiver.hpp"
#include "random_gen.hpp"

using namespace ntrans;
using testgen::random_matrix;
using testgen::random_quadratic_quiver;

namespace {

// Random invertible row operations preserve the row space.
Matrix scrambled(std::mt19937& rng, const Matrix& m) {
  Matrix s = m;
  if (s.rows() < 2) return s;
  std::uniform_int_distribution<std::size_t> pick(0, s.rows() - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int k = 0; k < 12; ++k) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    Scalar c(m.field(), coeff(rng));
    for (std::size_t j = 0; j < s.cols(); ++j) s.at(a, j) += c * s.at(b, j);
  }
  return s;
}

Element random_element(std::mt19937& rng, const BoundQuiver& q, const GradedBasis& gb, int degree) {
  std::uniform_int_distribution<int> v_d(0, static_cast<int>(q.num_vertices()) - 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int tries = 0; tries < 20; ++tries) {
    int i = v_d(rng);
    const auto& paths = gb.paths_from(degree, i);
    if (paths.empty()) continue;
    // All terms must share one target: group by it.
    std::map<int, std::vector<Path>> by_tgt;
    for (const Path& p : paths) by_tgt[q.path_target(p)].push_back(p);
    auto it = by_tgt.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, by_tgt.size() - 1)(rng));
    std::vector<Term> terms;
    for (const Path& p : it->second) {
      long c = coeff(rng);
      if (c != 0) terms.push_back(Term{p, Scalar(q.field(), c)});
    }
    if (terms.empty()) continue;
    Element e = q.make_element(std::move(terms));
    if (!e.is_zero()) return e;
  }
  return Element{};
}

}  // namespace

TEST_CASE("rref is idempotent and canonical under row scrambles") {
  std::mt19937 rng(20260814);
  for (const Field& f : {Field::rationals(), Field::gf(5)}) {
    for (int iter = 0; iter < 60; ++iter) {
      Matrix m = random_matrix(rng, f, 2 + iter % 5, 3 + iter % 4);
      RrefResult r = rref(m);
      RrefResult again = rref(r.reduced);
      CHECK(again.reduced == r.reduced);
      CHECK(again.rank == r.rank);
      CHECK(row_space(scrambled(rng, m)) == row_space(m));
    }
  }
}

TEST_CASE("kernel rows annihilate and fill the nullity") {
  std::mt19937 rng(7);
  for (const Field& f : {Field::rationals(), Field::gf(3)}) {
    for (int iter = 0; iter < 40; ++iter) {
      Matrix m = random_matrix(rng, f, 2 + iter % 4, 2 + iter % 5);
      Matrix k = kernel(m);
      CHECK(k.rows() + rref(m).rank == m.cols());
      for (std::size_t r = 0; r < k.rows(); ++r)
        for (const Scalar& s : m.apply(k.row(r))) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("intersection lies in both spans and has the right dimension") {
  std::mt19937 rng(99);
  Field f = Field::rationals();
  for (int iter = 0; iter < 40; ++iter) {
    Matrix a = row_space(random_matrix(rng, f, 1 + iter % 3, 5));
    Matrix b = row_space(random_matrix(rng, f, 1 + (iter + 1) % 3, 5));
    Matrix c = intersect(a, b);
    for (std::size_t r = 0; r < c.rows(); ++r) {
      CHECK(in_span(a, c.row(r)));
      CHECK(in_span(b, c.row(r)));
    }
    // dim(A) + dim(B) = dim(A+B) + dim(A ∩ B)
    Matrix stacked = a;
    for (std::size_t r = 0; r < b.rows(); ++r) stacked.append_row(b.row(r));
    CHECK(a.rows() + b.rows() == row_space(stacked).rows() + c.rows());
  }
}

TEST_CASE("solve returns actual solutions") {
  std::mt19937 rng(5150);
  Field f = Field::rationals();
  for (int iter = 0; iter < 40; ++iter) {
    Matrix m = random_matrix(rng, f, 3, 4);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::vector<Scalar> x0;
    for (int c = 0; c < 4; ++c) x0.emplace_back(f, entry(rng));
    std::vector<Scalar> rhs = m.apply(x0);  // guaranteed consistent
    auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    auto back = m.apply(*sol);
    for (std::size_t r = 0; r < back.size(); ++r) CHECK(back[r] == rhs[r]);
  }
}

TEST_CASE("multiplication in the quotient is associative") {
  std::mt19937 rng(424242);
  int tested = 0;
  while (tested < 12) {
    auto qo = random_quadratic_quiver(rng, tested % 2 ? Field::gf(5) : Field::rationals());
    if (!qo) continue;
    const BoundQuiver& q = *qo;
    GradedBasis gb = GradedBasis::compute(q, 6);
    for (int k = 0; k < 8; ++k) {
      Element x = random_element(rng, q, gb, 1);
      Element y = random_element(rng, q, gb, 1);
      Element z = random_element(rng, q, gb, 1);
      if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
      if (y.target != x.source || z.target != y.source) continue;
      Element left = gb.multiply(gb.multiply(x, y), z);
      Element right = gb.multiply(x, gb.multiply(y, z));
      CHECK(q.element_string(left) == q.element_string(right));
    }
    ++tested;
  }
}

TEST_CASE("word spaces pair with the dual algebra dimensions") {
  std::mt19937 rng(31337);
  int tested = 0;
  while (tested < 10) {
    auto qo = random_quadratic_quiver(rng, Field::rationals());
    if (!qo) continue;
    const BoundQuiver& q = *qo;
    GradedBasis gb = GradedBasis::compute(q, 4);
    WordSpaces ws = word_spaces(gb, 4);
    BoundQuiver d = quadratic_dual(q);
    GradedBasis gd = GradedBasis::compute(d, 4);
    for (int t = 0; t <= 4; ++t)
      for (std::size_t i = 0; i < q.num_vertices(); ++i)
        for (std::size_t j = 0; j < q.num_vertices(); ++j) {
          INFO("degree ", t, " from v", i, " to v", j);
          CHECK(ws.dim(t, static_cast<int>(i), static_cast<int>(j)) ==
                gd.dim(t, static_cast<int>(j), static_cast<int>(i)));
        }
    ++tested;
  }
}

TEST_CASE("double dual restores random quadratic presentations") {
  std::mt19937 rng(777);
  int tested = 0;
  while (tested < 10) {
    auto qo = random_quadratic_quiver(rng, tested % 2 ? Field::gf(7) : Field::rationals());
    if (!qo) continue;
    DoubleDualReport rep = check_double_dual(*qo);
    if (!rep.pass)
      for (const auto& m : rep.mismatches) MESSAGE(m);
    CHECK(rep.pass);
    ++tested;
  }
}

TEST_CASE("normal forms are stable under rewriting order") {
  std::mt19937 rng(2024);
  int tested = 0;
  while (tested < 10) {
    auto qo = random_quadratic_quiver(rng, Field::rationals());
    if (!qo) continue;
    const BoundQuiver& q = *qo;
    GradedBasis gb = GradedBasis::compute(q, 5);
    for (int k = 0; k < 6; ++k) {
      Element e = random_element(rng, q, gb, 2);
      if (e.is_zero()) continue;
      Element nf = gb.normal_form(e);
      CHECK(q.element_string(gb.normal_form(nf)) == q.element_string(nf));  // idempotent
      // The difference between an element and its normal form lies in the
      // ideal, i.e. it is not bound.
      Element diff = q.element_sum(e, q.scalar_multiple(nf, Scalar(q.field(), -1)));
      if (!diff.is_zero()) CHECK_FALSE(gb.is_bound(diff));
    }
    ++tested;
  }
}
