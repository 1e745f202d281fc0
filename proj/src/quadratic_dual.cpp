#include "ntrans/quadratic_dual.hpp"

#include <algorithm>
#include <map>

#include "ntrans/linalg.hpp"

namespace ntrans {

namespace {

/// All composable length-2 words i -> j, sorted by written form.
std::vector<Path> two_words(const BoundQuiver& q, int i, int j) {
  std::vector<Path> out;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (q.arrow(a).source != i) continue;
    int m = q.arrow(a).target;
    for (std::size_t b = 0; b < q.num_arrows(); ++b) {
      if (q.arrow(b).source != m || q.arrow(b).target != j) continue;
      out.push_back(Path{i, {static_cast<int>(a), static_cast<int>(b)}});
    }
  }
  std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) {
    return q.path_string(x) < q.path_string(y);
  });
  return out;
}

void require_quadratic(const BoundQuiver& q) {
  for (const Element& r : q.relations())
    if (r.degree != 2)
      throw std::invalid_argument("quadratic dual needs degree-2 relations; '" +
                                  q.element_string(r) + "' has degree " +
                                  std::to_string(r.degree));
}

}  // namespace

BoundQuiver quadratic_dual(const BoundQuiver& q) {
  require_quadratic(q);
  const Field f = q.field();
  const int nv = static_cast<int>(q.num_vertices());

  BoundQuiver d(f);
  for (int v = 0; v < nv; ++v) d.add_vertex(q.vertex_name(v));
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    d.add_arrow(q.arrow(a).name + "*", q.arrow(a).target, q.arrow(a).source);

  // Component by component: the annihilator of the relation rows, re-expressed
  // over the reversed starred words and canonicalized there.
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nv; ++i) {
      std::vector<Path> words = two_words(q, i, j);
      if (words.empty()) continue;
      std::map<Path, std::size_t> col;
      for (std::size_t c = 0; c < words.size(); ++c) col[words[c]] = c;

      std::vector<std::vector<Scalar>> rel_rows;
      for (const Element& r : q.relations()) {
        if (r.source != i || r.target != j) continue;
        std::vector<Scalar> v(words.size(), Scalar::zero(f));
        for (const Term& t : r.terms) v[col.at(t.path)] = t.coeff;
        rel_rows.push_back(std::move(v));
      }
      Matrix ann = kernel(row_space(Matrix::from_rows(f, rel_rows, words.size())));
      if (ann.rows() == 0) continue;

      // Dual words j -> i: reverse each word and star the arrows (indices are
      // stable). Rewrite the annihilator in dual written order, canonicalize.
      std::vector<Path> dwords(words.size());
      for (std::size_t c = 0; c < words.size(); ++c)
        dwords[c] = Path{j, {words[c].arrows[1], words[c].arrows[0]}};
      std::vector<std::size_t> order(words.size());
      for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return d.path_string(dwords[x]) < d.path_string(dwords[y]);
      });
      Matrix dual_rows(f, ann.rows(), words.size());
      for (std::size_t r = 0; r < ann.rows(); ++r)
        for (std::size_t c = 0; c < words.size(); ++c)
          dual_rows.at(r, c) = ann.at(r, order[c]);
      Matrix canon = row_space(dual_rows);
      for (std::size_t r = 0; r < canon.rows(); ++r) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < words.size(); ++c)
          if (!canon.at(r, c).is_zero())
            terms.push_back(Term{dwords[order[c]], canon.at(r, c)});
        d.add_relation(d.make_element(std::move(terms)));
      }
    }
  }
  return d;
}

DoubleDualReport check_double_dual(const BoundQuiver& q) {
  DoubleDualReport rep;
  auto bad = [&](const std::string& m) {
    rep.pass = false;
    rep.mismatches.push_back(m);
  };

  BoundQuiver dd = quadratic_dual(quadratic_dual(q));
  if (dd.num_vertices() != q.num_vertices() || dd.num_arrows() != q.num_arrows()) {
    bad("vertex or arrow counts differ");
    return rep;
  }
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (dd.vertex_name(static_cast<int>(v)) != q.vertex_name(static_cast<int>(v)))
      bad("vertex " + std::to_string(v) + " renamed");
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& x = q.arrow(static_cast<int>(a));
    const Arrow& y = dd.arrow(static_cast<int>(a));
    if (y.name != x.name + "**") bad("arrow '" + x.name + "' renamed to '" + y.name + "'");
    if (y.source != x.source || y.target != x.target)
      bad("arrow '" + x.name + "' changed endpoints");
  }

  const Field f = q.field();
  for (std::size_t i = 0; i < q.num_vertices(); ++i) {
    for (std::size_t j = 0; j < q.num_vertices(); ++j) {
      std::vector<Path> words = two_words(q, static_cast<int>(i), static_cast<int>(j));
      if (words.empty()) continue;
      std::map<Path, std::size_t> col;
      for (std::size_t c = 0; c < words.size(); ++c) col[words[c]] = c;
      auto span_of = [&](const BoundQuiver& src) {
        std::vector<std::vector<Scalar>> rows;
        for (const Element& r : src.relations()) {
          if (r.source != static_cast<int>(i) || r.target != static_cast<int>(j)) continue;
          std::vector<Scalar> v(words.size(), Scalar::zero(f));
          // double-dual arrows have the original indices and directions
          for (const Term& t : r.terms) v[col.at(t.path)] = t.coeff;
          rows.push_back(std::move(v));
        }
        return row_space(Matrix::from_rows(f, rows, words.size()));
      };
      if (!(span_of(q) == span_of(dd)))
        bad("relation span differs on the component " + q.vertex_name(static_cast<int>(i)) +
            " -> " + q.vertex_name(static_cast<int>(j)));
    }
  }
  return rep;
}

}  // namespace ntrans
