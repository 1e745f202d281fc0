#include "ntrans/translation.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ntrans/linalg.hpp"

namespace ntrans {

namespace {

constexpr std::size_t kMaxWitnesses = 6;

void add_witness(CheckItem& item, const std::string& w) {
  item.pass = false;
  if (item.witnesses.size() < kMaxWitnesses)
    item.witnesses.push_back(w);
  else if (item.witnesses.size() == kMaxWitnesses)
    item.witnesses.push_back("...");
}

Element path_as_element(const BoundQuiver& q, const Path& p) {
  return q.make_element({Term{p, Scalar::one(q.field())}});
}

bool left_extends(const GradedBasis& gb, const Path& p) {
  const BoundQuiver& q = gb.quiver();
  int j = q.path_target(p);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (q.arrow(a).source != j) continue;
    Path ext = p;
    ext.arrows.push_back(static_cast<int>(a));
    if (gb.is_bound_path(ext)) return true;
  }
  return false;
}

bool right_extends(const GradedBasis& gb, const Path& p) {
  const BoundQuiver& q = gb.quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (q.arrow(a).target != p.source) continue;
    Path ext{q.arrow(a).source, {static_cast<int>(a)}};
    ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
    if (gb.is_bound_path(ext)) return true;
  }
  return false;
}

/// All maximal bound paths of length <= limit, grouped by length.
std::vector<std::vector<Path>> maximal_bound_paths(const GradedBasis& gb, int limit) {
  const BoundQuiver& q = gb.quiver();
  std::vector<std::vector<Path>> out(limit + 1);
  for (int t = 0; t <= limit; ++t)
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      for (const Path& p : gb.paths_from(t, static_cast<int>(i))) {
        if (!gb.is_bound_path(p)) continue;
        if (left_extends(gb, p) || right_extends(gb, p)) continue;
        out[t].push_back(p);
      }
  return out;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  RrefResult rr = rref(aug);
  if (rr.rank != n) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    if (rr.pivots[r] != r) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.reduced.at(r, n + c);
  return inv;
}

/// Coefficient of the one-dimensional top block in the product x·y, i.e. the
/// single normal-form coordinate. The block is assumed one-dimensional.
Scalar top_coefficient(const GradedBasis& gb, const Element& x, const Element& y) {
  Element prod = gb.multiply(x, y);
  if (prod.is_zero()) return Scalar::zero(gb.quiver().field());
  std::vector<Scalar> c = gb.normal_coords(prod);
  return c.at(0);
}

}  // namespace

bool TranslationStructure::is_projective(int v) const {
  return std::binary_search(projective.begin(), projective.end(), v);
}

bool TranslationStructure::is_injective(int v) const {
  return std::binary_search(injective.begin(), injective.end(), v);
}

bool TranslationCheck::pass() const {
  return maximal_paths.pass && top_dimension.pass && pairing.pass;
}

TranslationStructure infer_translation(const GradedBasis& gb, int n) {
  const BoundQuiver& q = gb.quiver();
  if (n < 0) throw std::invalid_argument("infer_translation: negative level");
  if (gb.max_degree() < n + 2)
    throw CapExceeded("certifying the top degree needs the basis cap at n+2 = " +
                      std::to_string(n + 2));
  if (gb.dim_total(n + 2) != 0)
    throw StructureError("a bound path of length " + std::to_string(n + 2) +
                         " exists; graded pieces do not stop at degree n+1");

  TranslationStructure ts;
  ts.n = n;

  if (gb.dim_total(n + 1) == 0) {
    // Every bound path is shorter than n+1: the null structure, in which all
    // vertices count as both projective and injective and the translation is
    // empty.
    ts.null_structure = true;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      ts.projective.push_back(static_cast<int>(v));
      ts.injective.push_back(static_cast<int>(v));
    }
    if (!q.declared_translation().empty())
      throw StructureError("a translation is declared but every bound path has length <= n");
    return ts;
  }

  std::vector<std::vector<Path>> maximal = maximal_bound_paths(gb, n + 1);
  for (int t = 0; t <= n; ++t)
    if (!maximal[t].empty())
      throw StructureError("maximal bound path '" + q.path_string(maximal[t].front()) +
                           "' has length " + std::to_string(t) + ", expected " +
                           std::to_string(n + 1));

  std::map<int, std::vector<Path>> by_target;
  std::map<int, std::vector<int>> by_source;
  for (const Path& p : maximal[n + 1]) {
    int tgt = q.path_target(p);
    by_target[tgt].push_back(p);
    by_source[p.source].push_back(tgt);
  }

  for (auto& [tgt, paths] : by_target) {
    std::sort(paths.begin(), paths.end(), [&](const Path& a, const Path& b) {
      return q.path_string(a) < q.path_string(b);
    });
    for (const Path& p : paths)
      if (p.source != paths.front().source)
        throw StructureError("maximal bound paths into '" + q.vertex_name(tgt) +
                             "' start at both '" + q.vertex_name(paths.front().source) +
                             "' and '" + q.vertex_name(p.source) + "'");
    ts.tau[tgt] = paths.front().source;
    ts.top_path[tgt] = paths.front();
  }
  for (auto& [src, tgts] : by_source) {
    std::sort(tgts.begin(), tgts.end());
    tgts.erase(std::unique(tgts.begin(), tgts.end()), tgts.end());
    if (tgts.size() > 1)
      throw StructureError("maximal bound paths from '" + q.vertex_name(src) +
                           "' end at several vertices; translation not injective");
  }

  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    int vi = static_cast<int>(v);
    if (!by_target.count(vi)) ts.projective.push_back(vi);
    if (!by_source.count(vi)) ts.injective.push_back(vi);
  }
  for (const auto& [i, ti] : ts.tau) ts.tau_inv[ti] = i;

  if (!q.declared_translation().empty() && q.declared_translation() != ts.tau) {
    std::ostringstream os;
    os << "declared translation disagrees with maximal bound paths:";
    for (const auto& [i, ti] : q.declared_translation()) {
      auto it = ts.tau.find(i);
      if (it == ts.tau.end())
        os << " tau(" << q.vertex_name(i) << ") declared but '" << q.vertex_name(i)
           << "' is projective;";
      else if (it->second != ti)
        os << " tau(" << q.vertex_name(i) << ") = " << q.vertex_name(it->second)
           << ", declared " << q.vertex_name(ti) << ";";
    }
    for (const auto& [i, ti] : ts.tau)
      if (!q.declared_translation().count(i))
        os << " tau(" << q.vertex_name(i) << ") = " << q.vertex_name(ti)
           << " found but not declared;";
    throw StructureError(os.str());
  }

  return ts;
}

TranslationCheck check_n_translation(const GradedBasis& gb, const TranslationStructure& ts) {
  const BoundQuiver& q = gb.quiver();
  const int n = ts.n;

  TranslationCheck tc;
  tc.n = n;
  tc.maximal_paths.label = "maximal bound paths run tau(i) -> i with length n+1";
  tc.top_dimension.label = "dim e_i L_{n+1} e_{tau(i)} = 1";
  tc.pairing.label = "pairing into the top piece is nondegenerate";
  tc.null_structure = ts.null_structure;
  tc.stable = ts.projective.empty() && ts.injective.empty();
  tc.self_injective = tc.stable;
  if (ts.null_structure) return tc;  // all conditions hold vacuously

  std::vector<std::vector<Path>> maximal = maximal_bound_paths(gb, n + 1);
  for (int t = 0; t <= n; ++t)
    for (const Path& p : maximal[t])
      add_witness(tc.maximal_paths, "maximal bound path '" + q.path_string(p) +
                                        "' has length " + std::to_string(t));
  std::map<int, bool> covered;
  for (const Path& p : maximal[n + 1]) {
    int tgt = q.path_target(p);
    covered[tgt] = true;
    auto it = ts.tau.find(tgt);
    if (it == ts.tau.end())
      add_witness(tc.maximal_paths, "maximal bound path into projective vertex '" +
                                        q.vertex_name(tgt) + "'");
    else if (it->second != p.source)
      add_witness(tc.maximal_paths, "maximal bound path '" + q.path_string(p) +
                                        "' does not start at tau(" + q.vertex_name(tgt) + ")");
  }
  for (const auto& [i, ti] : ts.tau) {
    (void)ti;
    if (!covered.count(i))
      add_witness(tc.maximal_paths, "no maximal bound path into '" + q.vertex_name(i) + "'");
  }

  for (const auto& [i, ti] : ts.tau) {
    int d = gb.dim(n + 1, ti, i);
    if (d != 1)
      add_witness(tc.top_dimension, "dim e_" + q.vertex_name(i) + " L_" + std::to_string(n + 1) +
                                        " e_" + q.vertex_name(ti) + " = " + std::to_string(d));
  }

  for (const auto& [i, ti] : ts.tau) {
    if (gb.dim(n + 1, ti, i) != 1) continue;  // witnessed above
    for (std::size_t jj = 0; jj < q.num_vertices(); ++jj) {
      int j = static_cast<int>(jj);
      for (int t = 0; t <= n + 1; ++t) {
        int a = gb.dim(t, j, i);            // dim e_i L_t e_j
        int b = gb.dim(n + 1 - t, ti, j);   // dim e_j L_{n+1-t} e_{tau i}
        if (a != b) {
          add_witness(tc.pairing, "dim e_" + q.vertex_name(i) + " L_" + std::to_string(t) +
                                      " e_" + q.vertex_name(j) + " = " + std::to_string(a) +
                                      " but dim e_" + q.vertex_name(j) + " L_" +
                                      std::to_string(n + 1 - t) + " e_" + q.vertex_name(ti) +
                                      " = " + std::to_string(b));
          continue;
        }
        if (a == 0) continue;
        const auto* ublock = gb.block(t, j, i);
        const auto* vblock = gb.block(n + 1 - t, ti, j);
        Matrix m(q.field(), static_cast<std::size_t>(a), static_cast<std::size_t>(a));
        for (int r = 0; r < a; ++r)
          for (int c = 0; c < a; ++c)
            m.at(r, c) = top_coefficient(gb, path_as_element(q, ublock->basis[r]),
                                         path_as_element(q, vblock->basis[c]));
        if (rref(m).rank != static_cast<std::size_t>(a))
          add_witness(tc.pairing, "degenerate pairing e_" + q.vertex_name(i) + " L_" +
                                      std::to_string(t) + " e_" + q.vertex_name(j) + " x e_" +
                                      q.vertex_name(j) + " L_" + std::to_string(n + 1 - t) +
                                      " e_" + q.vertex_name(ti));
      }
    }
  }

  return tc;
}

Element arrow_translation(const GradedBasis& gb, const TranslationStructure& ts,
                          std::size_t arrow_index) {
  const BoundQuiver& q = gb.quiver();
  if (arrow_index >= q.num_arrows())
    throw std::invalid_argument("arrow_translation: arrow index out of range");
  const Arrow& al = q.arrow(arrow_index);
  const int i = al.source, j = al.target, n = ts.n;
  if (ts.is_projective(i) || ts.is_projective(j))
    throw StructureError("arrow translation needs both endpoints of '" + al.name +
                         "' non-projective");
  const int ti = ts.tau.at(i), tj = ts.tau.at(j);

  std::vector<std::size_t> fwd;  // arrows i -> j
  std::vector<std::size_t> bwd;  // arrows tau(i) -> tau(j)
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (q.arrow(a).source == i && q.arrow(a).target == j) fwd.push_back(a);
    if (q.arrow(a).source == ti && q.arrow(a).target == tj) bwd.push_back(a);
  }
  const auto* mid = gb.block(n, tj, i);  // e_i L_n e_{tau j}
  std::size_t s = fwd.size();
  if (mid == nullptr || mid->basis.size() != s || bwd.size() != s)
    throw StructureError("pairing blocks around arrow '" + al.name +
                         "' are not square; translation of arrows undefined");

  // M1[t][m]: coefficient of the top piece at j in (arrow_t) o (mid_m).
  Matrix m1(q.field(), s, s);
  for (std::size_t t = 0; t < s; ++t)
    for (std::size_t m = 0; m < s; ++m)
      m1.at(t, m) = top_coefficient(gb, path_as_element(q, q.arrow_path(fwd[t])),
                                    path_as_element(q, mid->basis[m]));
  auto c = try_inverse(m1);
  if (!c)
    throw StructureError("degenerate arrow pairing at '" + al.name + "'");

  // M2[m][r]: coefficient of the top piece at i in (mid_m) o (arrow'_r).
  Matrix m2(q.field(), s, s);
  for (std::size_t m = 0; m < s; ++m)
    for (std::size_t r = 0; r < s; ++r)
      m2.at(m, r) = top_coefficient(gb, path_as_element(q, mid->basis[m]),
                                    path_as_element(q, q.arrow_path(bwd[r])));
  auto x = try_inverse(c->transposed() * m2);
  if (!x)
    throw StructureError("degenerate dual pairing at '" + al.name + "'");

  std::size_t t0 = static_cast<std::size_t>(
      std::find(fwd.begin(), fwd.end(), arrow_index) - fwd.begin());
  std::vector<Term> terms;
  for (std::size_t r = 0; r < s; ++r) {
    Scalar coef = x->at(r, t0);
    if (!coef.is_zero()) terms.push_back(Term{q.arrow_path(bwd[r]), coef});
  }
  if (terms.empty()) return Element{ti, tj, 1, {}};
  return q.make_element(terms);
}

namespace {

bool avoids(const BoundQuiver& q, const Path& p, const std::vector<int>& sorted_set) {
  for (int v : q.path_vertices(p))
    if (std::binary_search(sorted_set.begin(), sorted_set.end(), v)) return false;
  return true;
}

/// Normal-form coordinate rows of all "shiftable" generators inside the block
/// of paths i -> j of length t. Kinds: bit 0 = avoid projectives (right), bit
/// 1 = avoid injectives (left), bit 2 = split products (semi).
Matrix shiftable_span(const GradedBasis& gb, const TranslationStructure& ts, int t, int i, int j,
                      unsigned kinds) {
  const BoundQuiver& q = gb.quiver();
  const auto* bl = gb.block(t, i, j);
  std::size_t dim = bl ? bl->basis.size() : 0;
  std::vector<std::vector<Scalar>> rows;
  if (bl == nullptr) return Matrix(q.field(), 0, 0);
  for (const Path& w : bl->paths) {
    if (!gb.is_bound_path(w)) continue;
    bool right_ok = (kinds & 1u) && avoids(q, w, ts.projective);
    bool left_ok = (kinds & 2u) && avoids(q, w, ts.injective);
    if (right_ok || left_ok)
      rows.push_back(gb.normal_coords(path_as_element(q, w)));
  }
  if (kinds & 4u) {
    for (int t2 = 0; t2 <= t; ++t2) {
      for (const Path& tail : gb.paths_from(t2, i)) {
        if (!gb.is_bound_path(tail) || !avoids(q, tail, ts.injective)) continue;
        int m = q.path_target(tail);
        for (const Path& head : gb.paths_from(t - t2, m)) {
          if (q.path_target(head) != j) continue;
          if (!gb.is_bound_path(head) || !avoids(q, head, ts.projective)) continue;
          Path whole = tail;
          whole.arrows.insert(whole.arrows.end(), head.arrows.begin(), head.arrows.end());
          if (!gb.is_bound_path(whole)) continue;
          rows.push_back(gb.normal_coords(path_as_element(q, whole)));
        }
      }
    }
  }
  return row_space(Matrix::from_rows(q.field(), rows, dim));
}

}  // namespace

PathClass classify_path(const GradedBasis& gb, const TranslationStructure& ts, const Path& p) {
  const BoundQuiver& q = gb.quiver();
  if (!gb.is_bound_path(p))
    throw std::invalid_argument("classify_path: '" + q.path_string(p) + "' is not bound");
  int t = p.length(), i = p.source, j = q.path_target(p);
  std::vector<Scalar> v = gb.normal_coords(path_as_element(q, p));
  PathClass pc;
  pc.right_shiftable = in_span(shiftable_span(gb, ts, t, i, j, 1u), v);
  pc.left_shiftable = in_span(shiftable_span(gb, ts, t, i, j, 2u), v);
  pc.semi_shiftable = in_span(shiftable_span(gb, ts, t, i, j, 4u), v);
  return pc;
}

bool is_left_stark(const GradedBasis& gb, const Path& p, int t, int from_vertex) {
  const BoundQuiver& q = gb.quiver();
  if (t + p.length() > gb.max_degree())
    throw CapExceeded("stark check needs degree " + std::to_string(t + p.length()));
  const auto* dom = gb.block(t, from_vertex, p.source);
  if (dom == nullptr || dom->basis.empty()) return true;
  Element pe = path_as_element(q, p);
  std::vector<std::vector<Scalar>> rows;
  std::size_t out_dim = static_cast<std::size_t>(
      gb.dim(t + p.length(), from_vertex, q.path_target(p)));
  for (const Path& w : dom->basis) {
    Element prod = gb.multiply(pe, path_as_element(q, w));
    rows.push_back(prod.is_zero() ? std::vector<Scalar>(out_dim, Scalar::zero(q.field()))
                                  : gb.normal_coords(prod));
  }
  return rref(Matrix::from_rows(q.field(), rows, out_dim)).rank == dom->basis.size();
}

bool is_right_stark(const GradedBasis& gb, const Path& p, int t, int to_vertex) {
  const BoundQuiver& q = gb.quiver();
  if (t + p.length() > gb.max_degree())
    throw CapExceeded("stark check needs degree " + std::to_string(t + p.length()));
  const auto* dom = gb.block(t, q.path_target(p), to_vertex);
  if (dom == nullptr || dom->basis.empty()) return true;
  Element pe = path_as_element(q, p);
  std::vector<std::vector<Scalar>> rows;
  std::size_t out_dim = static_cast<std::size_t>(gb.dim(t + p.length(), p.source, to_vertex));
  for (const Path& w : dom->basis) {
    Element prod = gb.multiply(path_as_element(q, w), pe);
    rows.push_back(prod.is_zero() ? std::vector<Scalar>(out_dim, Scalar::zero(q.field()))
                                  : gb.normal_coords(prod));
  }
  return rref(Matrix::from_rows(q.field(), rows, out_dim)).rank == dom->basis.size();
}

bool AdmissibleReport::pass() const { return extension.pass && shift_span.pass && stark.pass; }

AdmissibleReport check_admissible(const GradedBasis& gb, const TranslationStructure& ts) {
  const BoundQuiver& q = gb.quiver();
  const int n = ts.n;

  AdmissibleReport rep;
  rep.extension.label = "every bound path extends to a bound path of length n+1";
  rep.shift_span.label = "interior bound paths lie in the shiftable span";
  rep.stark.label = "multiplication across the top degree stays injective";

  std::vector<std::vector<Path>> bound(n + 2);
  for (int t = 0; t <= n + 1; ++t)
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      for (const Path& p : gb.paths_from(t, static_cast<int>(i)))
        if (gb.is_bound_path(p)) bound[t].push_back(p);

  auto paths_into = [&](int t, int v) {
    std::vector<Path> out;
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      for (const Path& p : gb.paths_from(t, static_cast<int>(i)))
        if (q.path_target(p) == v) out.push_back(p);
    return out;
  };

  // (i) two-sided extension to the top length.
  for (int l = 0; l <= n + 1; ++l) {
    for (const Path& p : bound[l]) {
      int j = q.path_target(p);
      bool found = false;
      for (int t2 = 0; t2 <= n + 1 - l && !found; ++t2) {
        int t1 = n + 1 - l - t2;
        for (const Path& tail : paths_into(t2, p.source)) {
          if (found) break;
          for (const Path& head : gb.paths_from(t1, j)) {
            Path whole = tail;
            whole.arrows.insert(whole.arrows.end(), p.arrows.begin(), p.arrows.end());
            whole.arrows.insert(whole.arrows.end(), head.arrows.begin(), head.arrows.end());
            if (gb.is_bound_path(whole)) {
              found = true;
              break;
            }
          }
        }
      }
      if (!found)
        add_witness(rep.extension,
                    "bound path '" + q.path_string(p) + "' has no bound extension of length " +
                        std::to_string(n + 1));
    }
  }

  // (ii) span condition for paths from a non-injective to a non-projective.
  for (int l = 0; l <= n + 1; ++l) {
    for (const Path& p : bound[l]) {
      int j = q.path_target(p);
      if (ts.is_injective(p.source) || ts.is_projective(j)) continue;
      Matrix span = shiftable_span(gb, ts, l, p.source, j, 7u);
      if (!in_span(span, gb.normal_coords(path_as_element(q, p))))
        add_witness(rep.shift_span,
                    "bound path '" + q.path_string(p) + "' is outside the shiftable span");
    }
  }

  // (iii) stark conditions across the top piece at each non-projective vertex.
  for (const auto& [i, ti] : ts.tau) {
    for (int lp = 0; lp <= n; ++lp) {
      for (const Path& p : bound[lp]) {
        if (q.path_target(p) != i || avoids(q, p, ts.projective)) continue;
        for (int lq = 0; lp + lq <= n; ++lq) {
          for (const Path& pq : bound[lq]) {
            if (pq.source != ti || avoids(q, pq, ts.injective)) continue;
            int t = n + 1 - lp - lq;
            if (!is_left_stark(gb, p, t, q.path_target(pq)) &&
                !is_right_stark(gb, pq, t, p.source))
              add_witness(rep.stark, "neither '" + q.path_string(p) + "' nor '" +
                                         q.path_string(pq) +
                                         "' multiplies injectively in degree " + std::to_string(t));
          }
        }
      }
    }
  }

  return rep;
}

}  // namespace ntrans
