#include "ntrans/koszul.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ntrans/linalg.hpp"

namespace ntrans {

namespace {

Element path_as_element(const BoundQuiver& q, const Path& p) {
  return q.make_element({Term{p, Scalar::one(q.field())}});
}

}  // namespace

int WordSpaces::dim(int t, int start, int end) const {
  if (t < 0 || t > cap) return 0;
  auto it = spaces[t].find({start, end});
  return it == spaces[t].end() ? 0 : static_cast<int>(it->second.rows());
}

int WordSpaces::dim_from(int t, int start) const {
  if (t < 0 || t > cap) return 0;
  int s = 0;
  for (const auto& [key, m] : spaces[t])
    if (key.first == start) s += static_cast<int>(m.rows());
  return s;
}

int WordSpaces::top_nonzero() const {
  for (int t = cap; t >= 0; --t)
    for (const auto& [key, m] : spaces[t]) {
      (void)key;
      if (m.rows() > 0) return t;
    }
  return -1;
}

WordSpaces word_spaces(const GradedBasis& gb, int cap) {
  const BoundQuiver& q = gb.quiver();
  const Field f = q.field();
  const int nv = static_cast<int>(q.num_vertices());

  WordSpaces ws;
  ws.cap = cap;
  ws.spaces.assign(cap + 1, {});

  for (int i = 0; i < nv && cap >= 0; ++i)
    ws.spaces[0][{i, i}] = Matrix::identity(f, 1);

  if (cap >= 1)
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) {
        const auto* bl = gb.block(1, i, j);
        if (bl && !bl->paths.empty())
          ws.spaces[1][{i, j}] = Matrix::identity(f, bl->paths.size());
      }

  if (cap >= 2)
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) {
        const auto* bl = gb.block(2, i, j);
        if (bl && bl->rel_span.rows() > 0) ws.spaces[2][{i, j}] = bl->rel_span;
      }

  for (int t = 3; t <= cap; ++t) {
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) {
        const auto* bl = gb.block(t, i, j);
        if (bl == nullptr || bl->paths.empty()) continue;
        std::size_t width = bl->paths.size();

        // arrows appended after the lower space (applied last).
        std::vector<std::vector<Scalar>> left;
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
          if (q.arrow(a).target != j) continue;
          int m = q.arrow(a).source;
          auto it = ws.spaces[t - 1].find({i, m});
          if (it == ws.spaces[t - 1].end()) continue;
          const auto* low = gb.block(t - 1, i, m);
          for (std::size_t r = 0; r < it->second.rows(); ++r) {
            std::vector<Scalar> v(width, Scalar::zero(f));
            for (std::size_t c = 0; c < low->paths.size(); ++c) {
              Scalar coef = it->second.at(r, c);
              if (coef.is_zero()) continue;
              Path w = low->paths[c];
              w.arrows.push_back(static_cast<int>(a));
              v[bl->col.at(w)] += coef;
            }
            left.push_back(std::move(v));
          }
        }

        // arrows prepended before the lower space (applied first).
        std::vector<std::vector<Scalar>> right;
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
          if (q.arrow(a).source != i) continue;
          int m = q.arrow(a).target;
          auto it = ws.spaces[t - 1].find({m, j});
          if (it == ws.spaces[t - 1].end()) continue;
          const auto* low = gb.block(t - 1, m, j);
          for (std::size_t r = 0; r < it->second.rows(); ++r) {
            std::vector<Scalar> v(width, Scalar::zero(f));
            for (std::size_t c = 0; c < low->paths.size(); ++c) {
              Scalar coef = it->second.at(r, c);
              if (coef.is_zero()) continue;
              Path w{i, {static_cast<int>(a)}};
              w.arrows.insert(w.arrows.end(), low->paths[c].arrows.begin(),
                              low->paths[c].arrows.end());
              v[bl->col.at(w)] += coef;
            }
            right.push_back(std::move(v));
          }
        }

        Matrix meet = intersect(row_space(Matrix::from_rows(f, left, width)),
                                row_space(Matrix::from_rows(f, right, width)));
        if (meet.rows() > 0) ws.spaces[t][{i, j}] = std::move(meet);
      }
  }

  return ws;
}

namespace {

/// Column layout of the degree-d piece of Λ ⊗ K^s e_i: one slot per
/// (word-space end j, row v of K^s(i->j), algebra-end j', basis path of the
/// block (d-s, j -> j')).
struct TensorLayout {
  std::map<std::tuple<int, int, int>, std::size_t> offset;  // (j, v, j')
  std::size_t dim = 0;

  static TensorLayout of(const GradedBasis& gb, const WordSpaces& ws, int s, int d, int i) {
    TensorLayout lay;
    int nv = static_cast<int>(gb.quiver().num_vertices());
    for (int j = 0; j < nv; ++j) {
      int kd = ws.dim(s, i, j);
      for (int v = 0; v < kd; ++v)
        for (int jp = 0; jp < nv; ++jp) {
          int bd = gb.dim(d - s, j, jp);
          if (bd == 0) continue;
          lay.offset[{j, v, jp}] = lay.dim;
          lay.dim += static_cast<std::size_t>(bd);
        }
    }
    return lay;
  }
};

}  // namespace

std::map<std::pair<int, int>, int> complex_homology(const GradedBasis& gb, const WordSpaces& ws,
                                                    int vertex) {
  const BoundQuiver& q = gb.quiver();
  const Field f = q.field();
  const int cap = gb.max_degree();
  const int nv = static_cast<int>(q.num_vertices());

  int smax = 0;
  for (int s = ws.cap; s >= 1; --s)
    if (ws.dim_from(s, vertex) > 0) {
      smax = s;
      break;
    }

  // rank[s][d]: rank of the differential leaving position s in internal
  // degree d (s >= 1; the position-0 term maps out of the complex).
  std::map<int, std::map<int, int>> rank;
  for (int s = 1; s <= smax; ++s) {
    for (int d = s; d <= cap; ++d) {
      TensorLayout dom = TensorLayout::of(gb, ws, s, d, vertex);
      if (dom.dim == 0) continue;
      TensorLayout tgt = TensorLayout::of(gb, ws, s - 1, d, vertex);
      std::vector<std::vector<Scalar>> rows;
      rows.reserve(dom.dim);
      for (int j = 0; j < nv; ++j) {
        int kd = ws.dim(s, vertex, j);
        if (kd == 0) continue;
        const Matrix& kspace = ws.spaces[s].at({vertex, j});
        const auto* words = gb.block(s, vertex, j);

        // Split each word-space row by its last-applied arrow; the pieces
        // land in the lower word space by construction.
        // per row v: list of (arrow a, coeffs over K^{s-1}(vertex -> src a))
        std::vector<std::vector<std::pair<std::size_t, std::vector<Scalar>>>> split(kd);
        for (int v = 0; v < kd; ++v) {
          std::map<std::size_t, std::vector<Scalar>> parts;
          for (std::size_t c = 0; c < words->paths.size(); ++c) {
            Scalar coef = kspace.at(v, c);
            if (coef.is_zero()) continue;
            const Path& w = words->paths[c];
            std::size_t a = static_cast<std::size_t>(w.arrows.back());
            int m = q.arrow(static_cast<int>(a)).source;
            const auto* low = gb.block(s - 1, vertex, m);
            auto& vec = parts[a];
            if (vec.empty()) vec.assign(low->paths.size(), Scalar::zero(f));
            Path init{w.source, {w.arrows.begin(), w.arrows.end() - 1}};
            vec[low->col.at(init)] += coef;
          }
          for (auto& [a, wordvec] : parts) {
            int m = q.arrow(static_cast<int>(a)).source;
            auto it = ws.spaces[s - 1].find({vertex, m});
            if (it == ws.spaces[s - 1].end())
              throw std::logic_error("word space misses a split component");
            std::vector<Scalar> coeffs;
            std::vector<Scalar> rem = reduce_against(it->second, wordvec, &coeffs);
            for (const Scalar& x : rem)
              if (!x.is_zero())
                throw std::logic_error("word split leaves the lower space");
            split[v].push_back({a, std::move(coeffs)});
          }
        }

        for (int v = 0; v < kd; ++v)
          for (int jp = 0; jp < nv; ++jp) {
            const auto* bl = gb.block(d - s, j, jp);
            if (bl == nullptr || bl->basis.empty()) continue;
            for (const Path& b : bl->basis) {
              std::vector<Scalar> out(tgt.dim, Scalar::zero(f));
              for (const auto& [a, kcoef] : split[v]) {
                int m = q.arrow(static_cast<int>(a)).source;
                Element prod = gb.multiply(path_as_element(q, b),
                                           path_as_element(q, q.arrow_path(static_cast<int>(a))));
                if (prod.is_zero()) continue;
                std::vector<Scalar> pc = gb.normal_coords(prod);
                for (std::size_t u = 0; u < kcoef.size(); ++u) {
                  if (kcoef[u].is_zero()) continue;
                  auto oit = tgt.offset.find({m, static_cast<int>(u), jp});
                  if (oit == tgt.offset.end())
                    throw std::logic_error("target layout misses a block");
                  for (std::size_t e = 0; e < pc.size(); ++e)
                    out[oit->second + e] += kcoef[u] * pc[e];
                }
              }
              rows.push_back(std::move(out));
            }
          }
      }
      int r = static_cast<int>(rref(Matrix::from_rows(f, rows, tgt.dim)).rank);
      if (r > 0) rank[s][d] = r;
    }
  }

  std::map<std::pair<int, int>, int> hom;
  for (int s = 1; s <= smax; ++s) {
    for (int d = s; d <= cap; ++d) {
      int dims = static_cast<int>(TensorLayout::of(gb, ws, s, d, vertex).dim);
      if (dims == 0) continue;
      int out_rank = rank.count(s) && rank[s].count(d) ? rank[s][d] : 0;
      int in_rank = rank.count(s + 1) && rank[s + 1].count(d) ? rank[s + 1][d] : 0;
      int h = dims - out_rank - in_rank;
      if (h < 0) throw std::logic_error("negative homology dimension");
      if (h > 0) hom[{s, d}] = h;
    }
  }
  return hom;
}

KoszulReport classify_pq(const GradedBasis& gb) {
  const BoundQuiver& q = gb.quiver();
  for (const Element& r : q.relations())
    if (r.degree != 2)
      throw std::invalid_argument("classification needs a quadratic presentation; relation '" +
                                  q.element_string(r) + "' has degree " +
                                  std::to_string(r.degree));

  KoszulReport kr;
  kr.cap = gb.max_degree();
  for (int t = kr.cap; t >= 0; --t)
    if (gb.dim_total(t) > 0) {
      kr.p = t;
      break;
    }
  kr.p_at_cap = (kr.p == kr.cap);

  WordSpaces ws = word_spaces(gb, kr.cap);
  kr.kmax = std::max(0, ws.top_nonzero());

  for (std::size_t i = 0; i < q.num_vertices(); ++i) {
    auto hom = complex_homology(gb, ws, static_cast<int>(i));
    for (const auto& [sd, h] : hom)
      kr.homology.push_back({static_cast<int>(i), sd.first, sd.second, h});
  }
  std::sort(kr.homology.begin(), kr.homology.end(),
            [](const HomologyEntry& a, const HomologyEntry& b) {
              return std::tie(a.position, a.degree, a.vertex) <
                     std::tie(b.position, b.degree, b.vertex);
            });

  if (kr.homology.empty()) {
    kr.koszul_up_to_cap = true;
    if (kr.p_at_cap)
      kr.notes.push_back("top degree reaches the cap; raise it to certify more");
    return kr;
  }

  kr.q = kr.homology.front().position;
  bool ok = true;
  if (kr.p_at_cap) {
    kr.notes.push_back("top degree reaches the cap; the classification is not certified");
    ok = false;
  }
  if (kr.p < 1) {
    kr.notes.push_back("the algebra is concentrated in degree 0");
    ok = false;
  }
  if (kr.kmax > *kr.q) {
    kr.notes.push_back("word space K^" + std::to_string(kr.kmax) +
                       " is nonzero beyond position q = " + std::to_string(*kr.q));
    ok = false;
  }
  for (const HomologyEntry& h : kr.homology) {
    if (h.position != *kr.q) {
      kr.notes.push_back("homology at position " + std::to_string(h.position) +
                         " outside q = " + std::to_string(*kr.q));
      ok = false;
      continue;
    }
    if (h.degree != kr.p + *kr.q) {
      kr.notes.push_back("homology at position q has internal degree " +
                         std::to_string(h.degree) + ", expected p+q = " +
                         std::to_string(kr.p + *kr.q));
      ok = false;
      continue;
    }
    // The surviving class must have the dimension of Λ_p ⊗ K^q at its vertex.
    int expected = 0;
    for (std::size_t j = 0; j < q.num_vertices(); ++j) {
      int kd = ws.dim(*kr.q, h.vertex, static_cast<int>(j));
      if (kd == 0) continue;
      int lam = 0;
      for (std::size_t jp = 0; jp < q.num_vertices(); ++jp)
        lam += gb.dim(kr.p, static_cast<int>(j), static_cast<int>(jp));
      expected += kd * lam;
    }
    if (h.dim != expected) {
      kr.notes.push_back("vertex " + q.vertex_name(h.vertex) + ": homology dimension " +
                         std::to_string(h.dim) + ", expected " + std::to_string(expected));
      ok = false;
    }
  }
  kr.almost_koszul = ok;
  return kr;
}

bool n_translation_algebra_verdict(const KoszulReport& kr, const TranslationCheck& tc) {
  if (!tc.pass() || tc.null_structure) return false;
  if (kr.p != tc.n + 1) return false;
  if (kr.koszul_up_to_cap) return true;
  return kr.almost_koszul && kr.q && *kr.q >= 2;
}

}  // namespace ntrans
