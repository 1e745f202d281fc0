#include "ntrans/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntrans/linalg.hpp"

namespace ntrans {

namespace {

struct FreeGen {
  int vertex = -1;
  int degree = 0;
};

// A graded free module F = (+)_k  Lambda e_{v_k} shifted into degree d_k,
// together with the images of its generators in the previous module,
// stored as images[k][m] in e_{v_k} Lambda e_{v_m'}.
struct FreeModule {
  std::vector<FreeGen> gens;
  std::vector<std::map<std::size_t, Element>> images;
};

// Coordinate layout of the degree-d piece of F at end vertex j: one slot per
// generator k and basis path of the block (d - d_k, v_k -> j).
struct PieceLayout {
  std::vector<std::size_t> gen;     // generator index per contributing block
  std::vector<std::size_t> offset;  // column offset of that block
  std::size_t dim = 0;

  static PieceLayout of(const GradedBasis& gb, const std::vector<FreeGen>& gens, int d, int j) {
    PieceLayout lay;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int t = d - gens[k].degree;
      if (t < 0) continue;
      std::size_t sz = static_cast<std::size_t>(gb.dim(t, gens[k].vertex, j));
      if (sz == 0) continue;
      lay.gen.push_back(k);
      lay.offset.push_back(lay.dim);
      lay.dim += sz;
    }
    return lay;
  }
};

Element path_as_element(const BoundQuiver& q, const Path& p) {
  return q.make_element({Term{p, Scalar::one(q.field())}});
}

}  // namespace

int ResolutionResult::multiplicity(int step, int vertex, int degree) const {
  for (const auto& e : betti)
    if (e.step == step && e.vertex == vertex && e.degree == degree) return e.multiplicity;
  return 0;
}

bool ResolutionResult::kernel_vanishes(int step) const {
  auto it = kernel_dims.find(step);
  if (it == kernel_dims.end()) return true;
  for (const auto& [d, k] : it->second)
    if (k != 0) return false;
  return true;
}

ResolutionResult minimal_resolution(const GradedBasis& gb, int simple_vertex, int steps) {
  const BoundQuiver& q = gb.quiver();
  if (simple_vertex < 0 || static_cast<std::size_t>(simple_vertex) >= q.num_vertices())
    throw std::invalid_argument("minimal_resolution: vertex index out of range");
  if (steps < 0) throw std::invalid_argument("minimal_resolution: negative step count");

  const int cap = gb.max_degree();
  const std::size_t nv = q.num_vertices();
  const Field f = q.field();

  ResolutionResult res;
  res.simple_vertex = simple_vertex;
  res.steps = steps;
  res.cap = cap;
  res.betti.push_back({0, simple_vertex, 0, 1});

  FreeModule prev;  // F_{r-1}
  prev.gens.push_back({simple_vertex, 0});
  prev.images.emplace_back();  // augmentation target is not a free module; unused

  // syz[d][j]: canonical row basis of the degree-d syzygy space at end vertex
  // j, in the coordinates of PieceLayout::of(prev.gens, d, j).
  std::vector<std::vector<Matrix>> syz(cap + 1, std::vector<Matrix>(nv, Matrix(f, 0, 0)));

  // Bootstrap: the first syzygy of the simple is the whole radical of
  // Lambda e_i, i.e. every graded piece in degree >= 1.
  for (int d = 1; d <= cap; ++d)
    for (std::size_t j = 0; j < nv; ++j) {
      std::size_t sz = static_cast<std::size_t>(gb.dim(d, simple_vertex, static_cast<int>(j)));
      if (sz > 0) syz[d][j] = Matrix::identity(f, sz);
    }

  for (int r = 1; r <= steps; ++r) {
    // Flag incompleteness before generator extraction: pieces alive at the
    // cap may hide generators in degrees we cannot see.
    for (std::size_t j = 0; j < nv; ++j)
      if (syz[cap][j].rows() > 0) res.capped = true;

    // Minimal generators of the current syzygy: quotient by J * Syz.
    FreeModule cur;
    for (int d = 1; d <= cap; ++d) {
      for (std::size_t j = 0; j < nv; ++j) {
        if (syz[d][j].rows() == 0) continue;
        PieceLayout lay = PieceLayout::of(gb, prev.gens, d, static_cast<int>(j));

        // Span of arrow * (syzygy in degree d-1).
        std::vector<std::vector<Scalar>> jrows;
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
          const Arrow& ar = q.arrow(a);
          if (ar.target != static_cast<int>(j)) continue;
          const Matrix& low = syz[d - 1][ar.source];
          if (low.rows() == 0) continue;
          PieceLayout lolay = PieceLayout::of(gb, prev.gens, d - 1, ar.source);
          Element ael = q.make_element(
              {Term{q.arrow_path(a), Scalar::one(f)}});
          for (std::size_t rr = 0; rr < low.rows(); ++rr) {
            std::vector<Scalar> out(lay.dim, Scalar::zero(f));
            for (std::size_t blk = 0; blk < lolay.gen.size(); ++blk) {
              std::size_t k = lolay.gen[blk];
              int t = (d - 1) - prev.gens[k].degree;
              const auto& bl = *gb.block(t, prev.gens[k].vertex, ar.source);
              // Which block of the target layout holds generator k?
              auto kit = std::find(lay.gen.begin(), lay.gen.end(), k);
              if (kit == lay.gen.end()) continue;
              std::size_t koff = lay.offset[static_cast<std::size_t>(kit - lay.gen.begin())];
              for (std::size_t c = 0; c < bl.basis.size(); ++c) {
                Scalar coef = low.at(rr, lolay.offset[blk] + c);
                if (coef.is_zero()) continue;
                Element prod = gb.multiply(ael, path_as_element(q, bl.basis[c]));
                if (prod.is_zero()) continue;
                std::vector<Scalar> pc = gb.normal_coords(prod);
                for (std::size_t u = 0; u < pc.size(); ++u)
                  out[koff + u] += coef * pc[u];
              }
            }
            jrows.push_back(std::move(out));
          }
        }
        Matrix jspan = row_space(Matrix::from_rows(f, jrows, lay.dim));

        std::vector<std::vector<Scalar>> fresh;
        for (std::size_t rr = 0; rr < syz[d][j].rows(); ++rr) {
          std::vector<Scalar> v = reduce_against(jspan, syz[d][j].row(rr));
          bool zero = true;
          for (const auto& x : v)
            if (!x.is_zero()) { zero = false; break; }
          if (!zero) fresh.push_back(std::move(v));
        }
        Matrix newgens = row_space(Matrix::from_rows(f, fresh, lay.dim));
        if (newgens.rows() == 0) continue;

        res.betti.push_back({r, static_cast<int>(j), d, static_cast<int>(newgens.rows())});
        for (std::size_t g = 0; g < newgens.rows(); ++g) {
          cur.gens.push_back({static_cast<int>(j), d});
          std::map<std::size_t, Element> img;
          for (std::size_t blk = 0; blk < lay.gen.size(); ++blk) {
            std::size_t k = lay.gen[blk];
            int t = d - prev.gens[k].degree;
            const auto& bl = *gb.block(t, prev.gens[k].vertex, static_cast<int>(j));
            std::vector<Term> terms;
            for (std::size_t c = 0; c < bl.basis.size(); ++c) {
              Scalar coef = newgens.at(g, lay.offset[blk] + c);
              if (!coef.is_zero()) terms.push_back(Term{bl.basis[c], coef});
            }
            if (!terms.empty()) img.emplace(k, q.make_element(terms));
          }
          cur.images.push_back(std::move(img));
        }
      }
    }

    // Kernel of the differential F_r -> F_{r-1}, one graded piece at a time;
    // these kernels are the next syzygy spaces.
    std::vector<std::vector<Matrix>> next(cap + 1, std::vector<Matrix>(nv, Matrix(f, 0, 0)));
    for (int d = 0; d <= cap && !cur.gens.empty(); ++d) {
      for (std::size_t j = 0; j < nv; ++j) {
        PieceLayout dom = PieceLayout::of(gb, cur.gens, d, static_cast<int>(j));
        if (dom.dim == 0) continue;
        PieceLayout tgt = PieceLayout::of(gb, prev.gens, d, static_cast<int>(j));
        std::vector<std::vector<Scalar>> rows;
        rows.reserve(dom.dim);
        for (std::size_t blk = 0; blk < dom.gen.size(); ++blk) {
          std::size_t k = dom.gen[blk];
          int t = d - cur.gens[k].degree;
          const auto& bl = *gb.block(t, cur.gens[k].vertex, static_cast<int>(j));
          for (std::size_t c = 0; c < bl.basis.size(); ++c) {
            Element b = path_as_element(q, bl.basis[c]);
            std::vector<Scalar> out(tgt.dim, Scalar::zero(f));
            for (const auto& [m, x] : cur.images[k]) {
              Element prod = gb.multiply(b, x);
              if (prod.is_zero()) continue;
              auto mit = std::find(tgt.gen.begin(), tgt.gen.end(), m);
              if (mit == tgt.gen.end())
                throw std::logic_error("minimal_resolution: image misses target layout");
              std::size_t moff = tgt.offset[static_cast<std::size_t>(mit - tgt.gen.begin())];
              std::vector<Scalar> pc = gb.normal_coords(prod);
              for (std::size_t u = 0; u < pc.size(); ++u) out[moff + u] += pc[u];
            }
            rows.push_back(std::move(out));
          }
        }
        // rows[r] is the image of the r-th domain basis vector; the kernel of
        // the map is the left null space, i.e. the kernel of the transpose.
        Matrix ker = kernel(Matrix::from_rows(f, rows, tgt.dim).transposed());
        if (ker.rows() > 0) {
          res.kernel_dims[r][d] += static_cast<int>(ker.rows());
          next[d][j] = std::move(ker);
        }
      }
    }

    prev = std::move(cur);
    syz = std::move(next);
    if (prev.gens.empty()) break;  // resolution has terminated
  }

  std::sort(res.betti.begin(), res.betti.end(), [](const BettiEntry& a, const BettiEntry& b) {
    return std::tie(a.step, a.degree, a.vertex) < std::tie(b.step, b.degree, b.vertex);
  });
  return res;
}

}  // namespace ntrans
