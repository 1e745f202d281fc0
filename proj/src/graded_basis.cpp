#include "ntrans/graded_basis.hpp"

#include <algorithm>

namespace ntrans {

namespace {

// Guard against accidental combinatorial blowups on cyclic inputs.
constexpr std::size_t kMaxPathsPerDegree = 2'000'000;

}  // namespace

GradedBasis GradedBasis::compute(const BoundQuiver& q, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  GradedBasis gb;
  gb.q_ = &q;
  gb.cap_ = max_degree;

  const int nv = static_cast<int>(q.num_vertices());
  gb.paths_by_.assign(max_degree + 1, std::vector<std::vector<Path>>(nv));
  for (int i = 0; i < nv; ++i) gb.paths_by_[0][i].push_back(q.trivial_path(i));
  for (int t = 1; t <= max_degree; ++t) {
    std::size_t count = 0;
    for (int i = 0; i < nv; ++i) {
      for (const Path& p : gb.paths_by_[t - 1][i]) {
        int end = q.path_target(p);
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
          if (q.arrow(static_cast<int>(a)).source != end) continue;
          Path ext = p;
          ext.arrows.push_back(static_cast<int>(a));
          gb.paths_by_[t][i].push_back(std::move(ext));
        }
      }
      count += gb.paths_by_[t][i].size();
    }
    if (count > kMaxPathsPerDegree)
      throw CapExceeded("path count explodes at degree " + std::to_string(t));
  }

  // Group by (t, source, target) with columns in written-form order.
  for (int t = 0; t <= max_degree; ++t) {
    for (int i = 0; i < nv; ++i) {
      std::map<int, std::vector<Path>> by_target;
      for (const Path& p : gb.paths_by_[t][i]) by_target[q.path_target(p)].push_back(p);
      for (auto& [j, paths] : by_target) {
        std::sort(paths.begin(), paths.end(), [&](const Path& a, const Path& b) {
          return q.path_string(a) < q.path_string(b);
        });
        Block blk;
        blk.paths = std::move(paths);
        for (std::size_t c = 0; c < blk.paths.size(); ++c) blk.col[blk.paths[c]] = c;
        gb.blocks_[{t, i, j}] = std::move(blk);
      }
    }
  }

  // Relation span per block, degree by degree.  The two-sided ideal obeys
  //   I_t = (arrows)·I_{t-1} + R·(surviving paths of degree t - deg r),
  // so the row counts track quotient dimensions rather than raw path counts.
  // Once a whole degree dies, every later degree is swallowed by the ideal and
  // its blocks are marked in full (all columns pivotal) without any algebra.
  const Field& f = q.field();
  for (int i = 0; i < nv; ++i) {
    auto it = gb.blocks_.find({0, i, i});
    if (it == gb.blocks_.end()) continue;
    Block& blk = it->second;
    blk.rel_span = Matrix(f, 0, blk.paths.size());
    blk.is_pivot.assign(blk.paths.size(), false);
    blk.basis = blk.paths;
  }
  bool all_dead = false;
  for (int t = 1; t <= max_degree; ++t) {
    if (!all_dead && t >= 2) {
      int prev = 0;
      for (auto it = gb.blocks_.lower_bound({t - 1, 0, 0});
           it != gb.blocks_.end() && std::get<0>(it->first) == t - 1; ++it)
        prev += static_cast<int>(it->second.basis.size());
      all_dead = (prev == 0);
    }
    for (auto bit = gb.blocks_.lower_bound({t, 0, 0});
         bit != gb.blocks_.end() && std::get<0>(bit->first) == t; ++bit) {
      const auto& [bt, i, j] = bit->first;
      Block& blk = bit->second;
      if (all_dead) {
        blk.rel_span = Matrix(f, 0, blk.paths.size());
        blk.is_pivot.assign(blk.paths.size(), true);
        continue;
      }
      Matrix span(f, 0, blk.paths.size());
      // Arrows applied after the canonical ideal rows one degree down.
      for (int m = 0; m < nv; ++m) {
        auto wit = gb.blocks_.find({t - 1, i, m});
        if (wit == gb.blocks_.end()) continue;
        const Block& w = wit->second;
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
          const Arrow& ar = q.arrow(static_cast<int>(a));
          if (ar.source != m || ar.target != j) continue;
          for (std::size_t r = 0; r < w.rel_span.rows(); ++r) {
            std::vector<Scalar> row(blk.paths.size(), Scalar::zero(f));
            for (std::size_t c = 0; c < w.paths.size(); ++c) {
              if (w.rel_span.at(r, c).is_zero()) continue;
              Path ext = w.paths[c];
              ext.arrows.push_back(static_cast<int>(a));
              row[blk.col.at(ext)] += w.rel_span.at(r, c);
            }
            span.append_row(row);
          }
        }
      }
      // Relations applied after the surviving shorter paths.
      for (const Element& rel : q.relations()) {
        int head = t - rel.degree;
        if (head < 0 || rel.target != j) continue;
        auto vit = gb.blocks_.find({head, i, rel.source});
        if (vit == gb.blocks_.end()) continue;
        for (const Path& v : vit->second.basis) {
          std::vector<Scalar> row(blk.paths.size(), Scalar::zero(f));
          for (const Term& term : rel.terms) {
            Path whole = v;
            whole.arrows.insert(whole.arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
            row[blk.col.at(whole)] += term.coeff;
          }
          span.append_row(row);
        }
      }
      Matrix reduced = row_space(span);
      blk.rel_span = reduced;
      blk.is_pivot.assign(blk.paths.size(), false);
      for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < reduced.cols() && reduced.at(r, lead).is_zero()) ++lead;
        if (lead < reduced.cols()) blk.is_pivot[lead] = true;
      }
      for (std::size_t c = 0; c < blk.paths.size(); ++c)
        if (!blk.is_pivot[c]) blk.basis.push_back(blk.paths[c]);
    }
  }
  return gb;
}

const GradedBasis::Block* GradedBasis::block(int t, int i, int j) const {
  auto it = blocks_.find({t, i, j});
  return it == blocks_.end() ? nullptr : &it->second;
}

int GradedBasis::dim(int t, int i, int j) const {
  const Block* b = block(t, i, j);
  return b ? static_cast<int>(b->basis.size()) : 0;
}

int GradedBasis::dim_total(int t) const {
  int total = 0;
  for (const auto& [key, blk] : blocks_)
    if (std::get<0>(key) == t) total += static_cast<int>(blk.basis.size());
  return total;
}

int GradedBasis::dim_algebra() const {
  int total = 0;
  for (int t = 0; t <= cap_; ++t) total += dim_total(t);
  return total;
}

const std::vector<Path>& GradedBasis::paths_from(int t, int i) const {
  if (t < 0 || t > cap_) throw CapExceeded("paths_from beyond cap");
  return paths_by_[t][i];
}

const GradedBasis::Block* GradedBasis::block_of(const Element& e) const {
  if (e.degree > cap_) throw CapExceeded("element degree beyond cap");
  return block(e.degree, e.source, e.target);
}

std::vector<Scalar> GradedBasis::normal_coords(const Element& e) const {
  const Field& f = q_->field();
  if (e.is_zero()) return {};
  const Block* b = block_of(e);
  if (!b) throw std::invalid_argument("element lies in an empty block");
  std::vector<Scalar> vec(b->paths.size(), Scalar::zero(f));
  for (const Term& t : e.terms) vec[b->col.at(t.path)] += t.coeff;
  std::vector<Scalar> residual = reduce_against(b->rel_span, std::move(vec));
  std::vector<Scalar> coords;
  coords.reserve(b->basis.size());
  for (std::size_t c = 0; c < b->paths.size(); ++c)
    if (!b->is_pivot[c]) coords.push_back(residual[c]);
  return coords;
}

Element GradedBasis::normal_form(const Element& e) const {
  if (e.is_zero()) return e;
  const Block* b = block_of(e);
  std::vector<Scalar> coords = normal_coords(e);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) terms.push_back(Term{b->basis[k], coords[k]});
  Element nf = q_->make_element(std::move(terms));
  if (nf.is_zero()) {
    nf.source = e.source;
    nf.target = e.target;
    nf.degree = e.degree;
  }
  return nf;
}

bool GradedBasis::is_bound(const Element& e) const {
  if (e.is_zero()) return false;
  for (const Scalar& c : normal_coords(e))
    if (!c.is_zero()) return true;
  return false;
}

bool GradedBasis::is_bound_path(const Path& p) const {
  Element e;
  e.source = p.source;
  e.target = q_->path_target(p);
  e.degree = p.length();
  e.terms = {Term{p, Scalar::one(q_->field())}};
  return is_bound(e);
}

Element GradedBasis::multiply(const Element& x, const Element& y) const {
  if (x.is_zero() || y.is_zero()) {
    Element z;
    if (!y.is_zero() || y.source >= 0) z.source = y.source;
    if (!x.is_zero() || x.target >= 0) z.target = x.target;
    z.degree = x.degree + y.degree;
    return z;
  }
  if (y.target != x.source)
    throw std::invalid_argument("product endpoints do not compose: target(y) != source(x)");
  if (x.degree + y.degree > cap_)
    throw CapExceeded("product degree " + std::to_string(x.degree + y.degree) + " beyond cap " +
                      std::to_string(cap_));
  std::vector<Term> terms;
  for (const Term& ty : y.terms)
    for (const Term& tx : x.terms) {
      Path p = ty.path;  // y acts first
      p.arrows.insert(p.arrows.end(), tx.path.arrows.begin(), tx.path.arrows.end());
      terms.push_back(Term{p, tx.coeff * ty.coeff});
    }
  Element raw = q_->make_element(std::move(terms));
  if (raw.is_zero()) {
    raw.source = y.source;
    raw.target = x.target;
    raw.degree = x.degree + y.degree;
    return raw;
  }
  return normal_form(raw);
}

GradedBasis::Loewy GradedBasis::loewy_length() const {
  int top = -1;
  for (int t = cap_; t >= 0; --t)
    if (dim_total(t) > 0) {
      top = t;
      break;
    }
  Loewy l;
  l.value = top + 1;
  l.exceeds_cap = (top == cap_);
  return l;
}

}  // namespace ntrans
