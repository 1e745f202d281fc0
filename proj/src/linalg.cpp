#include "ntrans/linalg.hpp"

#include <stdexcept>

namespace ntrans {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::append_row(const std::vector<Scalar>& v) {
  if (v.size() != cols_) throw std::logic_error("append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix product: shape mismatch");
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
    }
  return p;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw std::logic_error("apply: length mismatch");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(row, c));
    Scalar inv = a.at(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(row, c);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

Matrix row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix out(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.reduced.row(i));
  out.col_labels = m.col_labels;
  return out;
}

Matrix kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  Matrix basis(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, free);
    basis.append_row(v);
  }
  return row_space(basis);
}

Matrix intersect(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::logic_error("intersect: ambient dimension mismatch");
  const Field f = a.field();
  const std::size_t n = a.cols();
  // x in span(a) ∩ span(b) iff x = aᵀu = bᵀw; stack [aᵀ | -bᵀ] and read the
  // intersection off the kernel's u-part.
  Matrix stacked(f, n, a.rows() + b.rows());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) stacked.at(c, r) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) stacked.at(c, a.rows() + r) = -b.at(r, c);
  }
  Matrix null = kernel(stacked);
  Matrix vecs(f, 0, n);
  for (std::size_t k = 0; k < null.rows(); ++k) {
    std::vector<Scalar> x(n, Scalar::zero(f));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!null.at(k, r).is_zero()) x[c] += null.at(k, r) * a.at(r, c);
    vecs.append_row(x);
  }
  return row_space(vecs);
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw std::logic_error("solve: rhs length mismatch");
  const Field f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  RrefResult r = rref(aug);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    if (r.pivots[i] == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  std::vector<Scalar> x(m.cols(), Scalar::zero(f));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced.at(i, m.cols());
  return x;
}

std::vector<Scalar> reduce_against(const Matrix& rref_rows, std::vector<Scalar> v,
                                   std::vector<Scalar>* coeffs) {
  if (coeffs) coeffs->assign(rref_rows.rows(), Scalar::zero(rref_rows.field()));
  for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < rref_rows.cols() && rref_rows.at(r, lead).is_zero()) ++lead;
    if (lead == rref_rows.cols()) continue;
    const Scalar& c = v[lead];
    if (c.is_zero()) continue;
    Scalar factor = c;  // leading entry of an rref row is 1
    for (std::size_t k = lead; k < rref_rows.cols(); ++k) v[k] -= factor * rref_rows.at(r, k);
    if (coeffs) (*coeffs)[r] = factor;
  }
  return v;
}

bool in_span(const Matrix& rref_rows, const std::vector<Scalar>& v) {
  std::vector<Scalar> res = reduce_against(rref_rows, v);
  for (const Scalar& s : res)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace ntrans
