#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ntrans/field.hpp"

namespace ntrans {

/// Dense exact matrix over Q or GF(p). Row/column labels are opaque tags
/// naming basis elements for reporting; the algorithms never interpret them.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  /// Build from explicit rows (all the same length).
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  void append_row(const std::vector<Scalar>& v);
  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  /// Matrix-vector product (x has cols() entries).
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;                   // the unique reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

/// Gauss–Jordan over the exact field. The result is canonical: leading
/// entries 1, zeros above and below each pivot, zero rows last.
RrefResult rref(const Matrix& m);

/// Canonical basis of the row space: rref rows with zero rows dropped.
Matrix row_space(const Matrix& m);

/// Right null space {x : m·x = 0}. Rows of the result are a canonical (rref)
/// basis; empty kernel gives a 0×cols matrix.
Matrix kernel(const Matrix& m);

/// Rows of `a` and `b` span subspaces of the same k^n; returns the canonical
/// basis of their intersection.
Matrix intersect(const Matrix& a, const Matrix& b);

/// One exact solution of m·x = rhs with every free coordinate set to zero,
/// or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

/// Reduce `v` against canonical rref rows: returns the residual and fills
/// `coeffs` (one per row) so that v = Σ coeffs[r]·row[r] + residual.
std::vector<Scalar> reduce_against(const Matrix& rref_rows, std::vector<Scalar> v,
                                   std::vector<Scalar>* coeffs = nullptr);

/// Is v in the row space of canonical rref rows?
bool in_span(const Matrix& rref_rows, const std::vector<Scalar>& v);

}  // namespace ntrans
