#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "springerkit/ffield/field.hpp"

namespace springerkit {

/// Dense row-major matrix over a finite field. Vectors are column vectors
/// when acted upon (v -> A v); bases of subspaces are stored as matrix rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// Entries are integers reduced into the prime subfield.
  static Matrix from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  FieldElem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<FieldElem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::vector<FieldElem> column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const noexcept;
  FieldElem trace() const;

  /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  /// Stacks the rows of b below this matrix.
  Matrix vstack(const Matrix& b) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(FieldElem s, const Matrix& a);

  /// A v for a column vector v.
  std::vector<FieldElem> apply(std::span<const FieldElem> v) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

/// Throws FieldMismatch unless both matrices live over the same field.
void require_same_field(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0}, one vector per row, the basis itself in reduced
/// row echelon form.
Matrix linsolve(const Matrix& a);
Matrix nullspace(const Matrix& a);

/// Some x with A x = b, if one exists.
std::optional<std::vector<FieldElem>> solve(const Matrix& a, std::span<const FieldElem> b);

std::optional<Matrix> inverse(const Matrix& a);

/// Incrementally maintained subspace basis in reduced row echelon form.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t ambient_dim);

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection onto the span, in the pivot sense.
  std::vector<FieldElem> reduce(std::vector<FieldElem> v) const;
  /// Returns true when v was independent and got added.
  bool insert(std::vector<FieldElem> v);
  bool contains(std::span<const FieldElem> v) const;
  /// Coordinates of a vector known to lie in the span.
  std::vector<FieldElem> coordinates(std::span<const FieldElem> v) const;

  /// Rows sorted by pivot column.
  Matrix matrix() const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<std::vector<FieldElem>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and stable under every generator.
EchelonBasis spin(FieldPtr field, const std::vector<std::vector<FieldElem>>& seeds,
                  std::span<const Matrix> generators);

}  // namespace springerkit
