#include "springerkit/ffield/matrix.hpp"

#include <algorithm>
#include <deque>

#include "springerkit/error.hpp"

namespace springerkit {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem{1};
  return m;
}

Matrix Matrix::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  Matrix m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = field->from_int(rows[r][c]);
  }
  return m;
}

std::vector<FieldElem> Matrix::column(std::size_t c) const {
  std::vector<FieldElem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](FieldElem x) { return x.code == 0; });
}

FieldElem Matrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::NotSquare, "trace of a non-square matrix");
  FieldElem t = f().zero();
  for (std::size_t i = 0; i < rows_; ++i) t = f().add(t, (*this)(i, i));
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::vstack(const Matrix& b) const {
  if (rows_ == 0 && !field_) return b;
  if (b.rows() == 0) return *this;
  require_same_field(*this, b);
  if (b.cols() != cols_) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix out(field_, rows_ + b.rows(), cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field() || !b.field() || !a.f().same_as(b.f()))
    throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.field_ && b.field_ && !a.f().same_as(b.f())) return false;
  return a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product dimension mismatch");
  Matrix c(a.field(), a.rows(), b.cols());
  const Field& f = a.f();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const FieldElem x = a(i, l);
      if (x.code != 0) f.axpy(out, x, b.row(l));
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.f().add(a.data_[i], b.data_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.f().sub(a.data_[i], b.data_[i]);
  return c;
}

Matrix operator*(FieldElem s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x = a.f().mul(s, x);
  return c;
}

std::vector<FieldElem> Matrix::apply(std::span<const FieldElem> v) const {
  std::vector<FieldElem> out(rows_);
  const Field& fld = f();
  for (std::size_t r = 0; r < rows_; ++r) {
    FieldElem acc = fld.zero();
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].code == 0) continue;
      acc = fld.add(acc, fld.mul((*this)(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

RowEchelon row_reduce(const Matrix& a) {
  RowEchelon out{a, {}};
  Matrix& m = out.reduced;
  if (a.empty()) return out;
  const Field& f = a.f();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col).code == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(pivot_row).begin());
    const FieldElem scale = f.inv(m(pivot_row, col));
    for (auto& x : m.row(pivot_row)) x = f.mul(x, scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col).code == 0) continue;
      f.axpy(m.row(i), f.neg(m(i, col)), m.row(pivot_row));
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

Matrix linsolve(const Matrix& a) {
  const Field& f = a.f();
  const RowEchelon re = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : re.pivots) is_pivot[p] = true;
  // One vector per free column j, with a 1 in position j.
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix basis(a.field(), free_cols.size(), n);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t j = free_cols[i];
    basis(i, j) = f.one();
    for (std::size_t r = 0; r < re.pivots.size(); ++r) basis(i, re.pivots[r]) = f.neg(re.reduced(r, j));
  }
  return row_reduce(basis).reduced;
}

Matrix nullspace(const Matrix& a) { return linsolve(a); }

std::optional<std::vector<FieldElem>> solve(const Matrix& a, std::span<const FieldElem> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side size");
  const Field& f = a.f();
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  const RowEchelon re = row_reduce(aug);
  std::vector<FieldElem> x(a.cols(), f.zero());
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    if (re.pivots[r] == a.cols()) return std::nullopt;
    x[re.pivots[r]] = re.reduced(r, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  Matrix aug(a.field(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(a.field(), n));
  const RowEchelon re = row_reduce(aug);
  if (re.rank() < n || re.pivots[n - 1] != n - 1) return std::nullopt;
  return re.reduced.block(0, n, n, n);
}

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t ambient_dim) : field_(std::move(field)), n_(ambient_dim) {}

std::vector<FieldElem> EchelonBasis::reduce(std::vector<FieldElem> v) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElem c = v[pivots_[i]];
    if (c.code != 0) f.axpy(v, f.neg(c), rows_[i]);
  }
  return v;
}

bool EchelonBasis::insert(std::vector<FieldElem> v) {
  const Field& f = *field_;
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < n_ && v[piv].code == 0) ++piv;
  if (piv == n_) return false;
  const FieldElem scale = f.inv(v[piv]);
  for (auto& x : v) x = f.mul(x, scale);
  for (auto& row : rows_) {
    const FieldElem c = row[piv];
    if (c.code != 0) f.axpy(row, f.neg(c), v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool EchelonBasis::contains(std::span<const FieldElem> v) const {
  const auto r = reduce({v.begin(), v.end()});
  return std::all_of(r.begin(), r.end(), [](FieldElem x) { return x.code == 0; });
}

std::vector<FieldElem> EchelonBasis::coordinates(std::span<const FieldElem> v) const {
  std::vector<FieldElem> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Matrix EchelonBasis::matrix() const {
  Matrix m(field_, rows_.size(), n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) std::copy(rows_[i].begin(), rows_[i].end(), m.row(i).begin());
  return m;
}

EchelonBasis spin(FieldPtr field, const std::vector<std::vector<FieldElem>>& seeds,
                  std::span<const Matrix> generators) {
  if (seeds.empty()) throw Error(ErrorKind::DimensionMismatch, "spin needs at least one seed vector");
  EchelonBasis basis(std::move(field), seeds.front().size());
  std::deque<std::vector<FieldElem>> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    if (!basis.insert(v)) continue;
    if (basis.dim() == basis.ambient_dim()) break;
    for (const Matrix& g : generators) queue.push_back(g.apply(v));
  }
  return basis;
}

}  // namespace springerkit
