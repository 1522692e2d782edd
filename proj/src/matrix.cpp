#include "albert/matrix.hpp"

namespace albert {

Matrix::Matrix(FieldPtr K, size_t rows, size_t cols)
    : K_(std::move(K)), rows_(rows), cols_(cols), a_(rows * cols, K_->zero()) {}

Matrix Matrix::identity(FieldPtr K, size_t n) {
  Matrix m(std::move(K), n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = m.K_->one();
  return m;
}

Matrix Matrix::mul(const Matrix& other) const {
  if (cols_ != other.rows_) fail(ErrorCode::ShapeError, "matrix product shape mismatch");
  Matrix r(K_, rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Fe& aik = at(i, k);
      if (K_->is_zero(aik)) continue;
      for (size_t j = 0; j < other.cols_; ++j) K_->add_mul(r.at(i, j), aik, other.at(k, j));
    }
  return r;
}

std::vector<Fe> Matrix::apply(const std::vector<Fe>& v) const {
  if (v.size() != cols_) fail(ErrorCode::ShapeError, "matrix apply shape mismatch");
  std::vector<Fe> r(rows_, K_->zero());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (K_->is_zero(at(i, j))) continue;
      K_->add_mul(r[i], at(i, j), v[j]);
    }
  return r;
}

bool Matrix::eq(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!K_->eq(a_[i], other.a_[i])) return false;
  return true;
}

Fe mat_det(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeError, "determinant of a non-square matrix");
  const Field& K = *m.field();
  Matrix w = m;
  size_t n = m.rows();
  bool negate = false;
  Fe det = K.one();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && K.is_zero(w.at(pivot, col))) ++pivot;
    if (pivot == n) return K.zero();
    if (pivot != col) {
      for (size_t j = col; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      negate = !negate;
    }
    const Fe& pv = w.at(col, col);
    det = K.mul(det, pv);
    Fe pinv = K.inv(pv);
    for (size_t r = col + 1; r < n; ++r) {
      if (K.is_zero(w.at(r, col))) continue;
      Fe factor = K.mul(w.at(r, col), pinv);
      for (size_t j = col; j < n; ++j) w.at(r, j) = K.sub(w.at(r, j), K.mul(factor, w.at(col, j)));
    }
  }
  return negate ? K.neg(det) : det;
}

size_t mat_rank(Matrix w) {
  const Field& K = *w.field();
  size_t rank = 0;
  for (size_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
    size_t pivot = rank;
    while (pivot < w.rows() && K.is_zero(w.at(pivot, col))) ++pivot;
    if (pivot == w.rows()) continue;
    if (pivot != rank)
      for (size_t j = col; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(rank, j));
    Fe pinv = K.inv(w.at(rank, col));
    for (size_t r = rank + 1; r < w.rows(); ++r) {
      if (K.is_zero(w.at(r, col))) continue;
      Fe factor = K.mul(w.at(r, col), pinv);
      for (size_t j = col; j < w.cols(); ++j) w.at(r, j) = K.sub(w.at(r, j), K.mul(factor, w.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

SolveResult mat_solve(const Matrix& m, const std::vector<Fe>& rhs) {
  if (rhs.size() != m.rows()) fail(ErrorCode::ShapeError, "solve rhs length mismatch");
  const Field& K = *m.field();
  size_t n = m.rows(), c = m.cols();
  // augmented elimination to reduced row echelon form
  Matrix w(m.field(), n, c + 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < c; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, c) = rhs[i];
  }
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < c && row < n; ++col) {
    size_t pivot = row;
    while (pivot < n && K.is_zero(w.at(pivot, col))) ++pivot;
    if (pivot == n) continue;
    if (pivot != row)
      for (size_t j = col; j <= c; ++j) std::swap(w.at(pivot, j), w.at(row, j));
    Fe pinv = K.inv(w.at(row, col));
    for (size_t j = col; j <= c; ++j) w.at(row, j) = K.mul(w.at(row, j), pinv);
    for (size_t r = 0; r < n; ++r) {
      if (r == row || K.is_zero(w.at(r, col))) continue;
      Fe factor = w.at(r, col);
      for (size_t j = col; j <= c; ++j) w.at(r, j) = K.sub(w.at(r, j), K.mul(factor, w.at(row, j)));
    }
    pivot_col.push_back(col);
    ++row;
  }
  size_t rank = row;
  for (size_t r = rank; r < n; ++r)
    if (!K.is_zero(w.at(r, c))) return {SolveStatus::Inconsistent, std::nullopt, rank};
  std::vector<Fe> x(c, K.zero());
  for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = w.at(i, c);
  SolveStatus status = (rank == c) ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return {status, std::move(x), rank};
}

}  // namespace albert
