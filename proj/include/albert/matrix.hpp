#pragma once

#include <optional>
#include <vector>

#include "albert/field.hpp"

namespace albert {

// Dense matrix over an explicit field. Row-major.
class Matrix {
 public:
  Matrix(FieldPtr K, size_t rows, size_t cols);
  static Matrix identity(FieldPtr K, size_t n);

  const FieldPtr& field() const { return K_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Fe& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Fe& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Matrix mul(const Matrix& other) const;
  std::vector<Fe> apply(const std::vector<Fe>& v) const;  // matrix * column
  bool eq(const Matrix& other) const;

 private:
  FieldPtr K_;
  size_t rows_, cols_;
  std::vector<Fe> a_;
};

Fe mat_det(const Matrix& m);  // square only, ShapeError otherwise
size_t mat_rank(Matrix m);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
  SolveStatus status;
  // Present unless inconsistent; for underdetermined systems free variables
  // are set to zero.
  std::optional<std::vector<Fe>> solution;
  size_t rank;
};

// Solve m * x = rhs over the matrix field.
SolveResult mat_solve(const Matrix& m, const std::vector<Fe>& rhs);

}  // namespace albert
