#pragma once

#include "albert/algebra_table.hpp"
#include "albert/matrix.hpp"

namespace albert {

// Composition algebra of dimension 1, 2, 4, or 8 with conjugation, quadratic
// norm, and trace. Instances come from the ground field, Cayley-Dickson
// doubling, or the Zorn vector-matrix model of the split octonions.
class CompositionAlgebra {
 public:
  static CompositionAlgebra ground(FieldPtr K);
  static CompositionAlgebra cayley_dickson(const CompositionAlgebra& base, const Fe& lambda);
  static CompositionAlgebra zorn_split(FieldPtr K);

  const FieldPtr& field() const { return K_; }
  size_t dim() const { return table_.dim(); }
  const AlgebraTable& table() const { return table_; }
  const Vec& unit() const { return table_.unit(); }

  Vec product(const Vec& x, const Vec& y) const;
  Vec conjugate(const Vec& x) const;
  Fe norm(const Vec& x) const;
  Fe trace(const Vec& x) const;
  Fe norm_bilinear(const Vec& x, const Vec& y) const;  // N(x+y) - N(x) - N(y)

 private:
  CompositionAlgebra(FieldPtr K, AlgebraTable table, Matrix conj, std::vector<Fe> normq, std::vector<Fe> trace);
  void validate() const;

  FieldPtr K_;
  AlgebraTable table_;
  Matrix conj_;
  // upper-triangular coefficients: N(x) = sum_{i<=j} q[i*dim+j] x_i x_j
  std::vector<Fe> normq_;
  std::vector<Fe> trace_;
};

}  // namespace albert
