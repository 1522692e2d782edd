#pragma once

#include <array>

#include "albert/algebra_table.hpp"

namespace albert {

// Degree-3 associative algebra D over K: either the split 3x3 matrix algebra
// or a cyclic algebra (L/K, sigma, b) with L a cubic cyclic extension.
// Reduced trace and norm go through a stored splitting embedding into 3x3
// matrices over L (L = K in the split case); values provably lie in K, and
// the implementation checks that and strips the extension coordinates.
class DegreeThreeAlgebra {
 public:
  static DegreeThreeAlgebra matrix3(FieldPtr K);
  // modulus: monic cubic over K; sigma_image: coordinates of sigma(x) as a
  // polynomial in the generator; b: nonzero.
  static DegreeThreeAlgebra cyclic(FieldPtr K, Poly modulus, Poly sigma_image, Fe b);

  const FieldPtr& field() const { return K_; }
  size_t dim() const { return 9; }
  const AlgebraTable& table() const { return table_; }
  const Vec& unit() const { return table_.unit(); }
  const std::string& kind() const { return kind_; }
  const nlohmann::ordered_json& params() const { return params_; }

  Vec product(const Vec& u, const Vec& v) const;
  Fe reduced_trace(const Vec& u) const;
  Fe reduced_norm(const Vec& u) const;
  // S_D(u) = (T(u)^2 - T(u^2)) / 2, the middle generic coefficient
  Fe reduced_quad(const Vec& u) const;
  Vec tilde(const Vec& u) const;            // T(u)*1 - u
  Vec cross(const Vec& u, const Vec& v) const;
  Vec adjoint(const Vec& u) const;          // u^2 - T(u) u + S(u) 1

  // splitting image of an element as a row-major 3x3 matrix over L
  std::array<Fe, 9> image(const Vec& u) const;
  const FieldPtr& splitting_field() const { return L_; }

 private:
  DegreeThreeAlgebra(FieldPtr K, AlgebraTable table, std::string kind);
  void finish_construction();
  Fe strip(const Fe& l, const char* what) const;

  FieldPtr K_;
  AlgebraTable table_;
  std::string kind_;
  FieldPtr L_;  // == K_ for matrix3
  std::vector<std::array<Fe, 9>> images_;
  std::vector<Fe> trace_coeffs_;
  nlohmann::ordered_json params_;
};

}  // namespace albert
