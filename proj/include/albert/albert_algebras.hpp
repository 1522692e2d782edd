#pragma once

#include <array>
#include <functional>

#include "albert/composition.hpp"
#include "albert/degree3.hpp"
#include "albert/jordan.hpp"

namespace albert {

// First Tits construction J(D, mu): triples (x, y, z) over a degree-3
// associative algebra D, with the product
//   (x,y,z)(x',y',z') = 1/2 ( xx' + x'x + ~(yz') + ~(y'z),
//                             ~x y' + ~x' y + mu^{-1} cross(z, z'),
//                             z ~x' + z' ~x + mu cross(y, y') )
// where ~u = T(u) 1 - u and cross is the sharp cross product of D.
// Unit (1, 0, 0).
class TitsFirstAlbert {
 public:
  TitsFirstAlbert(DegreeThreeAlgebra D, Fe mu);

  const FieldPtr& field() const { return D_.field(); }
  const DegreeThreeAlgebra& coordinates() const { return D_; }
  const Fe& mu() const { return mu_; }
  const JordanAlgebra& jordan() const { return J_; }
  size_t dim() const { return 27; }

  // N(x,y,z) = N_D(x) + mu N_D(y) + mu^{-1} N_D(z) - T_D(xyz)
  Fe closed_norm(const Vec& v) const;

  std::array<Vec, 3> split(const Vec& v) const;
  Vec join(const Vec& x, const Vec& y, const Vec& z) const;

 private:
  DegreeThreeAlgebra D_;
  Fe mu_, mu_inv_;
  JordanAlgebra J_;
};

// Reduced Albert algebra H_3(C, Gamma): Gamma-hermitian 3x3 matrices over a
// composition algebra C under the anticommutator. Coordinates are ordered
// (xi1, xi2, xi3, c1, c2, c3) with each c-block in the basis of C.
class ReducedAlbert {
 public:
  ReducedAlbert(CompositionAlgebra C, std::array<Fe, 3> gamma);

  const FieldPtr& field() const { return C_.field(); }
  const CompositionAlgebra& coordinates() const { return C_; }
  const std::array<Fe, 3>& gamma() const { return gamma_; }
  const JordanAlgebra& jordan() const { return J_; }
  size_t dim() const { return 3 + 3 * C_.dim(); }

 private:
  // hermitian matrix model: element -> 3x3 matrix with entries in C
  std::array<Vec, 9> to_matrix(const Vec& v) const;
  Vec from_matrix(const std::array<Vec, 9>& m) const;

  CompositionAlgebra C_;
  std::array<Fe, 3> gamma_;
  JordanAlgebra J_;
};

// Full polarization of a cubic norm: Theta(x,y,z) =
//   N(x+y+z) - N(x+y) - N(x+z) - N(y+z) + N(x) + N(y) + N(z),
// stored on basis triples a <= b <= c. Theta(x,x,x) = 6 N(x).
class TrilinearNormForm {
 public:
  TrilinearNormForm(FieldPtr K, size_t dim,
                    const std::function<Fe(const Vec&)>& norm);

  size_t dim() const { return dim_; }
  const Fe& theta(size_t a, size_t b, size_t c) const;  // any index order
  // packed access for contraction loops: entries are in lexicographic order
  // of sorted triples
  const std::vector<Fe>& packed() const { return packed_; }
  size_t packed_index(size_t a, size_t b, size_t c) const;  // needs a<=b<=c

  Fe eval(const Vec& x, const Vec& y, const Vec& z) const;
  Fe norm_from_theta(const Vec& x) const;  // Theta(x,x,x)/6

 private:
  FieldPtr K_;
  size_t dim_;
  std::vector<size_t> off1_;
  std::vector<Fe> packed_;
};

struct SubalgebraSample {
  Vec element;
  size_t dimension;
  std::optional<bool> is_field;
};

struct DivisionProbeReport {
  size_t basis_checked = 0;
  size_t trials = 0;  // random trials actually performed
  std::vector<Vec> witnesses;  // nonzero elements of norm zero, at most 5
  std::vector<SubalgebraSample> subalgebras;
};

// Search for a nonzero element of norm zero: basis vectors first (so split
// algebras yield a deterministic witness), then seeded random elements. An
// empty witness list is evidence of division behaviour, never a proof.
DivisionProbeReport division_probe(const JordanAlgebra& J,
                                   const std::function<Fe(const Vec&)>& norm,
                                   size_t trials, size_t subalgebra_samples,
                                   uint64_t seed);

}  // namespace albert
