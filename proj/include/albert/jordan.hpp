#pragma once

#include <optional>

#include "albert/algebra_table.hpp"
#include "albert/matrix.hpp"
#include "albert/poly.hpp"

namespace albert {

// Generic degree-3 coefficients of an element: a^3 = T a^2 - S a + N 1.
struct GenericCoefficients {
  Fe T, S, N;
};

// Unital subalgebra K[a], described by the minimal polynomial of a.
struct SubalgebraInfo {
  size_t dimension;
  Poly min_poly;                 // monic
  // True when K[a] is a field, i.e. min_poly is irreducible; nullopt when
  // the ambient field offers no irreducibility decision procedure.
  std::optional<bool> is_field;
};

struct JordanCounterexample {
  Vec x, y;
};

struct JordanSuiteResult {
  size_t samples = 0;
  size_t failures = 0;
  std::vector<JordanCounterexample> counterexamples;  // at most 3 recorded
};

// Commutative unital algebra of degree at most 3 given by its multiplication
// table. Construction validates the unit and commutativity; the Jordan
// identity itself is a statistical property checked by jordan_identity_suite.
class JordanAlgebra {
 public:
  // validates unit action and commutativity
  static JordanAlgebra from_table(AlgebraTable table);
  // x o y = (xy + yx)/2 on an associative table
  static JordanAlgebra plus_of(const AlgebraTable& assoc);
  // no validation at all; exists so a deliberately corrupted table can be
  // wrapped for mutation-regression runs
  static JordanAlgebra raw(AlgebraTable table);

  const FieldPtr& field() const { return table_.field(); }
  size_t dim() const { return table_.dim(); }
  const AlgebraTable& table() const { return table_; }
  const Vec& unit() const { return table_.unit(); }

  Vec product(const Vec& x, const Vec& y) const { return table_.product(x, y); }
  Vec square(const Vec& x) const { return table_.product(x, x); }

  // generic trace T(x) = (3/d) tr(L_x); agrees with the degree-3 generic
  // trace on the algebras built here (d in {1, 9, 27})
  Fe trace_form(const Vec& x) const;

  GenericCoefficients generic_coeffs(const Vec& a) const;
  Vec adjoint(const Vec& a) const;   // a^2 - T(a) a + S(a) 1
  Vec inverse(const Vec& a) const;   // adjoint(a)/N(a); NotInvertible when N = 0
  bool is_invertible(const Vec& a) const;

  // U_p as a d x d matrix: U_p x = 2 p o (p o x) - p^2 o x
  Matrix u_operator(const Vec& p) const;
  Vec u_apply(const Vec& p, const Vec& x) const;

  // p-isotope: x o_p y = x o (y o p) + y o (x o p) - (x o y) o p, unit p^{-1}
  JordanAlgebra isotope(const Vec& p) const;
  Vec isotope_product(const Vec& p, const Vec& x, const Vec& y) const;

  SubalgebraInfo subalgebra_generated(const Vec& a) const;

 private:
  explicit JordanAlgebra(AlgebraTable table);
  void compute_trace_coeffs();

  AlgebraTable table_;
  std::vector<Fe> tau_;  // tau_i = tr(L_{e_i})
  Fe trace_scale_;       // 3/d
};

// Randomized Jordan identity check: (x o y) o x^2 = x o (y o x^2).
JordanSuiteResult jordan_identity_suite(const JordanAlgebra& J, size_t samples,
                                        uint64_t seed);

}  // namespace albert
