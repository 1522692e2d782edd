#include "albert/jordan.hpp"

#include "albert/errors.hpp"
#include "albert/roots.hpp"

namespace albert {

JordanAlgebra::JordanAlgebra(AlgebraTable table) : table_(std::move(table)) {
  compute_trace_coeffs();
}

void JordanAlgebra::compute_trace_coeffs() {
  const Field& F = *table_.field();
  const size_t d = table_.dim();
  tau_.assign(d, F.zero());
  for (size_t i = 0; i < d; ++i) {
    Fe t = F.zero();
    for (size_t k = 0; k < d; ++k) {
      for (const auto& [m, c] : table_.row(i, k))
        if (m == k) F.add_assign(t, c);
    }
    tau_[i] = t;
  }
  trace_scale_ = F.div(F.from_int(3), F.from_int(static_cast<long>(d)));
}

JordanAlgebra JordanAlgebra::from_table(AlgebraTable table) {
  table.check_unit();
  if (!table.is_commutative())
    fail(ErrorCode::ConstructionError, "Jordan multiplication table is not commutative");
  return JordanAlgebra(std::move(table));
}

JordanAlgebra JordanAlgebra::raw(AlgebraTable table) {
  return JordanAlgebra(std::move(table));
}

JordanAlgebra JordanAlgebra::plus_of(const AlgebraTable& assoc) {
  const FieldPtr& Kp = assoc.field();
  const Field& F = *Kp;
  const size_t d = assoc.dim();
  Fe half = F.inv(F.from_int(2));
  AlgebraTable t(Kp, d, assoc.labels());
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      Vec row = vecops::zero(F, d);
      for (const auto& [k, c] : assoc.row(i, j)) F.add_assign(row[k], c);
      for (const auto& [k, c] : assoc.row(j, i)) F.add_assign(row[k], c);
      for (Fe& c : row) c = F.mul(c, half);
      t.set_product(i, j, row);
      if (j != i) t.set_product(j, i, row);
    }
  t.set_unit(assoc.unit());
  return from_table(std::move(t));
}

Fe JordanAlgebra::trace_form(const Vec& x) const {
  const Field& F = *table_.field();
  Fe t = F.zero();
  for (size_t i = 0; i < x.size(); ++i) F.add_mul(t, x[i], tau_[i]);
  return F.mul(trace_scale_, t);
}

GenericCoefficients JordanAlgebra::generic_coeffs(const Vec& a) const {
  const FieldPtr& Kp = table_.field();
  const Field& F = *Kp;
  const size_t d = table_.dim();
  Vec a2 = square(a);
  Vec a3 = product(a2, a);

  // a^3 = N 1 + (-S) a + T a^2, unknowns ordered (N, -S, T)
  Matrix m(Kp, d, 3);
  const Vec& one = table_.unit();
  for (size_t r = 0; r < d; ++r) {
    m.at(r, 0) = one[r];
    m.at(r, 1) = a[r];
    m.at(r, 2) = a2[r];
  }
  SolveResult sr = mat_solve(m, a3);
  if (sr.status == SolveStatus::Unique) {
    const auto& s = *sr.solution;
    return GenericCoefficients{s[2], F.neg(s[1]), s[0]};
  }
  if (sr.status == SolveStatus::Inconsistent)
    fail(ErrorCode::NotDegreeThree, "element satisfies no monic cubic over the base field");

  // 1, a, a^2 dependent: the cubic is not unique, so take the generic one
  // through the trace form and Newton's identities
  Fe p1 = trace_form(a);
  Fe p2 = trace_form(a2);
  Fe p3 = trace_form(a3);
  Fe T = p1;
  Fe S = F.div(F.sub(F.mul(p1, p1), p2), F.from_int(2));
  Fe N = F.div(
      F.add(F.sub(F.mul(F.mul(p1, p1), p1), F.mul(F.from_int(3), F.mul(p1, p2))),
            F.mul(F.from_int(2), p3)),
      F.from_int(6));
  return GenericCoefficients{T, S, N};
}

Vec JordanAlgebra::adjoint(const Vec& a) const {
  const Field& F = *table_.field();
  GenericCoefficients gc = generic_coeffs(a);
  Vec r = square(a);
  r = vecops::sub(F, r, vecops::scale(F, gc.T, a));
  return vecops::add(F, r, vecops::scale(F, gc.S, table_.unit()));
}

bool JordanAlgebra::is_invertible(const Vec& a) const {
  return !table_.field()->is_zero(generic_coeffs(a).N);
}

Vec JordanAlgebra::inverse(const Vec& a) const {
  const Field& F = *table_.field();
  GenericCoefficients gc = generic_coeffs(a);
  if (F.is_zero(gc.N))
    fail(ErrorCode::NotInvertible, "element has generic norm zero");
  Vec r = square(a);
  r = vecops::sub(F, r, vecops::scale(F, gc.T, a));
  r = vecops::add(F, r, vecops::scale(F, gc.S, table_.unit()));
  Fe ninv = F.inv(gc.N);
  for (Fe& c : r) c = F.mul(c, ninv);
  return r;
}

Vec JordanAlgebra::u_apply(const Vec& p, const Vec& x) const {
  const Field& F = *table_.field();
  Vec px = product(p, x);
  Vec r = vecops::scale(F, F.from_int(2), product(p, px));
  return vecops::sub(F, r, product(square(p), x));
}

Matrix JordanAlgebra::u_operator(const Vec& p) const {
  const FieldPtr& Kp = table_.field();
  const size_t d = table_.dim();
  Matrix m(Kp, d, d);
  for (size_t k = 0; k < d; ++k) {
    Vec col = u_apply(p, vecops::basis(*Kp, d, k));
    for (size_t r = 0; r < d; ++r) m.at(r, k) = col[r];
  }
  return m;
}

Vec JordanAlgebra::isotope_product(const Vec& p, const Vec& x, const Vec& y) const {
  const Field& F = *table_.field();
  Vec r = product(x, product(y, p));
  r = vecops::add(F, r, product(y, product(x, p)));
  return vecops::sub(F, r, product(product(x, y), p));
}

JordanAlgebra JordanAlgebra::isotope(const Vec& p) const {
  const FieldPtr& Kp = table_.field();
  const Field& F = *Kp;
  const size_t d = table_.dim();
  Vec punit = inverse(p);  // NotInvertible when N(p) = 0

  // q_k = e_k o p; e_i o_p e_j = e_i o q_j + e_j o q_i - sum_k c_ijk q_k
  std::vector<Vec> q(d);
  for (size_t k = 0; k < d; ++k) q[k] = product(vecops::basis(F, d, k), p);

  AlgebraTable t(Kp, d, table_.labels());
  for (size_t i = 0; i < d; ++i) {
    Vec ei = vecops::basis(F, d, i);
    for (size_t j = i; j < d; ++j) {
      Vec row = product(ei, q[j]);
      row = vecops::add(F, row, product(vecops::basis(F, d, j), q[i]));
      for (const auto& [k, c] : table_.row(i, j))
        vecops::add_scaled(F, row, F.neg(c), q[k]);
      t.set_product(i, j, row);
      if (j != i) t.set_product(j, i, row);
    }
  }
  t.set_unit(std::move(punit));
  return from_table(std::move(t));
}

SubalgebraInfo JordanAlgebra::subalgebra_generated(const Vec& a) const {
  const FieldPtr& Kp = table_.field();
  const Field& F = *Kp;
  const size_t d = table_.dim();

  std::vector<Vec> powers;
  powers.push_back(table_.unit());
  for (size_t m = 1;; ++m) {
    Vec next = product(powers.back(), a);
    Matrix mm(Kp, d, m);
    for (size_t c = 0; c < m; ++c)
      for (size_t r = 0; r < d; ++r) mm.at(r, c) = powers[c][r];
    SolveResult sr = mat_solve(mm, next);
    if (sr.solution.has_value() && sr.rank == m) {
      // next = sum s_c a^c, so minpoly = t^m - sum s_c t^c
      Poly mp(m + 1, F.zero());
      for (size_t c = 0; c < m; ++c) mp[c] = F.neg((*sr.solution)[c]);
      mp[m] = F.one();
      std::optional<bool> is_field;
      if (m >= 1 && m <= 3) is_field = poly_irreducible(Kp, mp);
      return SubalgebraInfo{m, std::move(mp), is_field};
    }
    if (m > d)
      fail(ErrorCode::InternalConsistency, "powers of an element never became dependent");
    powers.push_back(std::move(next));
  }
}

JordanSuiteResult jordan_identity_suite(const JordanAlgebra& J, size_t samples,
                                        uint64_t seed) {
  const Field& F = *J.field();
  const size_t d = J.dim();
  SplitMix64 rng(seed);
  JordanSuiteResult out;
  for (size_t n = 0; n < samples; ++n) {
    Vec x = vecops::sample(F, d, rng);
    Vec y = vecops::sample(F, d, rng);
    Vec x2 = J.square(x);
    Vec lhs = J.product(J.product(x, y), x2);
    Vec rhs = J.product(x, J.product(y, x2));
    ++out.samples;
    if (!vecops::eq(F, lhs, rhs)) {
      ++out.failures;
      if (out.counterexamples.size() < 3)
        out.counterexamples.push_back(JordanCounterexample{x, y});
    }
  }
  return out;
}

}  // namespace albert
