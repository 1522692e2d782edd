#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albert/albert_algebras.hpp"
#include "albert/errors.hpp"
#include "albert/rng.hpp"

using namespace albert;

namespace {

TitsFirstAlbert split_tits(const FieldPtr& K) {
  return TitsFirstAlbert(DegreeThreeAlgebra::matrix3(K), K->one());
}

ReducedAlbert zorn_h3(const FieldPtr& K) {
  return ReducedAlbert(CompositionAlgebra::zorn_split(K), {K->one(), K->one(), K->one()});
}

}  // namespace

TEST_CASE("tits construction: dimension, unit, basis product symmetry") {
  FieldPtr q = make_rationals();
  TitsFirstAlbert a = split_tits(q);
  CHECK(a.dim() == 27);
  CHECK(a.jordan().table().is_commutative());

  // Unit is (1_D, 0, 0): the first slot holds the identity matrix of D.
  Vec u = a.jordan().unit();
  Vec expect = vecops::zero(*q, 27);
  expect[0] = expect[4] = expect[8] = q->one();
  CHECK(vecops::eq(*q, u, expect));

  // (x, y, z)(1, 0, 0) = (x, y, z) on random triples.
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Vec v = vecops::sample(*q, 27, rng);
    CHECK(vecops::eq(*q, a.jordan().product(v, u), v));
  }
}

TEST_CASE("tits construction guards: mu = 0") {
  FieldPtr q = make_rationals();
  CHECK_THROWS_AS(TitsFirstAlbert(DegreeThreeAlgebra::matrix3(q), q->zero()), Error);
  try {
    TitsFirstAlbert(DegreeThreeAlgebra::matrix3(q), q->zero());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateParameter);
  }
}

TEST_CASE("closed norm: pinned values and cubic homogeneity") {
  FieldPtr q = make_rationals();
  TitsFirstAlbert a = split_tits(q);
  const Field& F = *q;

  CHECK(F.is_one(a.closed_norm(a.jordan().unit())));
  // (E_11, 0, 0) is nonzero of norm zero: the split coordinates leak in.
  CHECK(F.is_zero(a.closed_norm(vecops::basis(F, 27, 0))));

  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Vec v = vecops::sample(F, 27, rng);
    Fe lam = F.sample(rng);
    Fe l3 = F.mul(lam, F.mul(lam, lam));
    CHECK(F.eq(a.closed_norm(vecops::scale(F, lam, v)), F.mul(l3, a.closed_norm(v))));
  }
}

TEST_CASE("closed norm agrees with the generic-coefficient norm") {
  FieldPtr q = make_rationals();
  for (const Fe& mu : {q->one(), q->from_int(2), q->parse("-3/5")}) {
    TitsFirstAlbert a(DegreeThreeAlgebra::matrix3(q), mu);
    SplitMix64 rng(7);
    for (int i = 0; i < 120; ++i) {
      Vec v = vecops::sample(*q, 27, rng);
      CHECK(q->eq(a.closed_norm(v), a.jordan().generic_coeffs(v).N));
    }
  }
}

TEST_CASE("tits jordan identity over F_7 and Q") {
  for (const FieldPtr& K : {make_prime(7), make_rationals()}) {
    TitsFirstAlbert a = split_tits(K);
    JordanSuiteResult r = jordan_identity_suite(a.jordan(), 1000, 42);
    CHECK(r.samples == 1000);
    CHECK(r.failures == 0);
  }
}

TEST_CASE("split/join round trip") {
  FieldPtr q = make_rationals();
  TitsFirstAlbert a = split_tits(q);
  SplitMix64 rng(11);
  Vec v = vecops::sample(*q, 27, rng);
  auto parts = a.split(v);
  CHECK(vecops::eq(*q, a.join(parts[0], parts[1], parts[2]), v));
  // slot products feed the closed norm: N(x,0,0) = N_D(x).
  Vec only_x = a.join(parts[0], vecops::zero(*q, 9), vecops::zero(*q, 9));
  CHECK(q->eq(a.closed_norm(only_x), a.coordinates().reduced_norm(parts[0])));
}

TEST_CASE("h3 construction: unit, closure, jordan identity") {
  FieldPtr q = make_rationals();
  ReducedAlbert h = zorn_h3(q);
  CHECK(h.dim() == 27);

  // Unit is diag(1,1,1): xi coordinates 1, octonion slots 0.
  Vec u = h.jordan().unit();
  for (size_t i = 0; i < 27; ++i) {
    if (i < 3)
      CHECK(q->is_one(u[i]));
    else
      CHECK(q->is_zero(u[i]));
  }

  JordanSuiteResult r = jordan_identity_suite(h.jordan(), 1000, 42);
  CHECK(r.failures == 0);

  // Nontrivial Gamma changes the table but keeps the Jordan identity.
  ReducedAlbert h2(CompositionAlgebra::zorn_split(q), {q->one(), q->from_int(2), q->from_int(-3)});
  JordanSuiteResult r2 = jordan_identity_suite(h2.jordan(), 400, 9);
  CHECK(r2.failures == 0);

  CHECK_THROWS_AS(ReducedAlbert(CompositionAlgebra::zorn_split(q), {q->one(), q->zero(), q->one()}), Error);
}

TEST_CASE("h3 norm via generic coefficients: unit norm and homogeneity") {
  FieldPtr q = make_rationals();
  ReducedAlbert h = zorn_h3(q);
  const Field& F = *q;
  const JordanAlgebra& J = h.jordan();
  CHECK(F.is_one(J.generic_coeffs(J.unit()).N));

  SplitMix64 rng(13);
  for (int i = 0; i < 60; ++i) {
    Vec v = vecops::sample(F, 27, rng);
    Fe lam = F.sample(rng);
    Fe l3 = F.mul(lam, F.mul(lam, lam));
    CHECK(F.eq(J.generic_coeffs(vecops::scale(F, lam, v)).N, F.mul(l3, J.generic_coeffs(v).N)));
  }

  // Diagonal elements have norm xi1 xi2 xi3.
  Vec d = vecops::zero(F, 27);
  d[0] = F.from_int(2);
  d[1] = F.from_int(-3);
  d[2] = F.parse("1/4");
  CHECK(F.eq(J.generic_coeffs(d).N, F.parse("-3/2")));
}

TEST_CASE("trilinear polarization: frozen unit value and sampled identities") {
  FieldPtr q = make_rationals();
  TitsFirstAlbert a = split_tits(q);
  const Field& F = *q;
  auto normfn = [&](const Vec& v) { return a.closed_norm(v); };
  TrilinearNormForm theta(q, 27, normfn);

  // Theta(1,1,1) = 6 N(1) = 6.
  CHECK(F.eq(theta.eval(a.jordan().unit(), a.jordan().unit(), a.jordan().unit()), F.from_int(6)));

  SplitMix64 rng(17);
  for (int i = 0; i < 40; ++i) {
    Vec x = vecops::sample(F, 27, rng);
    Vec y = vecops::sample(F, 27, rng);
    Vec z = vecops::sample(F, 27, rng);
    Fe t = theta.eval(x, y, z);
    // Full symmetry.
    CHECK(F.eq(t, theta.eval(y, x, z)));
    CHECK(F.eq(t, theta.eval(z, y, x)));
    CHECK(F.eq(t, theta.eval(x, z, y)));
    // Theta(x,x,x) = 6 N(x) and the reconstruction N = Theta/6.
    CHECK(F.eq(theta.eval(x, x, x), F.mul(F.from_int(6), a.closed_norm(x))));
    CHECK(F.eq(theta.norm_from_theta(x), a.closed_norm(x)));
  }

  // Basis accessor agrees with evaluation on basis vectors, any index order.
  CHECK(F.eq(theta.theta(4, 2, 9), theta.theta(2, 9, 4)));
  CHECK(F.eq(theta.theta(4, 2, 9),
             theta.eval(vecops::basis(F, 27, 4), vecops::basis(F, 27, 2), vecops::basis(F, 27, 9))));
}

TEST_CASE("division probe: split algebras yield deterministic witnesses") {
  FieldPtr q = make_rationals();
  TitsFirstAlbert a = split_tits(q);
  auto normfn = [&](const Vec& v) { return a.closed_norm(v); };
  DivisionProbeReport r = division_probe(a.jordan(), normfn, 100, 4, 21);
  REQUIRE(!r.witnesses.empty());
  // First witness is the first basis vector (E_11, 0, 0).
  CHECK(vecops::eq(*q, r.witnesses.front(), vecops::basis(*q, 27, 0)));
  CHECK(r.witnesses.size() <= 5);
  for (const Vec& w : r.witnesses) {
    CHECK(!vecops::is_zero(*q, w));
    CHECK(q->is_zero(a.closed_norm(w)));
  }
  CHECK(r.subalgebras.size() == 4);
  for (const auto& s : r.subalgebras) CHECK(s.dimension <= 3);

  ReducedAlbert h = zorn_h3(q);
  const JordanAlgebra& J = h.jordan();
  auto hnorm = [&](const Vec& v) { return J.generic_coeffs(v).N; };
  DivisionProbeReport rh = division_probe(J, hnorm, 1000, 2, 23);
  CHECK(!rh.witnesses.empty());
  for (const Vec& w : rh.witnesses) {
    CHECK(!vecops::is_zero(*q, w));
    CHECK(q->is_zero(hnorm(w)));
  }
}

TEST_CASE("division flagship over Q(s): no witness in sampled trials") {
  FieldPtr qs = make_function_field(make_rationals(), "s");
  Poly mod = {qs->from_int(-1), qs->from_int(-2), qs->from_int(1), qs->from_int(1)};
  Poly sig = {qs->from_int(-2), qs->from_int(0), qs->from_int(1)};
  DegreeThreeAlgebra d = DegreeThreeAlgebra::cyclic(qs, mod, sig, qs->from_int(2));
  const auto& FF = static_cast<const FunctionField&>(*qs);
  TitsFirstAlbert a(d, FF.gen());

  auto normfn = [&](const Vec& v) { return a.closed_norm(v); };
  // Basis scan plus a modest random budget; must come back empty-handed.
  DivisionProbeReport r = division_probe(a.jordan(), normfn, 40, 3, 42);
  CHECK(r.witnesses.empty());
  CHECK(r.basis_checked == 27);
  CHECK(r.trials == 40);
  for (const auto& s : r.subalgebras) {
    CHECK(s.dimension == 3);
    REQUIRE(s.is_field.has_value());
    CHECK(*s.is_field);
  }
}
