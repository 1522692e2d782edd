#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albert/composition.hpp"
#include "albert/errors.hpp"
#include "albert/rng.hpp"

using namespace albert;

namespace {

CompositionAlgebra rational_octonions() {
  FieldPtr q = make_rationals();
  Fe m1 = q->from_int(-1);
  CompositionAlgebra k = CompositionAlgebra::ground(q);
  CompositionAlgebra c2 = CompositionAlgebra::cayley_dickson(k, m1);
  CompositionAlgebra c4 = CompositionAlgebra::cayley_dickson(c2, m1);
  return CompositionAlgebra::cayley_dickson(c4, m1);
}

}  // namespace

TEST_CASE("doubling chain doubles dimension and keeps the unit") {
  FieldPtr q = make_rationals();
  CompositionAlgebra k = CompositionAlgebra::ground(q);
  CHECK(k.dim() == 1);
  CompositionAlgebra c2 = CompositionAlgebra::cayley_dickson(k, q->from_int(-1));
  CHECK(c2.dim() == 2);
  CompositionAlgebra c8 = rational_octonions();
  CHECK(c8.dim() == 8);
  CHECK(q->is_one(c8.norm(c8.unit())));
  CHECK(q->eq(c8.trace(c8.unit()), q->from_int(2)));
  CHECK(vecops::eq(*q, c8.conjugate(c8.unit()), c8.unit()));
}

TEST_CASE("doubling guards: lambda = 0 and dimension 8") {
  FieldPtr q = make_rationals();
  CompositionAlgebra k = CompositionAlgebra::ground(q);
  CHECK_THROWS_AS(CompositionAlgebra::cayley_dickson(k, q->zero()), Error);
  try {
    CompositionAlgebra::cayley_dickson(k, q->zero());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateParameter);
  }
  CompositionAlgebra c8 = rational_octonions();
  CHECK_THROWS_AS(CompositionAlgebra::cayley_dickson(c8, q->one()), Error);
  try {
    CompositionAlgebra::cayley_dickson(c8, q->one());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CannotDouble);
  }
}

TEST_CASE("double(K, 1) is isotropic: N(1,1) = 0") {
  FieldPtr q = make_rationals();
  CompositionAlgebra c2 = CompositionAlgebra::cayley_dickson(CompositionAlgebra::ground(q), q->one());
  // In the doubled basis (1, e) the element 1 + e has norm 1^2 - 1^2 = 0.
  Vec x = {q->one(), q->one()};
  CHECK(q->is_zero(c2.norm(x)));
  CHECK(!vecops::is_zero(*q, x));
}

TEST_CASE("classical octonions over Q: no norm-zero element in 1000 samples") {
  CompositionAlgebra c8 = rational_octonions();
  const Field& F = *c8.field();
  SplitMix64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Vec x = vecops::sample_nonzero(*c8.field(), 8, rng);
    CHECK(!F.is_zero(c8.norm(x)));
  }
}

TEST_CASE("zorn split octonions: unit norm 1, explicit isotropic vector") {
  FieldPtr q = make_rationals();
  CompositionAlgebra z = CompositionAlgebra::zorn_split(q);
  CHECK(z.dim() == 8);
  CHECK(q->is_one(z.norm(z.unit())));
  // The split unit is a sum of two idempotents; either one is isotropic.
  bool found = false;
  for (size_t i = 0; i < 8 && !found; ++i) {
    Vec e = vecops::basis(*q, 8, i);
    found = q->is_zero(z.norm(e));
  }
  CHECK(found);
}

TEST_CASE("composition law N(xy) = N(x)N(y) on 1000 pairs") {
  FieldPtr q = make_rationals();
  for (const CompositionAlgebra& c : {rational_octonions(), CompositionAlgebra::zorn_split(q)}) {
    const Field& F = *c.field();
    SplitMix64 rng(13);
    for (int i = 0; i < 1000; ++i) {
      Vec x = vecops::sample(F, 8, rng);
      Vec y = vecops::sample(F, 8, rng);
      CHECK(F.eq(c.norm(c.product(x, y)), F.mul(c.norm(x), c.norm(y))));
    }
  }
}

TEST_CASE("x times conjugate(x) = N(x) 1, and trace(x) 1 = x + conjugate(x)") {
  FieldPtr q = make_rationals();
  for (const CompositionAlgebra& c : {rational_octonions(), CompositionAlgebra::zorn_split(q)}) {
    const Field& F = *c.field();
    SplitMix64 rng(17);
    for (int i = 0; i < 1000; ++i) {
      Vec x = vecops::sample(F, 8, rng);
      Vec xbar = c.conjugate(x);
      CHECK(vecops::eq(F, c.product(x, xbar), vecops::scale(F, c.norm(x), c.unit())));
      CHECK(vecops::eq(F, vecops::add(F, x, xbar), vecops::scale(F, c.trace(x), c.unit())));
      // Conjugation is an involution and an anti-automorphism.
      CHECK(vecops::eq(F, c.conjugate(xbar), x));
      Vec y = vecops::sample(F, 8, rng);
      CHECK(vecops::eq(F, c.conjugate(c.product(x, y)), c.product(c.conjugate(y), xbar)));
    }
  }
}

TEST_CASE("alternative laws x(xy) = (xx)y and (yx)x = y(xx)") {
  FieldPtr q = make_rationals();
  for (const CompositionAlgebra& c : {rational_octonions(), CompositionAlgebra::zorn_split(q)}) {
    const Field& F = *c.field();
    SplitMix64 rng(19);
    for (int i = 0; i < 400; ++i) {
      Vec x = vecops::sample(F, 8, rng);
      Vec y = vecops::sample(F, 8, rng);
      Vec xx = c.product(x, x);
      CHECK(vecops::eq(F, c.product(x, c.product(x, y)), c.product(xx, y)));
      CHECK(vecops::eq(F, c.product(c.product(y, x), x), c.product(y, xx)));
    }
  }
}

TEST_CASE("octonions are not associative: witness triple") {
  CompositionAlgebra c8 = rational_octonions();
  CHECK(!c8.table().is_associative());
  CHECK(c8.table().is_commutative() == false);
}

TEST_CASE("norm bilinearization is symmetric and recovers the norm") {
  CompositionAlgebra z = CompositionAlgebra::zorn_split(make_rationals());
  const Field& F = *z.field();
  SplitMix64 rng(23);
  for (int i = 0; i < 300; ++i) {
    Vec x = vecops::sample(F, 8, rng);
    Vec y = vecops::sample(F, 8, rng);
    CHECK(F.eq(z.norm_bilinear(x, y), z.norm_bilinear(y, x)));
    // N(x, x) = 2 N(x).
    CHECK(F.eq(z.norm_bilinear(x, x), F.mul(F.from_int(2), z.norm(x))));
  }
}

TEST_CASE("quaternions over F_7 still compose") {
  FieldPtr f7 = make_prime(7);
  CompositionAlgebra k = CompositionAlgebra::ground(f7);
  CompositionAlgebra c2 = CompositionAlgebra::cayley_dickson(k, f7->from_int(-1));
  CompositionAlgebra c4 = CompositionAlgebra::cayley_dickson(c2, f7->from_int(3));
  CHECK(c4.dim() == 4);
  CHECK(c4.table().is_associative());
  SplitMix64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    Vec x = vecops::sample(*f7, 4, rng);
    Vec y = vecops::sample(*f7, 4, rng);
    CHECK(f7->eq(c4.norm(c4.product(x, y)), f7->mul(c4.norm(x), c4.norm(y))));
  }
}
