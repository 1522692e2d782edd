#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albert/errors.hpp"
#include "albert/field.hpp"
#include "albert/matrix.hpp"
#include "albert/rng.hpp"

using namespace albert;

namespace {

FieldPtr cubic_field() {
  // Q[x]/(x^3 + x^2 - 2x - 1), the cyclotomic-real cubic used all over the
  // fixtures; coefficients run low to high.
  FieldPtr q = make_rationals();
  Poly mod = {q->from_int(-1), q->from_int(-2), q->from_int(1), q->from_int(1)};
  return make_extension(q, mod);
}

Matrix mat_from(const FieldPtr& K, const std::vector<std::vector<long>>& rows) {
  Matrix m(K, rows.size(), rows.front().size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = K->from_int(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("prime field inverse: 2^-1 = 4 in F_7") {
  FieldPtr f7 = make_prime(7);
  CHECK(f7->eq(f7->inv(f7->from_int(2)), f7->from_int(4)));
  CHECK(f7->eq(f7->mul(f7->from_int(2), f7->from_int(4)), f7->one()));
  CHECK(f7->eq(f7->parse("12"), f7->from_int(5)));
  CHECK(f7->to_string(f7->from_int(5)) == "5");
}

TEST_CASE("rational inverse: (-3/5)^-1 = -5/3") {
  FieldPtr q = make_rationals();
  Fe a = q->parse("-3/5");
  CHECK(q->eq(q->inv(a), q->parse("-5/3")));
  CHECK(q->to_string(q->inv(a)) == "-5/3");
  CHECK(q->eq(q->mul(a, q->inv(a)), q->one()));
}

TEST_CASE("cubic extension inverse: x^-1 = x^2 + x - 2") {
  FieldPtr L = cubic_field();
  const auto& E = static_cast<const ExtensionField&>(*L);
  Fe x = E.gen();
  // x * (x^2 + x - 2) = x^3 + x^2 - 2x = (x^3 + x^2 - 2x - 1) + 1 = 1.
  Fe expected = E.from_coords({L->base()->from_int(-2), L->base()->from_int(1), L->base()->from_int(1)});
  CHECK(L->eq(L->inv(x), expected));
  CHECK(L->eq(L->mul(x, expected), L->one()));
  CHECK(L->to_string(L->inv(x)) == "x^2+x-2");
}

TEST_CASE("characteristic 2 and 3 are rejected") {
  CHECK_THROWS_AS(make_prime(2), Error);
  CHECK_THROWS_AS(make_prime(3), Error);
  try {
    make_prime(3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedCharacteristic);
  }
  CHECK(make_prime(5)->characteristic() == 5);
}

TEST_CASE("reducible modulus is rejected") {
  FieldPtr q = make_rationals();
  // x^2 - 1 = (x-1)(x+1)
  Poly mod = {q->from_int(-1), q->from_int(0), q->from_int(1)};
  CHECK_THROWS_AS(make_extension(q, mod), Error);
  // x^2 - 2 is fine.
  Poly good = {q->from_int(-2), q->from_int(0), q->from_int(1)};
  CHECK(make_extension(q, good)->kind() == FieldKind::Extension);
}

TEST_CASE("determinant on the pinned examples") {
  FieldPtr q = make_rationals();
  CHECK(q->eq(mat_det(Matrix::identity(q, 3)), q->one()));
  CHECK(q->eq(mat_det(mat_from(q, {{0, 1}, {1, 0}})), q->from_int(-1)));
  CHECK(q->eq(mat_det(mat_from(q, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})), q->from_int(6)));
}

TEST_CASE("linear solve: identity, inconsistent, diagonal") {
  FieldPtr q = make_rationals();

  Matrix id = Matrix::identity(q, 3);
  std::vector<Fe> v = {q->from_int(4), q->parse("-1/2"), q->from_int(9)};
  auto r1 = mat_solve(id, v);
  REQUIRE(r1.status == SolveStatus::Unique);
  for (size_t i = 0; i < 3; ++i) CHECK(q->eq((*r1.solution)[i], v[i]));

  Matrix bad = mat_from(q, {{1, 1}, {0, 0}});
  auto r2 = mat_solve(bad, {q->one(), q->one()});
  CHECK(r2.status == SolveStatus::Inconsistent);
  CHECK(!r2.solution.has_value());

  Matrix diag = mat_from(q, {{2, 0}, {0, 5}});
  auto r3 = mat_solve(diag, {q->one(), q->one()});
  REQUIRE(r3.status == SolveStatus::Unique);
  CHECK(q->eq((*r3.solution)[0], q->parse("1/2")));
  CHECK(q->eq((*r3.solution)[1], q->parse("1/5")));
}

TEST_CASE("field axioms hold on 1000 samples per field kind") {
  std::vector<FieldPtr> fields = {
      make_rationals(),
      make_prime(7),
      cubic_field(),
      make_function_field(make_rationals(), "s"),
  };
  for (const FieldPtr& K : fields) {
    CAPTURE(K->descriptor().dump());
    SplitMix64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
      Fe a = K->sample(rng), b = K->sample(rng), c = K->sample(rng);
      CHECK(K->eq(K->add(K->add(a, b), c), K->add(a, K->add(b, c))));
      CHECK(K->eq(K->mul(K->mul(a, b), c), K->mul(a, K->mul(b, c))));
      CHECK(K->eq(K->mul(a, K->add(b, c)), K->add(K->mul(a, b), K->mul(a, c))));
      CHECK(K->eq(K->mul(a, b), K->mul(b, a)));
      CHECK(K->is_zero(K->add(a, K->neg(a))));
      if (!K->is_zero(a)) CHECK(K->is_one(K->mul(a, K->inv(a))));
    }
  }
}

TEST_CASE("to_string/parse is a canonical round trip") {
  std::vector<FieldPtr> fields = {
      make_rationals(),
      make_prime(101),
      cubic_field(),
      make_function_field(make_rationals(), "s"),
  };
  for (const FieldPtr& K : fields) {
    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
      Fe a = K->sample(rng);
      std::string s = K->to_string(a);
      Fe back = K->parse(s);
      CHECK(K->eq(a, back));
      // Canonical form is idempotent: printing the reparse changes nothing.
      CHECK(K->to_string(back) == s);
    }
  }
}

TEST_CASE("determinant is multiplicative on random 3x3 pairs") {
  for (const FieldPtr& K : {make_rationals(), make_prime(7)}) {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 120; ++trial) {
      Matrix a(K, 3, 3), b(K, 3, 3);
      for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) {
          a.at(r, c) = K->sample(rng);
          b.at(r, c) = K->sample(rng);
        }
      CHECK(K->eq(mat_det(a.mul(b)), K->mul(mat_det(a), mat_det(b))));
    }
  }
}

TEST_CASE("splitmix64 matches the reference stream") {
  // Reference outputs of the standard splitmix64 (seeds 0 and 42), computed
  // from the published algorithm independently of this implementation.
  SplitMix64 r0(0);
  CHECK(r0.next() == 0xe220a8397b1dcdafull);
  CHECK(r0.next() == 0x6e789e6aa1b965f4ull);
  CHECK(r0.next() == 0x06c45d188009454full);
  CHECK(r0.next() == 0xf88bb8a8724c81ecull);

  SplitMix64 r42(42);
  CHECK(r42.next() == 0xbdd732262feb6e95ull);
  CHECK(r42.next() == 0x28efe333b266f103ull);

  SplitMix64 rmax(~uint64_t(0));
  CHECK(rmax.next() == 0xe4d971771b652c20ull);
}

TEST_CASE("fnv1a64 matches the published constants") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  // Suite-seed derivation is part of the report contract; freeze one value.
  CHECK(derive_seed(42, "jordan", 0) == 0x486871803b4a60c1ull);
}

TEST_CASE("descriptors rebuild the same field") {
  std::vector<FieldPtr> fields = {
      make_rationals(),
      make_prime(13),
      cubic_field(),
      make_function_field(make_rationals(), "s"),
  };
  for (const FieldPtr& K : fields) {
    FieldPtr back = field_from_json(K->descriptor(), "/field");
    CHECK(K->same(*back));
    SplitMix64 rng(3);
    Fe a = K->sample(rng);
    CHECK(back->eq(back->parse(K->to_string(a)), a));
  }
}

TEST_CASE("function field fractions reduce canonically") {
  FieldPtr F = make_function_field(make_rationals(), "s");
  const auto& FF = static_cast<const FunctionField&>(*F);
  Fe s = FF.gen();
  // (s^2 - 1)/(s - 1) reduces to s + 1.
  Fe num = F->sub(F->mul(s, s), F->one());
  Fe den = F->sub(s, F->one());
  CHECK(F->eq(F->div(num, den), F->add(s, F->one())));
  CHECK(F->to_string(F->div(num, den)) == "s+1");
  // Inversion swaps numerator and denominator up to normalization.
  Fe frac = F->div(F->add(s, F->one()), F->mul(s, s));
  CHECK(F->eq(F->inv(frac), F->div(F->mul(s, s), F->add(s, F->one()))));
  CHECK(F->eq(F->parse("(s+1)/(s^2)"), frac));
}
