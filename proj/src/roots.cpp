#include "albert/roots.hpp"

#include <algorithm>
#include <cassert>

namespace albert {

namespace {

// ---------------------------------------------------------------------------
// rationals

mpz_class cubic_eval(const mpz_class& b2, const mpz_class& b1, const mpz_class& b0, const mpz_class& u) {
  return ((u + b2) * u + b1) * u + b0;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Integer roots of a monotone restriction of the cubic on [lo, hi] by
// sign-change bisection. The cubic is strictly monotone on the interval, so
// it has at most one root there.
void scan_monotone(const mpz_class& b2, const mpz_class& b1, const mpz_class& b0,
                   mpz_class lo, mpz_class hi, std::vector<mpz_class>& out) {
  if (lo > hi) return;
  mpz_class glo = cubic_eval(b2, b1, b0, lo);
  mpz_class ghi = cubic_eval(b2, b1, b0, hi);
  if (sgn(glo) == 0) out.push_back(lo);
  if (sgn(ghi) == 0) out.push_back(hi);
  if (sgn(glo) == 0 || sgn(ghi) == 0 || sgn(glo) == sgn(ghi)) return;
  int slo = sgn(glo);
  while (hi - lo > 1) {
    mpz_class mid = fdiv(lo + hi, 2);
    int sm = sgn(cubic_eval(b2, b1, b0, mid));
    if (sm == 0) { out.push_back(mid); return; }
    if (sm == slo) lo = mid; else hi = mid;
  }
}

// All integer roots of u^3 + b2 u^2 + b1 u + b0. Splits the line at the
// critical points of the cubic into monotone segments; the short ambiguous
// windows around the (generally irrational) critical points are scanned
// directly.
std::vector<mpz_class> monic_cubic_integer_roots(const mpz_class& b2, const mpz_class& b1, const mpz_class& b0) {
  std::vector<mpz_class> out;
  mpz_class B = 1 + std::max({abs(b2), abs(b1), abs(b0)});
  mpz_class D = b2 * b2 - 3 * b1;
  mpz_class negB = -B;
  auto direct = [&](mpz_class lo, mpz_class hi) {
    if (lo < negB) lo = negB;
    if (hi > B) hi = B;
    for (mpz_class u = lo; u <= hi; ++u)
      if (sgn(cubic_eval(b2, b1, b0, u)) == 0) out.push_back(u);
  };
  if (sgn(D) <= 0) {
    scan_monotone(b2, b1, b0, negB, B, out);
  } else {
    mpz_class f;
    mpz_sqrt(f.get_mpz_t(), D.get_mpz_t());
    // crit1 = (-b2 - sqrt(D))/3 and crit2 = (-b2 + sqrt(D))/3, bracketed with
    // a slop of one on each side
    mpz_class lo1 = fdiv(-b2 - f - 3, 3), hi1 = fdiv(-b2 - f, 3) + 1;
    mpz_class lo2 = fdiv(-b2 + f - 3, 3), hi2 = fdiv(-b2 + f, 3) + 2;
    scan_monotone(b2, b1, b0, negB, std::min(mpz_class(lo1 - 1), B), out);
    direct(lo1, hi1);
    scan_monotone(b2, b1, b0, std::max(mpz_class(hi1 + 1), negB),
                  std::min(mpz_class(lo2 - 1), B), out);
    direct(lo2, hi2);
    scan_monotone(b2, b1, b0, std::max(mpz_class(hi2 + 1), negB), B, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All rational roots of a degree 1..3 polynomial with rational coefficients.
std::vector<mpq_class> rational_roots(std::vector<mpq_class> c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.size() < 2 || c.size() > 4)
    fail(ErrorCode::Unsupported, "root finding handles degrees 1..3 only");
  // clear denominators and divide out the content
  mpz_class L = 1;
  for (const auto& q : c) {
    mpz_class d = q.get_den(), g;
    mpz_gcd(g.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
    L = L / g * d;
  }
  std::vector<mpz_class> z(c.size());
  for (size_t i = 0; i < c.size(); ++i) z[i] = mpz_class(c[i] * L);
  mpz_class content = 0;
  for (const auto& v : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& v : z) v /= content;

  std::vector<mpq_class> roots;
  auto push = [&](mpq_class q) {
    q.canonicalize();
    roots.push_back(std::move(q));
  };
  if (z.size() == 2) {
    push(mpq_class(-z[0], z[1]));
  } else if (z.size() == 3) {
    mpz_class disc = z[1] * z[1] - 4 * z[2] * z[0];
    if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
      push(mpq_class(-z[1] + s, 2 * z[2]));
      if (sgn(s) != 0) push(mpq_class(-z[1] - s, 2 * z[2]));
    }
  } else {
    // u = c3*t turns c3 t^3 + c2 t^2 + c1 t + c0 into a monic integer cubic
    for (const mpz_class& u : monic_cubic_integer_roots(z[2], z[1] * z[3], z[0] * z[3] * z[3]))
      push(mpq_class(u, z[3]));
  }
  std::sort(roots.begin(), roots.end(), [](const mpq_class& a, const mpq_class& b) { return cmp(a, b) < 0; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// prime fields

constexpr uint64_t kPrimeScanCap = 1000000;

std::optional<std::vector<Fe>> prime_roots(const PrimeField& K, const Poly& f) {
  if (K.p() > kPrimeScanCap) return std::nullopt;
  std::vector<Fe> out;
  for (uint64_t r = 0; r < K.p(); ++r) {
    uint64_t acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = (acc * r + f[i].r()) % K.p();
    if (acc == 0) out.push_back(Fe::res(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// function fields over the rationals
//
// Clear to a monic polynomial with coefficients in Q[s]; its roots in Q(s)
// are then polynomials of bounded degree, recovered by interpolating root
// choices of rational specializations. If any specialization has no rational
// root, neither does the original. Every surviving candidate is verified by
// exact composition, so the result is sound in both directions.

constexpr size_t kDfsBudget = 200000;

std::optional<std::vector<Fe>> function_field_roots(const FunctionField& K, const Poly& f) {
  FieldPtr baseptr = K.base();
  if (baseptr->kind() != FieldKind::Rationals) return std::nullopt;
  const Field& Q = *baseptr;

  size_t n = f.size() - 1;
  if (n == 1) return std::vector<Fe>{K.neg(K.div(f[0], f[1]))};

  // monic coefficients A_i, their common denominator, and B_i = A_i * Delta^(n-i)
  std::vector<Fe> A(n);
  for (size_t i = 0; i < n; ++i) A[i] = K.div(f[i], f[n]);
  Poly delta = {Q.one()};
  for (const Fe& a : A) {
    const Poly& d = a.fr().den;
    Poly g = polyv::gcd(Q, delta, d);
    delta = polyv::mul(Q, polyv::divmod(Q, delta, g).first, d);
  }
  Fe delta_ff = K.from_poly(delta);
  std::vector<Poly> B(n);  // polynomials over Q
  size_t dbound = 0;
  for (size_t i = 0; i < n; ++i) {
    Fe scaled = A[i];
    for (size_t k = 0; k < n - i; ++k) scaled = K.mul(scaled, delta_ff);
    if (!(scaled.fr().den.size() == 1 && Q.is_one(scaled.fr().den[0])))
      fail(ErrorCode::InternalConsistency, "denominator clearing failed in function-field root search");
    B[i] = scaled.fr().num;
    if (!B[i].empty()) {
      size_t need = (B[i].size() - 1 + (n - i) - 1) / (n - i);
      dbound = std::max(dbound, need);
    }
  }

  // rational specialization points 0, 1, -1, 2, -2, ...
  auto point = [](size_t j) -> mpq_class {
    if (j == 0) return mpq_class(0);
    long k = long((j + 1) / 2);
    return mpq_class(j % 2 == 1 ? k : -k);
  };

  std::vector<std::vector<mpq_class>> choices(dbound + 1);
  size_t probes = dbound + 9;
  for (size_t j = 0; j < probes; ++j) {
    Fe s0 = Fe::rat(point(j));
    std::vector<mpq_class> spec(n + 1);
    for (size_t i = 0; i < n; ++i) spec[i] = polyv::eval(Q, B[i], s0).q();
    spec[n] = 1;
    std::vector<mpq_class> roots = rational_roots(spec);
    if (roots.empty()) return std::vector<Fe>{};
    if (j <= dbound) choices[j] = std::move(roots);
  }

  // DFS over root choices with exact verification of each interpolant
  std::vector<Poly> full(n + 1);
  for (size_t i = 0; i < n; ++i) full[i] = B[i];
  full[n] = {Q.one()};

  std::vector<Fe> found;
  std::vector<mpq_class> picked(dbound + 1);
  size_t budget = kDfsBudget;
  bool exhausted = false;

  auto verify = [&]() {
    // Newton interpolation through (point(j), picked[j])
    size_t m = dbound + 1;
    std::vector<mpq_class> xs(m), dd(m);
    for (size_t j = 0; j < m; ++j) { xs[j] = point(j); dd[j] = picked[j]; }
    for (size_t lvl = 1; lvl < m; ++lvl)
      for (size_t j = m - 1; j >= lvl; --j)
        dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - lvl]);
    Poly cand;  // over Q
    for (size_t j = m; j-- > 0;) {
      // cand = cand * (s - xs[j]) + dd[j]
      Poly shifted(cand.size() + 1, Q.zero());
      for (size_t t = 0; t < cand.size(); ++t) {
        shifted[t + 1] = Q.add(shifted[t + 1], cand[t]);
        shifted[t] = Q.sub(shifted[t], Q.mul(Fe::rat(xs[j]), cand[t]));
      }
      shifted[0] = Q.add(shifted[0], Fe::rat(dd[j]));
      cand = polyv::trim(Q, std::move(shifted));
    }
    if (!polyv::is_zero(polyv::compose(Q, full, cand))) return;
    Fe root = K.from_frac(cand, delta);
    for (const Fe& r : found)
      if (K.eq(r, root)) return;
    found.push_back(root);
  };

  auto dfs = [&](auto&& self, size_t depth) -> void {
    if (exhausted) return;
    if (budget == 0) { exhausted = true; return; }
    --budget;
    if (depth == dbound + 1) { verify(); return; }
    for (const mpq_class& r : choices[depth]) {
      picked[depth] = r;
      self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  if (exhausted) return std::nullopt;
  return found;
}

}  // namespace

std::optional<std::vector<Fe>> poly_roots(const FieldPtr& K, const Poly& f) {
  Poly g = polyv::trim(*K, f);
  if (polyv::deg(g) < 1 || polyv::deg(g) > 3)
    fail(ErrorCode::Unsupported, "root finding handles degrees 1..3 only");
  switch (K->kind()) {
    case FieldKind::Rationals: {
      std::vector<mpq_class> c(g.size());
      for (size_t i = 0; i < g.size(); ++i) c[i] = g[i].q();
      std::vector<Fe> out;
      for (auto& q : rational_roots(std::move(c))) out.push_back(Fe::rat(std::move(q)));
      return out;
    }
    case FieldKind::Prime:
      return prime_roots(static_cast<const PrimeField&>(*K), g);
    case FieldKind::FunctionField:
      return function_field_roots(static_cast<const FunctionField&>(*K), g);
    case FieldKind::Extension:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<bool> poly_has_root(const FieldPtr& K, const Poly& f) {
  auto roots = poly_roots(K, f);
  if (!roots) return std::nullopt;
  return !roots->empty();
}

std::optional<bool> poly_irreducible(const FieldPtr& K, const Poly& f) {
  Poly g = polyv::trim(*K, f);
  int d = polyv::deg(g);
  if (d < 1 || d > 3)
    fail(ErrorCode::Unsupported, "irreducibility handles degrees 1..3 only");
  if (d == 1) return true;
  auto has = poly_has_root(K, g);
  if (!has) return std::nullopt;
  return !*has;
}

}  // namespace albert
