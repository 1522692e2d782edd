#pragma once

#include <string>
#include <tuple>
#include <utility>

#include "albert/field.hpp"

// Dense univariate polynomial helpers over an arbitrary Field. Coefficients
// run low to high; the zero polynomial is the empty vector and every other
// polynomial has a nonzero leading coefficient.
namespace albert::polyv {

Poly trim(const Field& K, Poly a);
inline int deg(const Poly& a) { return int(a.size()) - 1; }
inline bool is_zero(const Poly& a) { return a.empty(); }

Poly from_const(const Field& K, const Fe& c);
Poly add(const Field& K, const Poly& a, const Poly& b);
Poly sub(const Field& K, const Poly& a, const Poly& b);
Poly neg(const Field& K, const Poly& a);
Poly mul(const Field& K, const Poly& a, const Poly& b);
Poly scale(const Field& K, const Fe& c, const Poly& a);

// Quotient and remainder; den must be nonzero.
std::pair<Poly, Poly> divmod(const Field& K, Poly num, const Poly& den);
Poly mod(const Field& K, Poly num, const Poly& den);

Poly monic(const Field& K, const Poly& a);
Poly gcd(const Field& K, Poly a, Poly b);  // monic unless both inputs are zero

// g = gcd(a, b) monic, plus u, v with u*a + v*b = g.
std::tuple<Poly, Poly, Poly> egcd(const Field& K, const Poly& a, const Poly& b);

Fe eval(const Field& K, const Poly& a, const Fe& x);
// Evaluate a polynomial whose coefficients are themselves polynomials over K
// at a Poly argument (composition), used by the function-field root finder.
Poly compose(const Field& K, const std::vector<Poly>& coeffs, const Poly& arg);

bool eq(const Field& K, const Poly& a, const Poly& b);
std::string to_string(const Field& K, const Poly& a, const std::string& var);

}  // namespace albert::polyv
