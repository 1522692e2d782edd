#pragma once

#include <optional>
#include <vector>

#include "albert/field.hpp"
#include "albert/poly.hpp"

namespace albert {

// Exact root finding and irreducibility for polynomials of degree 1..3, the
// only degrees the degree-3 machinery ever needs. Results are definite when
// present; nullopt means the question is not decidable over this base field
// with the methods implemented here (extension bases, function fields over
// prime fields, prime fields beyond the exhaustive-search cap).
//
// Decidable bases:
//   rationals            monic-clearing + integer bisection on monotone
//                        segments (no integer factorization)
//   prime(p), p <= 1e6   exhaustive scan
//   function-field over  monic-clearing into K[s], then specialization +
//   rationals            Newton interpolation; sound in both directions
std::optional<std::vector<Fe>> poly_roots(const FieldPtr& K, const Poly& f);
std::optional<bool> poly_has_root(const FieldPtr& K, const Poly& f);
std::optional<bool> poly_irreducible(const FieldPtr& K, const Poly& f);

}  // namespace albert
