#pragma once

#include <string>

#include "albert/config.hpp"

namespace albert {

// Evaluates one expression from the eval grammar against a built algebra:
//   product(x,y)  norm(x)  trace-coeff(x)  adjoint(x)  inverse(x)
//   isotope-product(p;x,y)  u-op(p;x)  cross(u,v)  tilde(u)
// Element literals are coordinate lists of exact-scalar strings; a bare
// scalar means that multiple of the contextual unit. cross and tilde act on
// coordinate-algebra elements and need a tits1 algebra. Returns the printed
// result: a canonical scalar, a JSON coordinate list, or the T/S/N triple.
std::string eval_expression(const BuiltAlgebra& alg, const std::string& text);

}  // namespace albert
