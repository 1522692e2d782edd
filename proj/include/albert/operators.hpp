#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "albert/albert_algebras.hpp"
#include "albert/jordan.hpp"
#include "albert/matrix.hpp"

namespace albert {

struct SimilarityVerdict {
  bool is_similarity = false;
  std::optional<Fe> multiplier;  // nu = N(g(1)), present on a positive verdict
  std::optional<std::array<size_t, 3>> failing_triple;
  std::string reason;  // empty on a positive verdict
};

// Norm-similarity, automorphism, and isotopy predicates for one Jordan
// algebra with a distinguished cubic norm. The verdicts are deterministic:
// similarity is decided by pulling the full polarization Theta back through
// the operator on every basis triple, not by sampling. Not thread-safe (the
// polarization is cached lazily).
class StructureOps {
 public:
  StructureOps(const JordanAlgebra& J, std::function<Fe(const Vec&)> norm);

  const JordanAlgebra& jordan() const { return J_; }
  Fe norm(const Vec& v) const { return norm_(v); }

  // g is in the structure group iff it is invertible and N(g a) = nu N(a)
  // identically, with nu = N(g 1)
  SimilarityVerdict similarity_check(const Matrix& g) const;

  // g(1) = 1 and g(x o y) = g(x) o g(y) on all basis pairs
  bool automorphism_check(const Matrix& g) const;

  // When g is an isomorphism J -> J^(p) the isotope unit forces
  // p = g(1)^{-1}; returns that p after verifying the product law on all
  // basis pairs, nullopt when g is no isotopy.
  std::optional<Vec> isotopy_decompose(const Matrix& g) const;

  Matrix homothety(const Fe& lambda) const;
  static Matrix compose(const Matrix& g, const Matrix& h);  // g after h

  const TrilinearNormForm& theta() const;  // built on first use, then cached

 private:
  const JordanAlgebra& J_;
  std::function<Fe(const Vec&)> norm_;
  mutable std::unique_ptr<TrilinearNormForm> theta_;
};

}  // namespace albert
