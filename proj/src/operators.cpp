#include "albert/operators.hpp"

#include "albert/errors.hpp"

namespace albert {

StructureOps::StructureOps(const JordanAlgebra& J, std::function<Fe(const Vec&)> norm)
    : J_(J), norm_(std::move(norm)) {}

const TrilinearNormForm& StructureOps::theta() const {
  if (!theta_)
    theta_ = std::make_unique<TrilinearNormForm>(J_.field(), J_.dim(), norm_);
  return *theta_;
}

Matrix StructureOps::homothety(const Fe& lambda) const {
  const FieldPtr& Kp = J_.field();
  const size_t d = J_.dim();
  Matrix m(Kp, d, d);
  for (size_t i = 0; i < d; ++i) m.at(i, i) = lambda;
  return m;
}

Matrix StructureOps::compose(const Matrix& g, const Matrix& h) {
  return g.mul(h);
}

SimilarityVerdict StructureOps::similarity_check(const Matrix& g) const {
  const Field& F = *J_.field();
  const size_t d = J_.dim();
  if (g.rows() != d || g.cols() != d)
    fail(ErrorCode::ShapeError, "operator has the wrong shape for this algebra");

  SimilarityVerdict v;
  Fe nu = norm_(g.apply(J_.unit()));
  if (F.is_zero(nu)) {
    v.reason = "image of the unit has norm zero";
    return v;
  }
  if (F.is_zero(mat_det(g))) {
    v.reason = "operator is singular";
    return v;
  }

  const TrilinearNormForm& th = theta();
  std::vector<Vec> G(d);
  for (size_t a = 0; a < d; ++a) {
    G[a].resize(d);
    for (size_t r = 0; r < d; ++r) G[a][r] = g.at(r, a);
  }

  // Theta(G_a, G_b, G_c) must equal nu * Theta(e_a, e_b, e_c) for every
  // triple; contract one slot at a time so the packed form is walked once
  // per leading index
  const std::vector<Fe>& packed = th.packed();
  std::vector<Fe> t1(d * d);  // upper-triangular at u*d + v, u <= v
  std::vector<Fe> s2(d);
  for (size_t a = 0; a < d; ++a) {
    const Vec& Ga = G[a];
    for (Fe& e : t1) e = F.zero();
    size_t cur = 0;
    for (size_t p = 0; p < d; ++p)
      for (size_t q = p; q < d; ++q)
        for (size_t r = q; r < d; ++r, ++cur) {
          const Fe& thv = packed[cur];
          if (F.is_zero(thv)) continue;
          if (p < q && q < r) {
            F.add_mul(t1[q * d + r], thv, Ga[p]);
            F.add_mul(t1[p * d + r], thv, Ga[q]);
            F.add_mul(t1[p * d + q], thv, Ga[r]);
          } else if (p == q && q < r) {
            F.add_mul(t1[p * d + r], thv, Ga[p]);
            F.add_mul(t1[p * d + p], thv, Ga[r]);
          } else if (p < q && q == r) {
            F.add_mul(t1[q * d + q], thv, Ga[p]);
            F.add_mul(t1[p * d + q], thv, Ga[q]);
          } else {
            F.add_mul(t1[p * d + p], thv, Ga[p]);
          }
        }
    for (size_t b = a; b < d; ++b) {
      const Vec& Gb = G[b];
      for (Fe& e : s2) e = F.zero();
      for (size_t u = 0; u < d; ++u) {
        if (F.is_zero(Gb[u])) continue;
        for (size_t w = 0; w < d; ++w) {
          const Fe& tv = (u <= w) ? t1[u * d + w] : t1[w * d + u];
          if (!F.is_zero(tv)) F.add_mul(s2[w], tv, Gb[u]);
        }
      }
      for (size_t c = b; c < d; ++c) {
        const Vec& Gc = G[c];
        Fe val = F.zero();
        for (size_t w = 0; w < d; ++w)
          if (!F.is_zero(Gc[w])) F.add_mul(val, s2[w], Gc[w]);
        if (!F.eq(val, F.mul(nu, th.theta(a, b, c)))) {
          v.failing_triple = std::array<size_t, 3>{a, b, c};
          v.reason = "norm pullback fails on a basis triple";
          return v;
        }
      }
    }
  }
  v.is_similarity = true;
  v.multiplier = nu;
  return v;
}

bool StructureOps::automorphism_check(const Matrix& g) const {
  const Field& F = *J_.field();
  const size_t d = J_.dim();
  if (g.rows() != d || g.cols() != d)
    fail(ErrorCode::ShapeError, "operator has the wrong shape for this algebra");
  if (!vecops::eq(F, g.apply(J_.unit()), J_.unit())) return false;

  std::vector<Vec> G(d);
  for (size_t a = 0; a < d; ++a) {
    G[a].resize(d);
    for (size_t r = 0; r < d; ++r) G[a][r] = g.at(r, a);
  }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      Vec prod = vecops::zero(F, d);
      for (const auto& [k, c] : J_.table().row(i, j))
        vecops::add_scaled(F, prod, c, G[k]);  // g(e_i o e_j) by linearity
      if (!vecops::eq(F, prod, J_.product(G[i], G[j]))) return false;
    }
  return true;
}

std::optional<Vec> StructureOps::isotopy_decompose(const Matrix& g) const {
  const Field& F = *J_.field();
  const size_t d = J_.dim();
  if (g.rows() != d || g.cols() != d)
    fail(ErrorCode::ShapeError, "operator has the wrong shape for this algebra");

  Vec g1 = g.apply(J_.unit());
  if (F.is_zero(J_.generic_coeffs(g1).N)) return std::nullopt;
  Vec p = J_.inverse(g1);

  std::vector<Vec> G(d);
  for (size_t a = 0; a < d; ++a) {
    G[a].resize(d);
    for (size_t r = 0; r < d; ++r) G[a][r] = g.at(r, a);
  }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      Vec lhs = vecops::zero(F, d);
      for (const auto& [k, c] : J_.table().row(i, j))
        vecops::add_scaled(F, lhs, c, G[k]);
      if (!vecops::eq(F, lhs, J_.isotope_product(p, G[i], G[j])))
        return std::nullopt;
    }
  return p;
}

}  // namespace albert
