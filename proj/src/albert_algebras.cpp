#include "albert/albert_algebras.hpp"

#include "albert/errors.hpp"

namespace albert {
namespace {

AlgebraTable tits_table(const DegreeThreeAlgebra& D, const Fe& mu, const Fe& mu_inv) {
  const FieldPtr& Kp = D.field();
  const Field& F = *Kp;
  Fe half = F.inv(F.from_int(2));

  std::vector<std::string> labels;
  for (const char* s : {"x", "y", "z"})
    for (const auto& l : D.table().labels()) labels.push_back(std::string(s) + ":" + l);

  auto slot_product = [&](const std::array<Vec, 3>& a, const std::array<Vec, 3>& b) {
    const Vec& x = a[0];
    const Vec& y = a[1];
    const Vec& z = a[2];
    const Vec& x2 = b[0];
    const Vec& y2 = b[1];
    const Vec& z2 = b[2];
    Vec s1 = vecops::add(F, D.product(x, x2), D.product(x2, x));
    s1 = vecops::add(F, s1, D.tilde(D.product(y, z2)));
    s1 = vecops::add(F, s1, D.tilde(D.product(y2, z)));
    Vec s2 = vecops::add(F, D.product(D.tilde(x), y2), D.product(D.tilde(x2), y));
    s2 = vecops::add(F, s2, vecops::scale(F, mu_inv, D.cross(z, z2)));
    Vec s3 = vecops::add(F, D.product(z, D.tilde(x2)), D.product(z2, D.tilde(x)));
    s3 = vecops::add(F, s3, vecops::scale(F, mu, D.cross(y, y2)));
    Vec out(27, F.zero());
    for (size_t i = 0; i < 9; ++i) {
      out[i] = F.mul(half, s1[i]);
      out[9 + i] = F.mul(half, s2[i]);
      out[18 + i] = F.mul(half, s3[i]);
    }
    return out;
  };

  AlgebraTable t(Kp, 27, std::move(labels));
  for (size_t I = 0; I < 27; ++I) {
    std::array<Vec, 3> a = {vecops::zero(F, 9), vecops::zero(F, 9), vecops::zero(F, 9)};
    a[I / 9][I % 9] = F.one();
    for (size_t J = I; J < 27; ++J) {
      std::array<Vec, 3> b = {vecops::zero(F, 9), vecops::zero(F, 9), vecops::zero(F, 9)};
      b[J / 9][J % 9] = F.one();
      Vec row = slot_product(a, b);
      t.set_product(I, J, row);
      if (J != I) t.set_product(J, I, row);
    }
  }
  Vec unit(27, F.zero());
  const Vec& du = D.unit();
  for (size_t i = 0; i < 9; ++i) unit[i] = du[i];
  t.set_unit(std::move(unit));
  return t;
}

}  // namespace

TitsFirstAlbert::TitsFirstAlbert(DegreeThreeAlgebra D, Fe mu)
    : D_(std::move(D)),
      mu_(std::move(mu)),
      mu_inv_([&] {
        if (D_.field()->is_zero(mu_))
          fail(ErrorCode::DegenerateParameter, "Tits construction needs mu != 0");
        return D_.field()->inv(mu_);
      }()),
      J_(JordanAlgebra::from_table(tits_table(D_, mu_, mu_inv_))) {}

std::array<Vec, 3> TitsFirstAlbert::split(const Vec& v) const {
  std::array<Vec, 3> out;
  for (size_t s = 0; s < 3; ++s) out[s] = Vec(v.begin() + 9 * s, v.begin() + 9 * (s + 1));
  return out;
}

Vec TitsFirstAlbert::join(const Vec& x, const Vec& y, const Vec& z) const {
  Vec v;
  v.reserve(27);
  v.insert(v.end(), x.begin(), x.end());
  v.insert(v.end(), y.begin(), y.end());
  v.insert(v.end(), z.begin(), z.end());
  return v;
}

Fe TitsFirstAlbert::closed_norm(const Vec& v) const {
  const Field& F = *field();
  std::array<Vec, 3> s = split(v);
  Fe n = D_.reduced_norm(s[0]);
  F.add_assign(n, F.mul(mu_, D_.reduced_norm(s[1])));
  F.add_assign(n, F.mul(mu_inv_, D_.reduced_norm(s[2])));
  return F.sub(n, D_.reduced_trace(D_.product(s[0], D_.product(s[1], s[2]))));
}

ReducedAlbert::ReducedAlbert(CompositionAlgebra C, std::array<Fe, 3> gamma)
    : C_(std::move(C)), gamma_(std::move(gamma)), J_([&] {
        const FieldPtr& Kp = C_.field();
        const Field& F = *Kp;
        for (const Fe& g : gamma_)
          if (F.is_zero(g))
            fail(ErrorCode::DegenerateParameter, "Gamma entries must be nonzero");
        const size_t c = C_.dim();
        const size_t d = 3 + 3 * c;

        std::vector<std::string> labels = {"xi1", "xi2", "xi3"};
        for (int b = 1; b <= 3; ++b)
          for (const auto& l : C_.table().labels())
            labels.push_back("c" + std::to_string(b) + ":" + l);

        AlgebraTable t(Kp, d, std::move(labels));
        Fe half = F.inv(F.from_int(2));
        for (size_t I = 0; I < d; ++I) {
          Vec eI = vecops::basis(F, d, I);
          std::array<Vec, 9> A = to_matrix(eI);
          for (size_t J = I; J < d; ++J) {
            std::array<Vec, 9> B = to_matrix(vecops::basis(F, d, J));
            std::array<Vec, 9> M;
            for (size_t i = 0; i < 3; ++i)
              for (size_t j = 0; j < 3; ++j) {
                Vec e = vecops::zero(F, c);
                for (size_t k = 0; k < 3; ++k) {
                  e = vecops::add(F, e, C_.product(A[3 * i + k], B[3 * k + j]));
                  e = vecops::add(F, e, C_.product(B[3 * i + k], A[3 * k + j]));
                }
                M[3 * i + j] = vecops::scale(F, half, e);
              }
            Vec row = from_matrix(M);
            t.set_product(I, J, row);
            if (J != I) t.set_product(J, I, row);
          }
        }
        Vec unit = vecops::zero(F, d);
        unit[0] = unit[1] = unit[2] = F.one();
        t.set_unit(std::move(unit));
        return JordanAlgebra::from_table(std::move(t));
      }()) {}

std::array<Vec, 9> ReducedAlbert::to_matrix(const Vec& v) const {
  const Field& F = *C_.field();
  const size_t c = C_.dim();
  auto block = [&](size_t b) { return Vec(v.begin() + 3 + c * b, v.begin() + 3 + c * (b + 1)); };
  Vec c1 = block(0), c2 = block(1), c3 = block(2);

  std::array<Vec, 9> m;
  m[0] = vecops::scale(F, v[0], C_.unit());
  m[4] = vecops::scale(F, v[1], C_.unit());
  m[8] = vecops::scale(F, v[2], C_.unit());
  m[1] = c3;
  m[5] = c1;
  m[6] = c2;
  m[3] = vecops::scale(F, F.div(gamma_[0], gamma_[1]), C_.conjugate(c3));
  m[7] = vecops::scale(F, F.div(gamma_[1], gamma_[2]), C_.conjugate(c1));
  m[2] = vecops::scale(F, F.div(gamma_[2], gamma_[0]), C_.conjugate(c2));
  return m;
}

Vec ReducedAlbert::from_matrix(const std::array<Vec, 9>& m) const {
  const Field& F = *C_.field();
  const size_t c = C_.dim();
  const Vec& cu = C_.unit();
  size_t u0 = 0;
  while (F.is_zero(cu[u0])) ++u0;

  auto diag_scalar = [&](const Vec& e) {
    Fe xi = F.div(e[u0], cu[u0]);
    if (!vecops::eq(F, e, vecops::scale(F, xi, cu)))
      fail(ErrorCode::InternalConsistency, "hermitian product has a non-scalar diagonal");
    return xi;
  };
  Fe xi1 = diag_scalar(m[0]);
  Fe xi2 = diag_scalar(m[4]);
  Fe xi3 = diag_scalar(m[8]);

  auto check_pair = [&](const Vec& low, const Vec& high, const Fe& ratio) {
    if (!vecops::eq(F, low, vecops::scale(F, ratio, C_.conjugate(high))))
      fail(ErrorCode::InternalConsistency, "hermitian product broke the Gamma symmetry");
  };
  check_pair(m[3], m[1], F.div(gamma_[0], gamma_[1]));
  check_pair(m[7], m[5], F.div(gamma_[1], gamma_[2]));
  check_pair(m[2], m[6], F.div(gamma_[2], gamma_[0]));

  Vec v = vecops::zero(F, 3 + 3 * c);
  v[0] = xi1;
  v[1] = xi2;
  v[2] = xi3;
  for (size_t i = 0; i < c; ++i) {
    v[3 + i] = m[5][i];
    v[3 + c + i] = m[6][i];
    v[3 + 2 * c + i] = m[1][i];
  }
  return v;
}

TrilinearNormForm::TrilinearNormForm(FieldPtr K, size_t dim,
                                     const std::function<Fe(const Vec&)>& norm)
    : K_(std::move(K)), dim_(dim) {
  const Field& F = *K_;
  off1_.assign(dim_ + 1, 0);
  for (size_t f = 0; f < dim_; ++f)
    off1_[f + 1] = off1_[f] + (dim_ - f) * (dim_ - f + 1) / 2;
  packed_.assign(off1_[dim_], F.zero());  // = d(d+1)(d+2)/6

  std::vector<Fe> n1(dim_);
  std::vector<Fe> n2(dim_ * dim_);
  for (size_t a = 0; a < dim_; ++a) {
    Vec ea = vecops::basis(F, dim_, a);
    n1[a] = norm(ea);
    for (size_t b = a; b < dim_; ++b) {
      Vec s = vecops::add(F, ea, vecops::basis(F, dim_, b));
      n2[a * dim_ + b] = norm(s);
    }
  }
  for (size_t a = 0; a < dim_; ++a) {
    Vec ea = vecops::basis(F, dim_, a);
    for (size_t b = a; b < dim_; ++b) {
      Vec eab = vecops::add(F, ea, vecops::basis(F, dim_, b));
      for (size_t c = b; c < dim_; ++c) {
        Fe th = norm(vecops::add(F, eab, vecops::basis(F, dim_, c)));
        th = F.sub(th, n2[a * dim_ + b]);
        th = F.sub(th, n2[a * dim_ + c]);
        th = F.sub(th, n2[b * dim_ + c]);
        F.add_assign(th, n1[a]);
        F.add_assign(th, n1[b]);
        F.add_assign(th, n1[c]);
        packed_[packed_index(a, b, c)] = std::move(th);
      }
    }
  }
}

size_t TrilinearNormForm::packed_index(size_t a, size_t b, size_t c) const {
  // a <= b <= c; triples enumerated lexicographically
  size_t pairoff = (b - a) * dim_ - (b * (b - 1) / 2 - a * (a - 1) / 2);
  return off1_[a] + pairoff + (c - b);
}

const Fe& TrilinearNormForm::theta(size_t a, size_t b, size_t c) const {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return packed_[packed_index(a, b, c)];
}

Fe TrilinearNormForm::eval(const Vec& x, const Vec& y, const Vec& z) const {
  const Field& F = *K_;
  Fe acc = F.zero();
  for (size_t a = 0; a < dim_; ++a) {
    if (F.is_zero(x[a])) continue;
    for (size_t b = 0; b < dim_; ++b) {
      if (F.is_zero(y[b])) continue;
      Fe xy = F.mul(x[a], y[b]);
      for (size_t c = 0; c < dim_; ++c) {
        if (F.is_zero(z[c])) continue;
        F.add_assign(acc, F.mul(xy, F.mul(z[c], theta(a, b, c))));
      }
    }
  }
  return acc;
}

Fe TrilinearNormForm::norm_from_theta(const Vec& x) const {
  const Field& F = *K_;
  return F.div(eval(x, x, x), F.from_int(6));
}

DivisionProbeReport division_probe(const JordanAlgebra& J,
                                   const std::function<Fe(const Vec&)>& norm,
                                   size_t trials, size_t subalgebra_samples,
                                   uint64_t seed) {
  const Field& F = *J.field();
  const size_t d = J.dim();
  DivisionProbeReport rep;
  for (size_t i = 0; i < d && rep.witnesses.size() < 5; ++i) {
    ++rep.basis_checked;
    Vec e = vecops::basis(F, d, i);
    if (F.is_zero(norm(e))) rep.witnesses.push_back(std::move(e));
  }
  SplitMix64 rng(seed);
  for (size_t n = 0; n < trials && rep.witnesses.size() < 5; ++n) {
    ++rep.trials;
    Vec v = vecops::sample_nonzero(F, d, rng);
    if (F.is_zero(norm(v))) rep.witnesses.push_back(std::move(v));
  }
  for (size_t n = 0; n < subalgebra_samples; ++n) {
    Vec v = vecops::sample_nonzero(F, d, rng);
    SubalgebraInfo info = J.subalgebra_generated(v);
    rep.subalgebras.push_back(
        SubalgebraSample{std::move(v), info.dimension, info.is_field});
  }
  return rep;
}

}  // namespace albert
