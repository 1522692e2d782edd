#include "albert/degree3.hpp"

#include <array>

#include "albert/errors.hpp"
#include "albert/poly.hpp"

namespace albert {
namespace {

// 3x3 helpers over an arbitrary field, row-major std::array<Fe,9>
using M3 = std::array<Fe, 9>;

M3 m3_zero(const Field& F) {
  M3 m;
  for (auto& e : m) e = F.zero();
  return m;
}

M3 m3_mul(const Field& F, const M3& a, const M3& b) {
  M3 c = m3_zero(F);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const Fe& aik = a[3 * i + k];
      if (F.is_zero(aik)) continue;
      for (int j = 0; j < 3; ++j) F.add_mul(c[3 * i + j], aik, b[3 * k + j]);
    }
  return c;
}

Fe m3_trace(const Field& F, const M3& a) {
  return F.add(F.add(a[0], a[4]), a[8]);
}

Fe m3_det(const Field& F, const M3& a) {
  Fe d = F.mul(a[0], F.sub(F.mul(a[4], a[8]), F.mul(a[5], a[7])));
  d = F.sub(d, F.mul(a[1], F.sub(F.mul(a[3], a[8]), F.mul(a[5], a[6]))));
  return F.add(d, F.mul(a[2], F.sub(F.mul(a[3], a[7]), F.mul(a[4], a[6]))));
}

}  // namespace

DegreeThreeAlgebra::DegreeThreeAlgebra(FieldPtr K, AlgebraTable table, std::string kind)
    : K_(std::move(K)), table_(std::move(table)), kind_(std::move(kind)) {}

DegreeThreeAlgebra DegreeThreeAlgebra::matrix3(FieldPtr K) {
  const Field& F = *K;
  std::vector<std::string> labels;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
  AlgebraTable t(K, 9, labels);
  // E_{ij} E_{kl} = delta_{jk} E_{il}; index of E_{ij} is 3(i-1)+(j-1)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          Vec row = vecops::zero(F, 9);
          if (j == k) row[static_cast<size_t>(3 * i + l)] = F.one();
          t.set_product(static_cast<size_t>(3 * i + j), static_cast<size_t>(3 * k + l),
                        row);
        }
  Vec unit = vecops::zero(F, 9);
  unit[0] = unit[4] = unit[8] = F.one();
  t.set_unit(unit);

  DegreeThreeAlgebra D(K, std::move(t), "matrix3");
  D.L_ = K;
  D.images_.resize(9);
  for (size_t n = 0; n < 9; ++n) {
    M3 m = m3_zero(F);
    m[n] = F.one();
    D.images_[n] = m;
  }
  D.params_ = nlohmann::ordered_json::object();
  D.finish_construction();
  return D;
}

DegreeThreeAlgebra DegreeThreeAlgebra::cyclic(FieldPtr K, Poly modulus, Poly sigma_image,
                                              Fe b) {
  const Field& F = *K;
  polyv::trim(F, modulus);
  if (polyv::deg(modulus) != 3)
    fail(ErrorCode::ConstructionError, "cyclic algebra needs a cubic modulus");
  if (!F.is_one(modulus.back()))
    fail(ErrorCode::ConstructionError, "cyclic algebra modulus must be monic");
  if (F.is_zero(b))
    fail(ErrorCode::DegenerateParameter, "cyclic algebra parameter b must be nonzero");

  FieldPtr Lp = make_extension(K, modulus, "x");
  const Field& L = *Lp;
  Fe gen = std::static_pointer_cast<const ExtensionField>(Lp)->gen();

  // sigma as the image of the generator; extend to all of L by evaluating
  // an element's coordinate polynomial at sigma(x)
  Fe sig1 = std::static_pointer_cast<const ExtensionField>(Lp)->from_coords(sigma_image);
  auto apply_sigma = [&](const Fe& u, const Fe& s) {
    Poly p;
    p.reserve(u.coords().size());
    for (const Fe& c : u.coords()) p.push_back(L.embed_base(c));
    return polyv::eval(L, p, s);
  };
  // sigma must be a root of the modulus (so it defines a field automorphism),
  // must move the generator, and must have order 3
  {
    Poly mod_in_L;
    mod_in_L.reserve(modulus.size());
    for (const Fe& c : modulus) mod_in_L.push_back(L.embed_base(c));
    if (!L.is_zero(polyv::eval(L, mod_in_L, sig1)))
      fail(ErrorCode::InvalidAutomorphism, "sigma image is not a root of the modulus");
  }
  if (L.eq(sig1, gen))
    fail(ErrorCode::InvalidAutomorphism, "sigma must not fix the generator");
  Fe sig2 = apply_sigma(sig1, sig1);
  Fe sig3 = apply_sigma(sig2, sig1);
  if (!L.eq(sig3, gen))
    fail(ErrorCode::InvalidAutomorphism, "sigma does not have order 3");

  // basis x^i z^j at index i + 3j; relations z l = sigma(l) z, z^3 = b
  std::array<Fe, 3> sigma_pow = {gen, sig1, sig2};
  std::vector<Fe> xpow(5, L.one());
  for (int i = 1; i <= 4; ++i) xpow[static_cast<size_t>(i)] = L.mul(xpow[static_cast<size_t>(i - 1)], gen);

  std::vector<std::string> labels;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      std::string s;
      if (i == 0 && j == 0) s = "1";
      if (i > 0) s += (i == 1) ? "x" : "x^2";
      if (j > 0) {
        if (!s.empty()) s += "*";
        s += (j == 1) ? "z" : "z^2";
      }
      labels.push_back(s);
    }
  // reorder into index order i + 3j
  std::vector<std::string> ordered(9);
  {
    size_t n = 0;
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) ordered[static_cast<size_t>(i + 3 * j)] = labels[n++];
  }

  AlgebraTable t(K, 9, ordered);
  // (x^i z^j)(x^k z^m) = x^i sigma^j(x)^k z^{j+m}, with z^3 = b
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) {
          Fe l = xpow[static_cast<size_t>(i)];
          Fe sk = L.one();
          for (int n = 0; n < k; ++n) sk = L.mul(sk, sigma_pow[static_cast<size_t>(j)]);
          l = L.mul(l, sk);
          int zexp = j + m;
          if (zexp >= 3) {
            zexp -= 3;
            l = L.mul(l, L.embed_base(b));
          }
          // l in L is a polynomial in x of degree <= 2: its coordinates land
          // on basis vectors x^r z^zexp
          Vec row = vecops::zero(F, 9);
          const auto& co = l.coords();
          for (size_t r = 0; r < co.size(); ++r)
            row[r + 3 * static_cast<size_t>(zexp)] = co[r];
          t.set_product(static_cast<size_t>(i + 3 * j), static_cast<size_t>(k + 3 * m),
                        row);
        }
  Vec unit = vecops::zero(F, 9);
  unit[0] = F.one();
  t.set_unit(unit);

  DegreeThreeAlgebra D(K, std::move(t), "cyclic");
  D.L_ = Lp;
  // splitting: x -> diag(x, sigma x, sigma^2 x), z -> [[0,1,0],[0,0,1],[b,0,0]]
  M3 X = m3_zero(L);
  X[0] = gen;
  X[4] = sig1;
  X[8] = sig2;
  M3 Z = m3_zero(L);
  Z[1] = L.one();
  Z[5] = L.one();
  Z[6] = L.embed_base(b);
  D.images_.resize(9);
  M3 Zj = m3_zero(L);
  Zj[0] = Zj[4] = Zj[8] = L.one();
  for (int j = 0; j < 3; ++j) {
    M3 cur = Zj;
    for (int i = 0; i < 3; ++i) {
      D.images_[static_cast<size_t>(i + 3 * j)] = cur;
      cur = m3_mul(L, X, cur);
    }
    Zj = m3_mul(L, Z, Zj);
  }
  D.params_ = nlohmann::ordered_json::object();
  D.params_["modulus"] = [&] {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const Fe& c : modulus) a.push_back(F.to_string(c));
    return a;
  }();
  D.params_["sigma"] = [&] {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const Fe& c : sigma_image) a.push_back(F.to_string(c));
    return a;
  }();
  D.params_["b"] = F.to_string(b);
  D.finish_construction();
  return D;
}

void DegreeThreeAlgebra::finish_construction() {
  const Field& F = *K_;
  const Field& L = *L_;
  const bool same = (L_ == K_);

  // the splitting embedding must be a unital homomorphism; with dim 9 this is
  // an exhaustive check of the multiplication table
  {
    M3 one_img = m3_zero(L);
    const Vec& u = table_.unit();
    for (size_t n = 0; n < 9; ++n) {
      if (F.is_zero(u[n])) continue;
      Fe c = same ? u[n] : L.embed_base(u[n]);
      for (int e = 0; e < 9; ++e) L.add_mul(one_img[static_cast<size_t>(e)], c, images_[n][static_cast<size_t>(e)]);
    }
    for (int e = 0; e < 9; ++e) {
      Fe want = (e == 0 || e == 4 || e == 8) ? L.one() : L.zero();
      if (!L.eq(one_img[static_cast<size_t>(e)], want))
        fail(ErrorCode::InternalConsistency, "splitting image of the unit is not the identity");
    }
    for (size_t i = 0; i < 9; ++i)
      for (size_t j = 0; j < 9; ++j) {
        M3 lhs = m3_mul(L, images_[i], images_[j]);
        M3 rhs = m3_zero(L);
        for (const auto& [k, c] : table_.row(i, j)) {
          Fe cl = same ? c : L.embed_base(c);
          for (int e = 0; e < 9; ++e) L.add_mul(rhs[static_cast<size_t>(e)], cl, images_[k][static_cast<size_t>(e)]);
        }
        for (int e = 0; e < 9; ++e)
          if (!L.eq(lhs[static_cast<size_t>(e)], rhs[static_cast<size_t>(e)]))
            fail(ErrorCode::InternalConsistency, "splitting map is not a homomorphism");
      }
  }
  if (!table_.is_associative())
    fail(ErrorCode::InternalConsistency, "degree-3 algebra table is not associative");

  trace_coeffs_.resize(9);
  for (size_t n = 0; n < 9; ++n)
    trace_coeffs_[n] = strip(m3_trace(L, images_[n]), "trace");

  if (!F.eq(reduced_trace(table_.unit()), F.from_int(3)))
    fail(ErrorCode::InternalConsistency, "reduced trace of the unit is not 3");
  if (!F.is_one(reduced_norm(table_.unit())))
    fail(ErrorCode::InternalConsistency, "reduced norm of the unit is not 1");
}

Fe DegreeThreeAlgebra::strip(const Fe& l, const char* what) const {
  if (L_ == K_) return l;
  const auto& co = l.coords();
  for (size_t n = 1; n < co.size(); ++n)
    if (!K_->is_zero(co[n]))
      fail(ErrorCode::InternalConsistency,
           std::string("reduced ") + what + " left the base field");
  return co.empty() ? K_->zero() : co[0];
}

Vec DegreeThreeAlgebra::product(const Vec& u, const Vec& v) const {
  return table_.product(u, v);
}

Fe DegreeThreeAlgebra::reduced_trace(const Vec& u) const {
  const Field& F = *K_;
  Fe t = F.zero();
  for (size_t n = 0; n < 9; ++n) F.add_mul(t, u[n], trace_coeffs_[n]);
  return t;
}

std::array<Fe, 9> DegreeThreeAlgebra::image(const Vec& u) const {
  const Field& L = *L_;
  const bool same = (L_ == K_);
  M3 m = m3_zero(L);
  for (size_t n = 0; n < 9; ++n) {
    if (K_->is_zero(u[n])) continue;
    Fe c = same ? u[n] : L.embed_base(u[n]);
    for (int e = 0; e < 9; ++e) L.add_mul(m[static_cast<size_t>(e)], c, images_[n][static_cast<size_t>(e)]);
  }
  return m;
}

Fe DegreeThreeAlgebra::reduced_norm(const Vec& u) const {
  return strip(m3_det(*L_, image(u)), "norm");
}

Fe DegreeThreeAlgebra::reduced_quad(const Vec& u) const {
  const Field& F = *K_;
  Fe t = reduced_trace(u);
  Fe t2 = reduced_trace(product(u, u));
  return F.div(F.sub(F.mul(t, t), t2), F.from_int(2));
}

Vec DegreeThreeAlgebra::tilde(const Vec& u) const {
  Vec r = vecops::scale(*K_, reduced_trace(u), table_.unit());
  return vecops::sub(*K_, r, u);
}

Vec DegreeThreeAlgebra::cross(const Vec& u, const Vec& v) const {
  const Field& F = *K_;
  Vec uv = product(u, v);
  Vec r = vecops::add(F, uv, product(v, u));
  Fe tu = reduced_trace(u);
  Fe tv = reduced_trace(v);
  r = vecops::sub(F, r, vecops::scale(F, tu, v));
  r = vecops::sub(F, r, vecops::scale(F, tv, u));
  Fe c = F.sub(F.mul(tu, tv), reduced_trace(uv));
  return vecops::add(F, r, vecops::scale(F, c, table_.unit()));
}

Vec DegreeThreeAlgebra::adjoint(const Vec& u) const {
  const Field& F = *K_;
  Vec r = product(u, u);
  r = vecops::sub(F, r, vecops::scale(F, reduced_trace(u), u));
  return vecops::add(F, r, vecops::scale(F, reduced_quad(u), table_.unit()));
}

}  // namespace albert
