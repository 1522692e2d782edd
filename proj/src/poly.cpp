#include "albert/poly.hpp"

#include <sstream>

namespace albert::polyv {

Poly trim(const Field& K, Poly a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
  return a;
}

Poly from_const(const Field& K, const Fe& c) {
  if (K.is_zero(c)) return {};
  return {c};
}

Poly add(const Field& K, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), K.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  return trim(K, std::move(r));
}

Poly sub(const Field& K, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), K.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  return trim(K, std::move(r));
}

Poly neg(const Field& K, const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = K.neg(c);
  return r;
}

Poly mul(const Field& K, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, K.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) K.add_mul(r[i + j], a[i], b[j]);
  }
  return trim(K, std::move(r));
}

Poly scale(const Field& K, const Fe& c, const Poly& a) {
  if (K.is_zero(c)) return {};
  Poly r = a;
  for (auto& x : r) x = K.mul(c, x);
  return trim(K, std::move(r));
}

std::pair<Poly, Poly> divmod(const Field& K, Poly num, const Poly& den) {
  if (den.empty()) fail(ErrorCode::NotInvertible, "polynomial division by zero");
  num = trim(K, std::move(num));
  if (num.size() < den.size()) return {{}, std::move(num)};
  size_t qsize = num.size() - den.size() + 1;
  Poly q(qsize, K.zero());
  Fe lead_inv = K.inv(den.back());
  for (size_t qi = qsize; qi-- > 0;) {
    Fe c = K.mul(num[qi + den.size() - 1], lead_inv);
    if (K.is_zero(c)) continue;
    q[qi] = c;
    for (size_t i = 0; i < den.size(); ++i) num[qi + i] = K.sub(num[qi + i], K.mul(c, den[i]));
  }
  return {trim(K, std::move(q)), trim(K, std::move(num))};
}

Poly mod(const Field& K, Poly num, const Poly& den) {
  return divmod(K, std::move(num), den).second;
}

Poly monic(const Field& K, const Poly& a) {
  if (a.empty()) return a;
  if (K.is_one(a.back())) return a;
  return scale(K, K.inv(a.back()), a);
}

Poly gcd(const Field& K, Poly a, Poly b) {
  a = trim(K, std::move(a));
  b = trim(K, std::move(b));
  while (!b.empty()) {
    Poly r = mod(K, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

std::tuple<Poly, Poly, Poly> egcd(const Field& K, const Poly& a, const Poly& b) {
  Poly r0 = trim(K, a), r1 = trim(K, b);
  Poly u0 = from_const(K, K.one()), u1 = {};
  Poly v0 = {}, v1 = from_const(K, K.one());
  while (!r1.empty()) {
    auto [q, r2] = divmod(K, std::move(r0), r1);
    Poly u2 = sub(K, u0, mul(K, q, u1));
    Poly v2 = sub(K, v0, mul(K, q, v1));
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (!r0.empty() && !K.is_one(r0.back())) {
    Fe s = K.inv(r0.back());
    r0 = scale(K, s, r0);
    u0 = scale(K, s, u0);
    v0 = scale(K, s, v0);
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

Fe eval(const Field& K, const Poly& a, const Fe& x) {
  Fe acc = K.zero();
  for (size_t i = a.size(); i-- > 0;) {
    acc = K.mul(acc, x);
    acc = K.add(acc, a[i]);
  }
  return acc;
}

Poly compose(const Field& K, const std::vector<Poly>& coeffs, const Poly& arg) {
  Poly acc;
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = mul(K, acc, arg);
    acc = add(K, acc, coeffs[i]);
  }
  return acc;
}

bool eq(const Field& K, const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!K.eq(a[i], b[i])) return false;
  return true;
}

std::string to_string(const Field& K, const Poly& a, const std::string& var) {
  if (a.empty()) return "0";
  auto coeff_atom = [&](const Fe& c) {
    std::string s = K.to_string(c);
    bool simple = true;
    for (size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      if (ch == '-' && i == 0) continue;
      if (!(ch >= '0' && ch <= '9') && ch != '/') { simple = false; break; }
    }
    return simple ? s : "(" + s + ")";
  };
  std::ostringstream out;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (K.is_zero(a[i])) continue;
    std::string c = coeff_atom(a[i]);
    bool neg_lead = c.size() > 1 && c[0] == '-';
    if (first) {
      first = false;
    } else if (neg_lead) {
      out << "-";
      c = c.substr(1);
    } else {
      out << "+";
    }
    if (i == 0) {
      out << c;
    } else {
      if (c == "1") {
      } else if (c == "-1") {
        out << "-";
      } else {
        out << c << "*";
      }
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  std::string s = out.str();
  return s.empty() ? "0" : s;
}

}  // namespace albert::polyv
