#include "albert/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "albert/jsonutil.hpp"
#include "albert/poly.hpp"
#include "albert/roots.hpp"

namespace albert {

using jsonu::Json;

Fe Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

Fe Field::from_mpq(const mpq_class& v) const {
  Fe num = from_mpz(mpz_class(v.get_num()));
  Fe den = from_mpz(mpz_class(v.get_den()));
  return mul(num, inv(den));
}

// ---------------------------------------------------------------------------
// rationals

RationalField::RationalField() {
  kind_ = FieldKind::Rationals;
  char_ = 0;
}

Fe RationalField::inv(const Fe& a) const {
  if (sgn(a.q()) == 0) fail(ErrorCode::NotInvertible, "division by zero in Q");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), a.q().get_mpq_t());
  return Fe::rat(r);
}

Fe RationalField::sample(SplitMix64& rng) const {
  // Small-height rationals: numerator in [-20, 20], denominator in [1, 20].
  mpq_class q(rng.range(-20, 20), rng.range(1, 20));
  q.canonicalize();
  return Fe::rat(q);
}

Json RationalField::descriptor() const { return Json{{"kind", "rationals"}}; }

// ---------------------------------------------------------------------------
// prime fields

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(uint64_t p) : p_(p) {
  kind_ = FieldKind::Prime;
  if (p == 2 || p == 3)
    fail(ErrorCode::UnsupportedCharacteristic, "characteristic " + std::to_string(p) + " is not supported");
  if (p >= (uint64_t(1) << 31))
    fail(ErrorCode::Unsupported, "prime moduli must be < 2^31");
  if (!is_prime_u64(p))
    fail(ErrorCode::ConstructionError, std::to_string(p) + " is not prime");
  char_ = mpz_class(static_cast<unsigned long>(p));
}

Fe PrimeField::from_mpz(const mpz_class& v) const {
  unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
  return Fe::res(r);
}

Fe PrimeField::inv(const Fe& a) const {
  if (a.r() == 0) fail(ErrorCode::NotInvertible, "division by zero in F_" + std::to_string(p_));
  // extended Euclid on int64; p < 2^31 keeps everything in range
  int64_t t = 0, new_t = 1;
  int64_t r = int64_t(p_), new_r = int64_t(a.r());
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t; std::swap(t, new_t);
    r -= q * new_r; std::swap(r, new_r);
  }
  if (t < 0) t += int64_t(p_);
  return Fe::res(uint64_t(t));
}

Json PrimeField::descriptor() const { return Json{{"kind", "prime"}, {"p", p_}}; }

// ---------------------------------------------------------------------------
// extension fields

ExtensionField::ExtensionField(FieldPtr base, Poly modulus, std::string var)
    : base_(std::move(base)), var_(std::move(var)) {
  kind_ = FieldKind::Extension;
  if (!base_) fail(ErrorCode::ConstructionError, "extension requires a base field");
  if (base_->kind() == FieldKind::Extension)
    fail(ErrorCode::Unsupported, "towers of extensions are not supported; base must be rationals, prime, or a function field");
  char_ = base_->characteristic();

  modulus_ = polyv::trim(*base_, std::move(modulus));
  int d = polyv::deg(modulus_);
  if (d < 2 || d > 3)
    fail(ErrorCode::ConstructionError, "extension modulus must have degree 2 or 3, got degree " + std::to_string(d));
  if (!base_->is_one(modulus_.back()))
    fail(ErrorCode::ConstructionError, "extension modulus must be monic");
  deg_ = size_t(d);

  if (var_.empty() || !(std::isalpha(static_cast<unsigned char>(var_[0])) || var_[0] == '_'))
    fail(ErrorCode::ConstructionError, "invalid extension variable name '" + var_ + "'");
  if (base_->symbols().count(var_))
    fail(ErrorCode::ConstructionError, "extension variable '" + var_ + "' collides with a base field generator");

  auto irr = poly_irreducible(base_, modulus_);
  if (!irr.has_value())
    fail(ErrorCode::ConstructionError, "cannot verify irreducibility of the modulus over this base field");
  if (!*irr) {
    auto roots = poly_roots(base_, modulus_);
    std::string msg = "extension modulus is reducible";
    if (roots && !roots->empty()) msg += " (root " + base_->to_string(roots->front()) + ")";
    fail(ErrorCode::ConstructionError, msg);
  }

  // Reduction rows for x^deg .. x^(2*deg-2).
  std::vector<Fe> row(deg_);
  for (size_t i = 0; i < deg_; ++i) row[i] = base_->neg(modulus_[i]);
  red_.push_back(row);
  for (size_t k = 1; k + 1 < deg_; ++k) {
    std::vector<Fe> next(deg_, base_->zero());
    const std::vector<Fe>& prev = red_.back();
    // multiply by x, then reduce the overflow term
    for (size_t i = 0; i + 1 < deg_; ++i) next[i + 1] = prev[i];
    const Fe& top = prev[deg_ - 1];
    for (size_t i = 0; i < deg_; ++i) base_->add_mul(next[i], top, red_[0][i]);
    red_.push_back(std::move(next));
  }
}

Fe ExtensionField::zero() const { return Fe::ext(std::vector<Fe>(deg_, base_->zero())); }

Fe ExtensionField::one() const {
  std::vector<Fe> c(deg_, base_->zero());
  c[0] = base_->one();
  return Fe::ext(std::move(c));
}

Fe ExtensionField::gen() const {
  std::vector<Fe> c(deg_, base_->zero());
  c[1] = base_->one();
  return Fe::ext(std::move(c));
}

Fe ExtensionField::embed_base(const Fe& b) const {
  std::vector<Fe> c(deg_, base_->zero());
  c[0] = b;
  return Fe::ext(std::move(c));
}

Fe ExtensionField::from_coords(std::vector<Fe> coords) const {
  Poly r = polyv::mod(*base_, polyv::trim(*base_, std::move(coords)), modulus_);
  r.resize(deg_, base_->zero());
  return Fe::ext(std::move(r));
}

Fe ExtensionField::add(const Fe& a, const Fe& b) const {
  const auto& x = a.coords();
  const auto& y = b.coords();
  std::vector<Fe> c(deg_);
  for (size_t i = 0; i < deg_; ++i) c[i] = base_->add(x[i], y[i]);
  return Fe::ext(std::move(c));
}

Fe ExtensionField::sub(const Fe& a, const Fe& b) const {
  const auto& x = a.coords();
  const auto& y = b.coords();
  std::vector<Fe> c(deg_);
  for (size_t i = 0; i < deg_; ++i) c[i] = base_->sub(x[i], y[i]);
  return Fe::ext(std::move(c));
}

Fe ExtensionField::neg(const Fe& a) const {
  const auto& x = a.coords();
  std::vector<Fe> c(deg_);
  for (size_t i = 0; i < deg_; ++i) c[i] = base_->neg(x[i]);
  return Fe::ext(std::move(c));
}

Fe ExtensionField::mul(const Fe& a, const Fe& b) const {
  const auto& x = a.coords();
  const auto& y = b.coords();
  std::vector<Fe> buf(2 * deg_ - 1, base_->zero());
  for (size_t i = 0; i < deg_; ++i) {
    if (base_->is_zero(x[i])) continue;
    for (size_t j = 0; j < deg_; ++j) base_->add_mul(buf[i + j], x[i], y[j]);
  }
  std::vector<Fe> c(buf.begin(), buf.begin() + deg_);
  for (size_t k = deg_; k < buf.size(); ++k) {
    const Fe& t = buf[k];
    if (base_->is_zero(t)) continue;
    const auto& row = red_[k - deg_];
    for (size_t i = 0; i < deg_; ++i) base_->add_mul(c[i], t, row[i]);
  }
  return Fe::ext(std::move(c));
}

Fe ExtensionField::inv(const Fe& a) const {
  if (is_zero(a)) fail(ErrorCode::NotInvertible, "division by zero in extension field");
  Poly ap = polyv::trim(*base_, a.coords());
  auto [g, u, v] = polyv::egcd(*base_, ap, modulus_);
  (void)v;
  if (polyv::deg(g) != 0)
    fail(ErrorCode::InternalConsistency, "modulus not coprime with a nonzero element");
  Poly r = polyv::mod(*base_, u, modulus_);
  r.resize(deg_, base_->zero());
  return Fe::ext(std::move(r));
}

bool ExtensionField::is_zero(const Fe& a) const {
  for (const Fe& c : a.coords())
    if (!base_->is_zero(c)) return false;
  return true;
}

bool ExtensionField::eq(const Fe& a, const Fe& b) const {
  const auto& x = a.coords();
  const auto& y = b.coords();
  for (size_t i = 0; i < deg_; ++i)
    if (!base_->eq(x[i], y[i])) return false;
  return true;
}

std::string ExtensionField::to_string(const Fe& a) const {
  return polyv::to_string(*base_, polyv::trim(*base_, a.coords()), var_);
}

Fe ExtensionField::sample(SplitMix64& rng) const {
  std::vector<Fe> c(deg_);
  for (size_t i = 0; i < deg_; ++i) c[i] = base_->sample(rng);
  return Fe::ext(std::move(c));
}

Json ExtensionField::descriptor() const {
  Json mod = Json::array();
  for (const Fe& c : modulus_) mod.push_back(base_->to_string(c));
  return Json{{"kind", "extension"}, {"base", base_->descriptor()}, {"modulus", mod}, {"var", var_}};
}

std::map<std::string, Fe, std::less<>> ExtensionField::symbols() const {
  std::map<std::string, Fe, std::less<>> out;
  for (const auto& [name, val] : base_->symbols()) out.emplace(name, embed_base(val));
  out.emplace(var_, gen());
  return out;
}

// ---------------------------------------------------------------------------
// function fields

namespace {

Fe make_frac(const Field& base, Poly num, Poly den) {
  num = polyv::trim(base, std::move(num));
  den = polyv::trim(base, std::move(den));
  if (den.empty()) fail(ErrorCode::NotInvertible, "zero denominator in function field");
  if (num.empty()) {
    den = {base.one()};
  } else {
    Poly g = polyv::gcd(base, num, den);
    if (polyv::deg(g) > 0) {
      num = polyv::divmod(base, std::move(num), g).first;
      den = polyv::divmod(base, std::move(den), g).first;
    }
    if (!base.is_one(den.back())) {
      Fe s = base.inv(den.back());
      num = polyv::scale(base, s, num);
      den = polyv::scale(base, s, den);
    }
  }
  auto rep = std::make_shared<FracRep>();
  rep->num = std::move(num);
  rep->den = std::move(den);
  return Fe::frac(std::move(rep));
}

bool den_is_one(const Field& base, const FracRep& f) {
  return f.den.size() == 1 && base.is_one(f.den[0]);
}

}  // namespace

FunctionField::FunctionField(FieldPtr base, std::string var) : base_(std::move(base)), var_(std::move(var)) {
  kind_ = FieldKind::FunctionField;
  if (!base_) fail(ErrorCode::ConstructionError, "function field requires a base field");
  if (base_->kind() != FieldKind::Rationals && base_->kind() != FieldKind::Prime)
    fail(ErrorCode::Unsupported, "function-field base must be rationals or a prime field");
  if (var_.empty() || !(std::isalpha(static_cast<unsigned char>(var_[0])) || var_[0] == '_'))
    fail(ErrorCode::ConstructionError, "invalid function-field variable name '" + var_ + "'");
  char_ = base_->characteristic();
}

Fe FunctionField::zero() const { return make_frac(*base_, {}, {base_->one()}); }
Fe FunctionField::one() const { return make_frac(*base_, {base_->one()}, {base_->one()}); }
Fe FunctionField::gen() const { return make_frac(*base_, {base_->zero(), base_->one()}, {base_->one()}); }
Fe FunctionField::embed_base(const Fe& b) const { return make_frac(*base_, {b}, {base_->one()}); }
Fe FunctionField::from_poly(Poly num) const { return make_frac(*base_, std::move(num), {base_->one()}); }
Fe FunctionField::from_frac(Poly num, Poly den) const { return make_frac(*base_, std::move(num), std::move(den)); }

Fe FunctionField::add(const Fe& a, const Fe& b) const {
  const FracRep& x = a.fr();
  const FracRep& y = b.fr();
  if (den_is_one(*base_, x) && den_is_one(*base_, y))
    return make_frac(*base_, polyv::add(*base_, x.num, y.num), {base_->one()});
  if (polyv::eq(*base_, x.den, y.den))
    return make_frac(*base_, polyv::add(*base_, x.num, y.num), x.den);
  Poly num = polyv::add(*base_, polyv::mul(*base_, x.num, y.den), polyv::mul(*base_, y.num, x.den));
  return make_frac(*base_, std::move(num), polyv::mul(*base_, x.den, y.den));
}

Fe FunctionField::sub(const Fe& a, const Fe& b) const { return add(a, neg(b)); }

Fe FunctionField::neg(const Fe& a) const {
  const FracRep& x = a.fr();
  auto rep = std::make_shared<FracRep>();
  rep->num = polyv::neg(*base_, x.num);
  rep->den = x.den;
  return Fe::frac(std::move(rep));
}

Fe FunctionField::mul(const Fe& a, const Fe& b) const {
  const FracRep& x = a.fr();
  const FracRep& y = b.fr();
  if (x.num.empty() || y.num.empty()) return zero();
  if (den_is_one(*base_, x) && den_is_one(*base_, y))
    return make_frac(*base_, polyv::mul(*base_, x.num, y.num), {base_->one()});
  return make_frac(*base_, polyv::mul(*base_, x.num, y.num), polyv::mul(*base_, x.den, y.den));
}

Fe FunctionField::inv(const Fe& a) const {
  const FracRep& x = a.fr();
  if (x.num.empty()) fail(ErrorCode::NotInvertible, "division by zero in function field");
  return make_frac(*base_, x.den, x.num);
}

bool FunctionField::is_zero(const Fe& a) const { return a.fr().num.empty(); }

bool FunctionField::eq(const Fe& a, const Fe& b) const {
  return polyv::eq(*base_, a.fr().num, b.fr().num) && polyv::eq(*base_, a.fr().den, b.fr().den);
}

std::string FunctionField::to_string(const Fe& a) const {
  const FracRep& x = a.fr();
  if (den_is_one(*base_, x)) return polyv::to_string(*base_, x.num, var_);
  return "(" + polyv::to_string(*base_, x.num, var_) + ")/(" + polyv::to_string(*base_, x.den, var_) + ")";
}

Fe FunctionField::sample(SplitMix64& rng) const {
  // Polynomial samples of degree <= 2; inverses introduce denominators where
  // the suites need them without blowing up coefficient growth.
  Poly num(3);
  for (auto& c : num) c = base_->sample(rng);
  return make_frac(*base_, std::move(num), {base_->one()});
}

Json FunctionField::descriptor() const {
  return Json{{"kind", "function-field"}, {"base", base_->descriptor()}, {"var", var_}};
}

std::map<std::string, Fe, std::less<>> FunctionField::symbols() const {
  std::map<std::string, Fe, std::less<>> out;
  for (const auto& [name, val] : base_->symbols()) out.emplace(name, embed_base(val));
  out.emplace(var_, gen());
  return out;
}

// ---------------------------------------------------------------------------
// factories

FieldPtr make_rationals() { return std::make_shared<RationalField>(); }
FieldPtr make_prime(uint64_t p) { return std::make_shared<PrimeField>(p); }
FieldPtr make_extension(FieldPtr base, Poly modulus, std::string var) {
  return std::make_shared<ExtensionField>(std::move(base), std::move(modulus), std::move(var));
}
FieldPtr make_function_field(FieldPtr base, std::string var) {
  return std::make_shared<FunctionField>(std::move(base), std::move(var));
}

// ---------------------------------------------------------------------------
// scalar expression parser

namespace {

struct ScalarParser {
  const Field& K;
  std::string_view s;
  size_t pos = 0;
  std::map<std::string, Fe, std::less<>> syms;

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrorCode::ParseError, "scalar parse error at offset " + std::to_string(pos) + ": " + msg +
                                    " in \"" + std::string(s) + "\"");
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  Fe parse_expr() {
    Fe acc = parse_term();
    for (;;) {
      if (eat('+')) acc = K.add(acc, parse_term());
      else if (eat('-')) acc = K.sub(acc, parse_term());
      else return acc;
    }
  }

  Fe parse_term() {
    Fe acc = parse_unary();
    for (;;) {
      if (eat('*')) acc = K.mul(acc, parse_unary());
      else if (eat('/')) acc = K.div(acc, parse_unary());
      else return acc;
    }
  }

  Fe parse_unary() {
    if (eat('-')) return K.neg(parse_unary());
    return parse_power();
  }

  Fe parse_power() {
    Fe base = parse_primary();
    skip_ws();
    if (!eat('^')) return base;
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected a nonnegative integer exponent");
    unsigned long e = std::stoul(std::string(s.substr(start, pos - start)));
    if (e > 4096) err("exponent too large");
    Fe acc = K.one();
    for (unsigned long i = 0; i < e; ++i) acc = K.mul(acc, base);
    return acc;
  }

  Fe parse_primary() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Fe v = parse_expr();
      if (!eat(')')) err("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return K.from_mpz(mpz_class(std::string(s.substr(start, pos - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name(s.substr(start, pos - start));
      auto it = syms.find(name);
      if (it == syms.end()) err("unknown symbol '" + name + "'");
      return it->second;
    }
    err(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Fe Field::parse(std::string_view text) const {
  ScalarParser p{*this, text, 0, symbols()};
  p.skip_ws();
  Fe v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.err("trailing characters");
  return v;
}

// ---------------------------------------------------------------------------
// JSON descriptors

FieldPtr field_from_json(const Json& j, const std::string& path) {
  jsonu::expect_object(j, path);
  std::string kind = jsonu::get_string(jsonu::member(j, path, "kind"), path + "/kind");
  if (kind == "rationals") {
    jsonu::check_keys(j, path, {"kind"});
    return make_rationals();
  }
  if (kind == "prime") {
    jsonu::check_keys(j, path, {"kind", "p"});
    uint64_t p = jsonu::get_uint(jsonu::member(j, path, "p"), path + "/p");
    return make_prime(p);
  }
  if (kind == "extension") {
    jsonu::check_keys(j, path, {"kind", "base", "modulus", "var"});
    FieldPtr base = field_from_json(jsonu::member(j, path, "base"), path + "/base");
    auto mod_strs = jsonu::get_string_array(jsonu::member(j, path, "modulus"), path + "/modulus");
    Poly modulus;
    for (size_t i = 0; i < mod_strs.size(); ++i) {
      try {
        modulus.push_back(base->parse(mod_strs[i]));
      } catch (const Error& e) {
        jsonu::bad(path + "/modulus/" + std::to_string(i), e.what());
      }
    }
    std::string var = "x";
    if (const Json* v = jsonu::member_opt(j, path, "var")) var = jsonu::get_string(*v, path + "/var");
    return make_extension(std::move(base), std::move(modulus), std::move(var));
  }
  if (kind == "function-field") {
    jsonu::check_keys(j, path, {"kind", "base", "var"});
    FieldPtr base = field_from_json(jsonu::member(j, path, "base"), path + "/base");
    std::string var = jsonu::get_string(jsonu::member(j, path, "var"), path + "/var");
    return make_function_field(std::move(base), std::move(var));
  }
  jsonu::bad(path + "/kind", "unknown field kind '" + kind + "'");
}

}  // namespace albert
