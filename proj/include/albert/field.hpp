#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "albert/errors.hpp"
#include "albert/rng.hpp"

#include "json.hpp"

namespace albert {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct FracRep;

// A field element. The payload depends on the owning field:
//   rationals       -> mpq_class, canonical
//   prime(p)        -> uint64_t residue in [0, p)
//   extension       -> coordinate vector over the base, length = degree
//   function field  -> reduced numerator/denominator polynomial pair
// Elements carry no back-pointer to their field; all arithmetic goes through
// the Field, which keeps the representation small enough for 27-dimensional
// algebra tables with hundreds of thousands of entries in flight.
class Fe {
 public:
  Fe() : v_(std::monostate{}) {}

  static Fe rat(mpq_class q) { Fe e; e.v_ = std::move(q); return e; }
  static Fe res(uint64_t r) { Fe e; e.v_ = r; return e; }
  static Fe ext(std::vector<Fe> coords);
  static Fe frac(std::shared_ptr<const FracRep> f) { Fe e; e.v_ = std::move(f); return e; }

  bool is_null() const { return std::holds_alternative<std::monostate>(v_); }

  const mpq_class& q() const { return std::get<mpq_class>(v_); }
  mpq_class& q() { return std::get<mpq_class>(v_); }
  uint64_t r() const { return std::get<uint64_t>(v_); }
  const std::vector<Fe>& coords() const { return *std::get<std::shared_ptr<const std::vector<Fe>>>(v_); }
  const FracRep& fr() const { return *std::get<std::shared_ptr<const FracRep>>(v_); }

  bool holds_rat() const { return std::holds_alternative<mpq_class>(v_); }
  bool holds_res() const { return std::holds_alternative<uint64_t>(v_); }
  bool holds_ext() const { return std::holds_alternative<std::shared_ptr<const std::vector<Fe>>>(v_); }
  bool holds_frac() const { return std::holds_alternative<std::shared_ptr<const FracRep>>(v_); }

 private:
  std::variant<std::monostate,
               mpq_class,
               uint64_t,
               std::shared_ptr<const std::vector<Fe>>,
               std::shared_ptr<const FracRep>>
      v_;
};

using Poly = std::vector<Fe>;  // coefficients low to high, no trailing zeros, empty = 0

struct FracRep {
  Poly num;
  Poly den;  // monic, nonzero; den = {1} for polynomials
};

inline Fe Fe::ext(std::vector<Fe> coords) {
  Fe e;
  e.v_ = std::make_shared<const std::vector<Fe>>(std::move(coords));
  return e;
}

enum class FieldKind { Rationals, Prime, Extension, FunctionField };

// Abstract field of characteristic != 2, 3. Concrete towers:
//   rationals | prime(p) | extension(base, modulus) | function_field(base, var)
class Field : public std::enable_shared_from_this<Field> {
 public:
  virtual ~Field() = default;

  FieldKind kind() const { return kind_; }
  const mpz_class& characteristic() const { return char_; }

  virtual Fe zero() const = 0;
  virtual Fe one() const = 0;
  virtual Fe from_int(long v) const;
  virtual Fe from_mpz(const mpz_class& v) const = 0;
  virtual Fe from_mpq(const mpq_class& v) const;  // clears the denominator via inv

  virtual Fe add(const Fe& a, const Fe& b) const = 0;
  virtual Fe sub(const Fe& a, const Fe& b) const = 0;
  virtual Fe neg(const Fe& a) const = 0;
  virtual Fe mul(const Fe& a, const Fe& b) const = 0;
  virtual Fe inv(const Fe& a) const = 0;  // throws NotInvertible on zero
  Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

  // In-place accumulate, the hot path of every table contraction.
  virtual void add_assign(Fe& a, const Fe& b) const { a = add(a, b); }
  void add_mul(Fe& acc, const Fe& a, const Fe& b) const { add_assign(acc, mul(a, b)); }

  virtual bool is_zero(const Fe& a) const = 0;
  bool is_one(const Fe& a) const { return eq(a, one()); }
  virtual bool eq(const Fe& a, const Fe& b) const = 0;

  // Canonical serialization; parse() inverts it. parse accepts the full
  // scalar expression grammar (integers, tower generators, + - * / ^, parens).
  virtual std::string to_string(const Fe& a) const = 0;
  Fe parse(std::string_view text) const;

  // Seeded sampler with small coefficient height; documented per field in the
  // README. sample_nonzero retries until nonzero.
  virtual Fe sample(SplitMix64& rng) const = 0;
  Fe sample_nonzero(SplitMix64& rng) const {
    for (;;) {
      Fe x = sample(rng);
      if (!is_zero(x)) return x;
    }
  }

  virtual nlohmann::ordered_json descriptor() const = 0;
  bool same(const Field& other) const { return descriptor() == other.descriptor(); }

  // Generator symbols visible at this level of the tower, each embedded into
  // this field. Drives both parsing and printing.
  virtual std::map<std::string, Fe, std::less<>> symbols() const { return {}; }

  // Embed an element of the base field (identity for ground fields).
  virtual Fe embed_base(const Fe& b) const { return b; }
  virtual FieldPtr base() const { return nullptr; }

 protected:
  FieldKind kind_;
  mpz_class char_;
};

FieldPtr make_rationals();
FieldPtr make_prime(uint64_t p);
// modulus: monic, degree 2 or 3, coefficients over base, irreducibility is
// verified at construction. var defaults to "x".
FieldPtr make_extension(FieldPtr base, Poly modulus, std::string var = "x");
FieldPtr make_function_field(FieldPtr base, std::string var);

// Concrete classes are exposed for the few places that need field-specific
// data (extension degree, modulus, the function-field variable).
class RationalField final : public Field {
 public:
  RationalField();
  Fe zero() const override { return Fe::rat(mpq_class(0)); }
  Fe one() const override { return Fe::rat(mpq_class(1)); }
  Fe from_mpz(const mpz_class& v) const override { return Fe::rat(mpq_class(v)); }
  Fe from_mpq(const mpq_class& v) const override { return Fe::rat(v); }
  Fe add(const Fe& a, const Fe& b) const override { return Fe::rat(a.q() + b.q()); }
  Fe sub(const Fe& a, const Fe& b) const override { return Fe::rat(a.q() - b.q()); }
  Fe neg(const Fe& a) const override { return Fe::rat(-a.q()); }
  Fe mul(const Fe& a, const Fe& b) const override { return Fe::rat(a.q() * b.q()); }
  Fe inv(const Fe& a) const override;
  void add_assign(Fe& a, const Fe& b) const override { a.q() += b.q(); }
  bool is_zero(const Fe& a) const override { return sgn(a.q()) == 0; }
  bool eq(const Fe& a, const Fe& b) const override { return a.q() == b.q(); }
  std::string to_string(const Fe& a) const override { return a.q().get_str(); }
  Fe sample(SplitMix64& rng) const override;
  nlohmann::ordered_json descriptor() const override;
};

class PrimeField final : public Field {
 public:
  explicit PrimeField(uint64_t p);
  uint64_t p() const { return p_; }
  Fe zero() const override { return Fe::res(0); }
  Fe one() const override { return Fe::res(1); }
  Fe from_mpz(const mpz_class& v) const override;
  Fe add(const Fe& a, const Fe& b) const override { return Fe::res((a.r() + b.r()) % p_); }
  Fe sub(const Fe& a, const Fe& b) const override { return Fe::res((a.r() + p_ - b.r()) % p_); }
  Fe neg(const Fe& a) const override { return Fe::res(a.r() == 0 ? 0 : p_ - a.r()); }
  Fe mul(const Fe& a, const Fe& b) const override { return Fe::res((a.r() * b.r()) % p_); }
  Fe inv(const Fe& a) const override;
  void add_assign(Fe& a, const Fe& b) const override { a = add(a, b); }
  bool is_zero(const Fe& a) const override { return a.r() == 0; }
  bool eq(const Fe& a, const Fe& b) const override { return a.r() == b.r(); }
  std::string to_string(const Fe& a) const override { return std::to_string(a.r()); }
  Fe sample(SplitMix64& rng) const override { return Fe::res(rng.below(p_)); }
  nlohmann::ordered_json descriptor() const override;

 private:
  uint64_t p_;
};

class ExtensionField final : public Field {
 public:
  ExtensionField(FieldPtr base, Poly modulus, std::string var);
  size_t degree() const { return deg_; }
  const Poly& modulus() const { return modulus_; }
  const std::string& var() const { return var_; }
  FieldPtr base() const override { return base_; }

  Fe zero() const override;
  Fe one() const override;
  Fe from_mpz(const mpz_class& v) const override { return embed_base(base_->from_mpz(v)); }
  Fe gen() const;  // the class of x
  Fe from_coords(std::vector<Fe> coords) const;  // length <= degree, padded
  Fe add(const Fe& a, const Fe& b) const override;
  Fe sub(const Fe& a, const Fe& b) const override;
  Fe neg(const Fe& a) const override;
  Fe mul(const Fe& a, const Fe& b) const override;
  Fe inv(const Fe& a) const override;
  bool is_zero(const Fe& a) const override;
  bool eq(const Fe& a, const Fe& b) const override;
  std::string to_string(const Fe& a) const override;
  Fe sample(SplitMix64& rng) const override;
  nlohmann::ordered_json descriptor() const override;
  std::map<std::string, Fe, std::less<>> symbols() const override;
  Fe embed_base(const Fe& b) const override;

 private:
  FieldPtr base_;
  Poly modulus_;  // monic, length deg_+1
  std::string var_;
  size_t deg_;
  // red_[k] = coordinates of x^(deg_+k) for k in [0, deg_-1)
  std::vector<std::vector<Fe>> red_;
};

class FunctionField final : public Field {
 public:
  FunctionField(FieldPtr base, std::string var);
  const std::string& var() const { return var_; }
  FieldPtr base() const override { return base_; }

  Fe zero() const override;
  Fe one() const override;
  Fe from_mpz(const mpz_class& v) const override { return embed_base(base_->from_mpz(v)); }
  Fe gen() const;
  Fe from_poly(Poly num) const;                 // num over base
  Fe from_frac(Poly num, Poly den) const;       // reduced on construction
  Fe add(const Fe& a, const Fe& b) const override;
  Fe sub(const Fe& a, const Fe& b) const override;
  Fe neg(const Fe& a) const override;
  Fe mul(const Fe& a, const Fe& b) const override;
  Fe inv(const Fe& a) const override;
  bool is_zero(const Fe& a) const override;
  bool eq(const Fe& a, const Fe& b) const override;
  std::string to_string(const Fe& a) const override;
  Fe sample(SplitMix64& rng) const override;
  nlohmann::ordered_json descriptor() const override;
  std::map<std::string, Fe, std::less<>> symbols() const override;
  Fe embed_base(const Fe& b) const override;

 private:
  FieldPtr base_;
  std::string var_;
};

// Build a field from its JSON descriptor (the same shape descriptor() emits;
// this is the CLI config format for "field").
FieldPtr field_from_json(const nlohmann::ordered_json& j, const std::string& path);

}  // namespace albert
