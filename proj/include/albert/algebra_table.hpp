#pragma once

#include <string>
#include <vector>

#include "albert/field.hpp"

#include "json.hpp"

namespace albert {

using Vec = std::vector<Fe>;

// Dense coordinate-vector helpers over an explicit field.
namespace vecops {

Vec zero(const Field& K, size_t dim);
Vec basis(const Field& K, size_t dim, size_t i);
Vec add(const Field& K, const Vec& a, const Vec& b);
Vec sub(const Field& K, const Vec& a, const Vec& b);
Vec neg(const Field& K, const Vec& a);
Vec scale(const Field& K, const Fe& c, const Vec& a);
void add_scaled(const Field& K, Vec& acc, const Fe& c, const Vec& a);
bool is_zero(const Field& K, const Vec& a);
bool eq(const Field& K, const Vec& a, const Vec& b);
Vec sample(const Field& K, size_t dim, SplitMix64& rng);
Vec sample_nonzero(const Field& K, size_t dim, SplitMix64& rng);
nlohmann::ordered_json to_json(const Field& K, const Vec& a);
Vec from_json(const Field& K, const nlohmann::ordered_json& j, size_t dim, const std::string& path);

}  // namespace vecops

// One structure-constant entry: basis index and coefficient.
struct SCEntry {
  uint16_t k;
  Fe c;
};

// Structure-constant multiplication table with sparse rows, shared by the
// composition, degree-3, and Jordan layers.
class AlgebraTable {
 public:
  AlgebraTable(FieldPtr K, size_t dim, std::vector<std::string> labels);

  const FieldPtr& field() const { return K_; }
  size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(size_t i, size_t j, const Vec& value);
  const std::vector<SCEntry>& row(size_t i, size_t j) const { return rows_[i * dim_ + j]; }
  Fe coeff(size_t i, size_t j, size_t k) const;

  void set_unit(Vec u) { unit_ = std::move(u); }
  const Vec& unit() const { return unit_; }

  Vec product(const Vec& x, const Vec& y) const;
  // acc += s * (e_i * e_j)
  void accumulate_row(Vec& acc, const Fe& s, size_t i, size_t j) const;

  bool is_commutative() const;
  bool is_associative() const;
  void check_unit() const;  // throws ConstructionError when the unit fails

  // Additively perturb c_{ijk}; deliberately skips revalidation (used by the
  // mutation-regression hook).
  void perturb(size_t i, size_t j, size_t k, const Fe& delta);

  nlohmann::ordered_json dump() const;

 private:
  FieldPtr K_;
  size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SCEntry>> rows_;
  Vec unit_;
};

}  // namespace albert
