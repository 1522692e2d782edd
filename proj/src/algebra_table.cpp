#include "albert/algebra_table.hpp"

#include "albert/jsonutil.hpp"

namespace albert {

namespace vecops {

Vec zero(const Field& K, size_t dim) { return Vec(dim, K.zero()); }

Vec basis(const Field& K, size_t dim, size_t i) {
  Vec v(dim, K.zero());
  v[i] = K.one();
  return v;
}

Vec add(const Field& K, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = K.add(a[i], b[i]);
  return r;
}

Vec sub(const Field& K, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = K.sub(a[i], b[i]);
  return r;
}

Vec neg(const Field& K, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = K.neg(a[i]);
  return r;
}

Vec scale(const Field& K, const Fe& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = K.mul(c, a[i]);
  return r;
}

void add_scaled(const Field& K, Vec& acc, const Fe& c, const Vec& a) {
  for (size_t i = 0; i < a.size(); ++i) K.add_mul(acc[i], c, a[i]);
}

bool is_zero(const Field& K, const Vec& a) {
  for (const Fe& x : a)
    if (!K.is_zero(x)) return false;
  return true;
}

bool eq(const Field& K, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!K.eq(a[i], b[i])) return false;
  return true;
}

Vec sample(const Field& K, size_t dim, SplitMix64& rng) {
  Vec v(dim);
  for (auto& x : v) x = K.sample(rng);
  return v;
}

Vec sample_nonzero(const Field& K, size_t dim, SplitMix64& rng) {
  for (;;) {
    Vec v = sample(K, dim, rng);
    if (!is_zero(K, v)) return v;
  }
}

nlohmann::ordered_json to_json(const Field& K, const Vec& a) {
  auto j = nlohmann::ordered_json::array();
  for (const Fe& x : a) j.push_back(K.to_string(x));
  return j;
}

Vec from_json(const Field& K, const nlohmann::ordered_json& j, size_t dim, const std::string& path) {
  if (!j.is_array() || j.size() != dim)
    jsonu::bad(path, "expected an array of " + std::to_string(dim) + " scalar strings");
  Vec v(dim);
  for (size_t i = 0; i < dim; ++i) {
    if (!j[i].is_string()) jsonu::bad(path + "/" + std::to_string(i), "expected a scalar string");
    try {
      v[i] = K.parse(j[i].get<std::string>());
    } catch (const Error& e) {
      jsonu::bad(path + "/" + std::to_string(i), e.what());
    }
  }
  return v;
}

}  // namespace vecops

AlgebraTable::AlgebraTable(FieldPtr K, size_t dim, std::vector<std::string> labels)
    : K_(std::move(K)), dim_(dim), labels_(std::move(labels)), rows_(dim * dim) {
  if (labels_.size() != dim_) fail(ErrorCode::ShapeError, "label count does not match table dimension");
  if (dim_ > 0xFFFF) fail(ErrorCode::ShapeError, "table dimension too large");
}

void AlgebraTable::set_product(size_t i, size_t j, const Vec& value) {
  std::vector<SCEntry> row;
  for (size_t k = 0; k < dim_; ++k)
    if (!K_->is_zero(value[k])) row.push_back({uint16_t(k), value[k]});
  rows_[i * dim_ + j] = std::move(row);
}

Fe AlgebraTable::coeff(size_t i, size_t j, size_t k) const {
  for (const SCEntry& e : row(i, j))
    if (e.k == k) return e.c;
  return K_->zero();
}

Vec AlgebraTable::product(const Vec& x, const Vec& y) const {
  Vec r = vecops::zero(*K_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (K_->is_zero(x[i])) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (K_->is_zero(y[j])) continue;
      const auto& entries = rows_[i * dim_ + j];
      if (entries.empty()) continue;
      Fe s = K_->mul(x[i], y[j]);
      for (const SCEntry& e : entries) K_->add_mul(r[e.k], s, e.c);
    }
  }
  return r;
}

void AlgebraTable::accumulate_row(Vec& acc, const Fe& s, size_t i, size_t j) const {
  for (const SCEntry& e : rows_[i * dim_ + j]) K_->add_mul(acc[e.k], s, e.c);
}

bool AlgebraTable::is_commutative() const {
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i + 1; j < dim_; ++j) {
      const auto& a = row(i, j);
      const auto& b = row(j, i);
      if (a.size() != b.size()) return false;
      for (size_t t = 0; t < a.size(); ++t)
        if (a[t].k != b[t].k || !K_->eq(a[t].c, b[t].c)) return false;
    }
  return true;
}

bool AlgebraTable::is_associative() const {
  for (size_t i = 0; i < dim_; ++i) {
    Vec ei = vecops::basis(*K_, dim_, i);
    for (size_t j = 0; j < dim_; ++j) {
      Vec ej = vecops::basis(*K_, dim_, j);
      Vec ij = product(ei, ej);
      for (size_t k = 0; k < dim_; ++k) {
        Vec ek = vecops::basis(*K_, dim_, k);
        if (!vecops::eq(*K_, product(ij, ek), product(ei, product(ej, ek)))) return false;
      }
    }
  }
  return true;
}

void AlgebraTable::check_unit() const {
  if (unit_.size() != dim_) fail(ErrorCode::ConstructionError, "unit vector missing or of wrong dimension");
  for (size_t i = 0; i < dim_; ++i) {
    Vec ei = vecops::basis(*K_, dim_, i);
    if (!vecops::eq(*K_, product(unit_, ei), ei) || !vecops::eq(*K_, product(ei, unit_), ei))
      fail(ErrorCode::ConstructionError, "unit fails to act as identity on basis vector " + labels_[i]);
  }
}

void AlgebraTable::perturb(size_t i, size_t j, size_t k, const Fe& delta) {
  if (i >= dim_ || j >= dim_ || k >= dim_) fail(ErrorCode::ShapeError, "perturbation index out of range");
  Vec dense = vecops::zero(*K_, dim_);
  for (const SCEntry& e : row(i, j)) dense[e.k] = e.c;
  dense[k] = K_->add(dense[k], delta);
  set_product(i, j, dense);
}

nlohmann::ordered_json AlgebraTable::dump() const {
  nlohmann::ordered_json j;
  j["dim"] = dim_;
  j["basis"] = labels_;
  j["unit"] = vecops::to_json(*K_, unit_);
  auto entries = nlohmann::ordered_json::array();
  for (size_t i = 0; i < dim_; ++i)
    for (size_t jj = 0; jj < dim_; ++jj)
      for (const SCEntry& e : row(i, jj))
        entries.push_back(nlohmann::ordered_json::array({i, jj, e.k, K_->to_string(e.c)}));
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace albert
