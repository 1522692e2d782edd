#include "albert/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace albert {

using jsonu::Json;

namespace {

Vec sample_invertible(const JordanAlgebra& J, SplitMix64& rng) {
  const Field& F = *J.field();
  for (;;) {
    Vec p = vecops::sample_nonzero(F, J.dim(), rng);
    if (!F.is_zero(J.generic_coeffs(p).N)) return p;
  }
}

bool tables_equal(const AlgebraTable& a, const AlgebraTable& b) {
  const Field& F = *a.field();
  if (a.dim() != b.dim()) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      for (size_t k = 0; k < a.dim(); ++k)
        if (!F.eq(a.coeff(i, j, k), b.coeff(i, j, k))) return false;
  return true;
}

void suite_jordan(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                  SuiteOutcome& out) {
  const Field& F = *alg.field;
  JordanSuiteResult r = jordan_identity_suite(*alg.jordan, spec.samples, seed);
  out.samples = r.samples;
  for (const auto& ce : r.counterexamples)
    out.failures.push_back(Json{{"x", vecops::to_json(F, ce.x)}, {"y", vecops::to_json(F, ce.y)}});
  if (r.failures > out.failures.size()) out.extra["failures_total"] = r.failures;
}

void suite_norm_oracle(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                       SuiteOutcome& out) {
  if (!alg.tits)
    fail(ErrorCode::ConstructionError, "norm-oracle suite needs a tits1 algebra");
  const Field& F = *alg.field;
  const JordanAlgebra& J = *alg.jordan;
  SplitMix64 rng(seed);
  for (size_t n = 0; n < spec.samples; ++n) {
    Vec v = vecops::sample(F, J.dim(), rng);
    Fe closed = alg.tits->closed_norm(v);
    Fe generic = J.generic_coeffs(v).N;
    ++out.samples;
    if (!F.eq(closed, generic) && out.failures.size() < 5)
      out.failures.push_back(Json{{"element", vecops::to_json(F, v)},
                                  {"closed", F.to_string(closed)},
                                  {"generic", F.to_string(generic)}});
  }
}

void suite_similarity(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                      SuiteOutcome& out) {
  const Field& F = *alg.field;
  const JordanAlgebra& J = *alg.jordan;
  StructureOps ops(J, alg.norm);
  SplitMix64 rng(seed);
  for (size_t n = 0; n < spec.samples; ++n) {
    Vec p = sample_invertible(J, rng);
    Fe np = J.generic_coeffs(p).N;
    SimilarityVerdict v = ops.similarity_check(J.u_operator(p));
    ++out.samples;
    bool ok = v.is_similarity && F.eq(*v.multiplier, F.mul(np, np));
    if (!ok && out.failures.size() < 5)
      out.failures.push_back(Json{
          {"p", vecops::to_json(F, p)},
          {"expected_multiplier", F.to_string(F.mul(np, np))},
          {"verdict", v.is_similarity ? "similarity" : v.reason},
          {"multiplier", v.multiplier ? F.to_string(*v.multiplier) : ""}});
  }
}

void suite_isotopy(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                   SuiteOutcome& out) {
  const Field& F = *alg.field;
  const JordanAlgebra& J = *alg.jordan;
  StructureOps ops(J, alg.norm);
  SplitMix64 rng(seed);
  for (size_t n = 0; n < spec.samples; ++n) {
    Vec p = sample_invertible(J, rng);
    Matrix g = J.u_operator(p);
    std::optional<Vec> q = ops.isotopy_decompose(g);
    ++out.samples;
    bool ok = q.has_value() && vecops::eq(F, *q, J.inverse(J.square(p)));
    if (!ok && out.failures.size() < 5)
      out.failures.push_back(Json{
          {"p", vecops::to_json(F, p)},
          {"issue", q ? "decomposition disagrees with (p^2)^-1" : "no isotopy found"}});
  }
}

void suite_isotope(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                   SuiteOutcome& out) {
  const Field& F = *alg.field;
  const JordanAlgebra& J = *alg.jordan;
  SplitMix64 rng(seed);

  // p = 1 must reproduce the algebra on the nose
  if (!tables_equal(J.isotope(J.unit()).table(), J.table()))
    out.failures.push_back(Json{{"p", vecops::to_json(F, J.unit())},
                                {"issue", "unit isotope differs from the original table"}});

  for (size_t n = 0; n < spec.samples; ++n) {
    Vec p = sample_invertible(J, rng);
    JordanAlgebra Jp = J.isotope(p);
    ++out.samples;
    std::string issue;
    if (!vecops::eq(F, Jp.unit(), J.inverse(p)))
      issue = "isotope unit is not p^-1";
    else {
      JordanSuiteResult r = jordan_identity_suite(Jp, 10, rng.next());
      if (r.failures != 0) issue = "isotope fails the Jordan identity";
    }
    if (!issue.empty() && out.failures.size() < 5)
      out.failures.push_back(Json{{"p", vecops::to_json(F, p)}, {"issue", issue}});
  }
}

void suite_composition(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                       SuiteOutcome& out) {
  if (!alg.h3)
    fail(ErrorCode::ConstructionError, "composition suite needs an h3 algebra");
  const Field& F = *alg.field;
  const CompositionAlgebra& C = alg.h3->coordinates();
  SplitMix64 rng(seed);
  for (size_t n = 0; n < spec.samples; ++n) {
    Vec x = vecops::sample(F, C.dim(), rng);
    Vec y = vecops::sample(F, C.dim(), rng);
    ++out.samples;
    std::string law;
    Vec xy = C.product(x, y);
    if (!F.eq(C.norm(xy), F.mul(C.norm(x), C.norm(y))))
      law = "composition N(xy)=N(x)N(y)";
    else if (!vecops::eq(F, C.conjugate(xy), C.product(C.conjugate(y), C.conjugate(x))))
      law = "conjugation anti-automorphism";
    else if (!vecops::eq(F, C.product(x, xy), C.product(C.product(x, x), y)))
      law = "left alternative law";
    else if (!F.eq(C.trace(xy), C.trace(C.product(y, x))))
      law = "trace symmetry";
    if (!law.empty() && out.failures.size() < 5)
      out.failures.push_back(Json{{"x", vecops::to_json(F, x)},
                                  {"y", vecops::to_json(F, y)},
                                  {"law", law}});
  }
}

void suite_degree3(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                   SuiteOutcome& out) {
  if (!alg.tits)
    fail(ErrorCode::ConstructionError, "degree3 suite needs a tits1 algebra");
  const Field& F = *alg.field;
  const DegreeThreeAlgebra& D = alg.tits->coordinates();
  SplitMix64 rng(seed);
  for (size_t n = 0; n < spec.samples; ++n) {
    Vec u = vecops::sample(F, 9, rng);
    Vec v = vecops::sample(F, 9, rng);
    ++out.samples;
    std::string law;
    Vec uv = D.product(u, v);
    if (!F.eq(D.reduced_norm(uv), F.mul(D.reduced_norm(u), D.reduced_norm(v))))
      law = "norm multiplicativity";
    else if (!F.eq(D.reduced_trace(uv), D.reduced_trace(D.product(v, u))))
      law = "trace symmetry";
    else {
      // Cayley-Hamilton: u^3 - T u^2 + S u - N = 0
      Vec u2 = D.product(u, u);
      Vec lhs = D.product(u2, u);
      lhs = vecops::sub(F, lhs, vecops::scale(F, D.reduced_trace(u), u2));
      lhs = vecops::add(F, lhs, vecops::scale(F, D.reduced_quad(u), u));
      lhs = vecops::sub(F, lhs, vecops::scale(F, D.reduced_norm(u), D.unit()));
      if (!vecops::is_zero(F, lhs)) law = "Cayley-Hamilton";
      else {
        // cross is the linearization of the adjoint
        Vec want = D.adjoint(vecops::add(F, u, v));
        want = vecops::sub(F, want, D.adjoint(u));
        want = vecops::sub(F, want, D.adjoint(v));
        if (!vecops::eq(F, D.cross(u, v), want)) law = "cross vs adjoint linearization";
      }
    }
    if (!law.empty() && out.failures.size() < 5)
      out.failures.push_back(Json{{"u", vecops::to_json(F, u)},
                                  {"v", vecops::to_json(F, v)},
                                  {"law", law}});
  }
}

void suite_division_probe(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t seed,
                          SuiteOutcome& out) {
  const Field& F = *alg.field;
  DivisionProbeReport rep = division_probe(*alg.jordan, alg.norm, spec.samples,
                                           spec.subalgebra_samples.value_or(25), seed);
  out.samples = rep.trials;
  Json ws = Json::array();
  for (const Vec& w : rep.witnesses) ws.push_back(vecops::to_json(F, w));
  Json subs = Json::array();
  for (const auto& s : rep.subalgebras) {
    Json e;
    e["dimension"] = s.dimension;
    e["is_field"] = s.is_field ? Json(*s.is_field) : Json(nullptr);
    subs.push_back(std::move(e));
  }
  out.extra["basis_checked"] = rep.basis_checked;
  out.extra["witnesses"] = std::move(ws);
  out.extra["subalgebras"] = std::move(subs);
  out.extra["conclusion"] =
      rep.witnesses.empty()
          ? "no norm-zero element found; consistent with division (not a proof)"
          : "norm-zero witness found: not a division algebra";
}

void suite_operators(const BuiltAlgebra& alg, const SuiteSpec& spec, uint64_t,
                     SuiteOutcome& out) {
  const Field& F = *alg.field;
  const JordanAlgebra& J = *alg.jordan;
  const size_t d = J.dim();
  std::ifstream in(*spec.path);
  if (!in) fail(ErrorCode::ConstructionError, "cannot open operator file " + *spec.path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) jsonu::bad(*spec.path, "operator file is not valid JSON");
  jsonu::check_keys(j, *spec.path, {"operators"});
  const Json& list = jsonu::member(j, *spec.path, "operators");
  if (!list.is_array()) jsonu::bad(*spec.path + "/operators", "expected an array");

  StructureOps ops(J, alg.norm);
  for (size_t n = 0; n < list.size(); ++n) {
    std::string path = *spec.path + "/operators/" + std::to_string(n);
    const Json& e = list[n];
    jsonu::check_keys(e, path, {"name", "matrix", "expect"});
    std::string name = jsonu::get_string(jsonu::member(e, path, "name"), path + "/name");
    const Json& mj = jsonu::member(e, path, "matrix");
    if (!mj.is_array() || mj.size() != d)
      jsonu::bad(path + "/matrix", "expected " + std::to_string(d) + " rows");
    Matrix g(alg.field, d, d);
    for (size_t r = 0; r < d; ++r) {
      auto row = jsonu::get_string_array(mj[r], path + "/matrix/" + std::to_string(r));
      if (row.size() != d)
        jsonu::bad(path + "/matrix/" + std::to_string(r),
                   "expected " + std::to_string(d) + " entries");
      for (size_t c = 0; c < d; ++c) g.at(r, c) = F.parse(row[c]);
    }
    const Json& expect = jsonu::member(e, path, "expect");
    jsonu::check_keys(expect, path + "/expect",
                      {"similarity", "multiplier", "automorphism", "isotopy"});
    ++out.samples;

    auto record = [&](const char* predicate, const std::string& want, const std::string& got) {
      if (out.failures.size() < 8)
        out.failures.push_back(Json{{"name", name},
                                    {"predicate", predicate},
                                    {"expected", want},
                                    {"got", got}});
    };
    if (const Json* v = jsonu::member_opt(expect, path + "/expect", "similarity")) {
      SimilarityVerdict sv = ops.similarity_check(g);
      bool want = v->get<bool>();
      if (sv.is_similarity != want)
        record("similarity", want ? "positive" : "negative",
               sv.is_similarity ? "positive" : sv.reason);
      else if (sv.is_similarity) {
        if (const Json* m = jsonu::member_opt(expect, path + "/expect", "multiplier")) {
          Fe want_nu = F.parse(m->get<std::string>());
          if (!F.eq(*sv.multiplier, want_nu))
            record("multiplier", F.to_string(want_nu), F.to_string(*sv.multiplier));
        }
      }
    }
    if (const Json* v = jsonu::member_opt(expect, path + "/expect", "automorphism")) {
      bool got = ops.automorphism_check(g);
      if (got != v->get<bool>())
        record("automorphism", v->get<bool>() ? "true" : "false", got ? "true" : "false");
    }
    if (const Json* v = jsonu::member_opt(expect, path + "/expect", "isotopy")) {
      bool got = ops.isotopy_decompose(g).has_value();
      if (got != v->get<bool>())
        record("isotopy", v->get<bool>() ? "true" : "false", got ? "true" : "false");
    }
  }
}

SuiteOutcome run_one(const RunConfig& cfg, const BuiltAlgebra& alg, size_t index) {
  const SuiteSpec& spec = cfg.suites[index];
  uint64_t seed = derive_seed(cfg.seed, spec.name, index);
  SuiteOutcome out;
  out.name = spec.name;
  auto t0 = std::chrono::steady_clock::now();
  if (spec.name == "jordan") suite_jordan(alg, spec, seed, out);
  else if (spec.name == "norm-oracle") suite_norm_oracle(alg, spec, seed, out);
  else if (spec.name == "similarity") suite_similarity(alg, spec, seed, out);
  else if (spec.name == "isotopy") suite_isotopy(alg, spec, seed, out);
  else if (spec.name == "isotope") suite_isotope(alg, spec, seed, out);
  else if (spec.name == "composition") suite_composition(alg, spec, seed, out);
  else if (spec.name == "degree3") suite_degree3(alg, spec, seed, out);
  else if (spec.name == "division-probe") suite_division_probe(alg, spec, seed, out);
  else suite_operators(alg, spec, seed, out);
  auto t1 = std::chrono::steady_clock::now();
  out.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

size_t thread_budget(size_t suites) {
  size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("ALBERTCTL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) n = static_cast<size_t>(v);
  }
  return std::min(n, suites);
}

}  // namespace

std::string config_fingerprint(const Json& canonical) {
  uint64_t h = fnv1a64(canonical.dump());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json outcome_json(const SuiteOutcome& o, const std::string& fingerprint) {
  Json j;
  j["suite"] = o.name;
  j["samples"] = o.samples;
  j["failures"] = o.failures;
  for (auto it = o.extra.begin(); it != o.extra.end(); ++it) j[it.key()] = it.value();
  j["wall_ms"] = o.wall_ms;
  j["config_fingerprint"] = fingerprint;
  return j;
}

RunResult run_suites(const RunConfig& cfg, const BuiltAlgebra& alg) {
  RunResult res;
  const size_t n = cfg.suites.size();
  res.outcomes.resize(n);
  if (n == 0) return res;

  const size_t workers = thread_budget(n);
  std::vector<std::exception_ptr> errors(n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) res.outcomes[i] = run_one(cfg, alg, i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= n) return;
          try {
            res.outcomes[i] = run_one(cfg, alg, i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < n; ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);
  }
  for (const auto& o : res.outcomes)
    if (!o.failures.empty()) res.any_failure = true;
  return res;
}

Json probe_report(const BuiltAlgebra& alg, size_t trials, size_t subalgebra_samples,
                  uint64_t seed) {
  const Field& F = *alg.field;
  DivisionProbeReport rep =
      division_probe(*alg.jordan, alg.norm, trials, subalgebra_samples, seed);
  Json j;
  j["kind"] = alg.kind;
  j["dim"] = alg.jordan->dim();
  j["basis_checked"] = rep.basis_checked;
  j["trials"] = rep.trials;
  Json ws = Json::array();
  for (const Vec& w : rep.witnesses) ws.push_back(vecops::to_json(F, w));
  j["witnesses"] = std::move(ws);
  Json subs = Json::array();
  for (const auto& s : rep.subalgebras) {
    Json e;
    e["element"] = vecops::to_json(F, s.element);
    e["dimension"] = s.dimension;
    e["is_field"] = s.is_field ? Json(*s.is_field) : Json(nullptr);
    subs.push_back(std::move(e));
  }
  j["subalgebras"] = std::move(subs);
  j["conclusion"] = rep.witnesses.empty()
                        ? "no norm-zero element found; consistent with division (not a proof)"
                        : "norm-zero witness found: not a division algebra";
  return j;
}

}  // namespace albert
