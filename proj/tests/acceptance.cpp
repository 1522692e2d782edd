// Acceptance harness: one line per criterion, PASS or FAIL, exit 0 only if
// every criterion passes. Library-level criteria run in process; the CLI
// contract (mutation sensitivity, determinism) shells out to albertctl.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "albert/config.hpp"
#include "albert/harness.hpp"
#include "albert/operators.hpp"
#include "albert/rng.hpp"

using namespace albert;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BuiltAlgebra fixture(const std::string& name) {
  return build_algebra(parse_config(fixture_config(name)));
}

Vec sample_invertible(const JordanAlgebra& J, SplitMix64& rng) {
  const Field& F = *J.field();
  for (;;) {
    Vec p = vecops::sample(F, J.dim(), rng);
    if (!F.is_zero(J.generic_coeffs(p).N)) return p;
  }
}

struct Cli {
  int exit_code;
  std::string output;
};

Cli run_cli(const std::string& args, const std::string& env = "") {
  std::string tmp = "/tmp/albert_acceptance_cli.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + ALBERTCTL_BIN + std::string(" ") + args +
                    " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string strip_wall(std::string s) {
  return std::regex_replace(s, std::regex("\"wall_ms\":[0-9.eE+-]+"), "\"wall_ms\":0");
}

// Each criterion returns nullopt on success or a failure reason.
using Criterion = std::function<std::optional<std::string>(std::string& note)>;

std::optional<std::string> criterion_jordan(std::string& note) {
  struct Case {
    const char* name;
    double budget;
  };
  const Case cases[] = {
      {"split-f7", 60.0}, {"split-q", 60.0},     {"cyclic7-q", 60.0},
      {"h3-zorn", 60.0},  {"division-qs", 600.0},
  };
  std::ostringstream times;
  for (const Case& c : cases) {
    BuiltAlgebra alg = fixture(c.name);
    auto t0 = std::chrono::steady_clock::now();
    JordanSuiteResult r = jordan_identity_suite(*alg.jordan, 1000, 42);
    double dt = seconds_since(t0);
    times << c.name << " " << int(dt * 1000) << "ms ";
    if (r.failures != 0)
      return std::string(c.name) + ": " + std::to_string(r.failures) + " nonzero residuals";
    if (dt > c.budget)
      return std::string(c.name) + ": took " + std::to_string(dt) + "s, budget " +
             std::to_string(c.budget) + "s";
  }
  note = times.str();
  return std::nullopt;
}

std::optional<std::string> criterion_norm_oracle(std::string&) {
  for (const char* name : {"split-f7", "split-q", "cyclic7-q", "division-qs"}) {
    BuiltAlgebra alg = fixture(name);
    const Field& F = *alg.field;
    SplitMix64 rng(derive_seed(42, "acceptance-norm", 0));
    size_t samples = std::string(name) == "division-qs" ? 100 : 250;
    for (size_t i = 0; i < samples; ++i) {
      Vec v = vecops::sample(F, 27, rng);
      if (!F.eq(alg.tits->closed_norm(v), alg.jordan->generic_coeffs(v).N))
        return std::string(name) + ": closed norm disagrees with the generic norm";
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion_structure_group(std::string&) {
  // Homotheties: nu = lambda^3, over Q with nontrivial scalars.
  {
    BuiltAlgebra alg = fixture("split-q");
    StructureOps ops(*alg.jordan, alg.norm);
    const Field& F = *alg.field;
    for (const char* lit : {"2", "-1", "5/3", "-7/11"}) {
      Fe lam = F.parse(lit);
      auto v = ops.similarity_check(ops.homothety(lam));
      if (!v.is_similarity || !F.eq(*v.multiplier, F.mul(lam, F.mul(lam, lam))))
        return std::string("homothety ") + lit + " has the wrong multiplier";
    }
  }
  // U_p multipliers: 100 over F_7, 8 more over Q.
  {
    BuiltAlgebra alg = fixture("split-f7");
    StructureOps ops(*alg.jordan, alg.norm);
    const Field& F = *alg.field;
    SplitMix64 rng(derive_seed(42, "acceptance-up", 0));
    for (int i = 0; i < 100; ++i) {
      Vec p = sample_invertible(*alg.jordan, rng);
      Fe np = alg.jordan->generic_coeffs(p).N;
      auto v = ops.similarity_check(alg.jordan->u_operator(p));
      if (!v.is_similarity || !F.eq(*v.multiplier, F.mul(np, np)))
        return "U_p multiplier mismatch over F_7 at sample " + std::to_string(i);
    }
    // Multiplicativity on 50 composed pairs.
    for (int i = 0; i < 50; ++i) {
      Vec p = sample_invertible(*alg.jordan, rng);
      Vec q = sample_invertible(*alg.jordan, rng);
      Matrix g = alg.jordan->u_operator(p), h = alg.jordan->u_operator(q);
      auto vg = ops.similarity_check(g), vh = ops.similarity_check(h);
      auto vgh = ops.similarity_check(StructureOps::compose(g, h));
      if (!vgh.is_similarity || !F.eq(*vgh.multiplier, F.mul(*vg.multiplier, *vh.multiplier)))
        return "multiplier not multiplicative at pair " + std::to_string(i);
    }
  }
  {
    BuiltAlgebra alg = fixture("split-q");
    StructureOps ops(*alg.jordan, alg.norm);
    const Field& F = *alg.field;
    SplitMix64 rng(derive_seed(42, "acceptance-up-q", 0));
    for (int i = 0; i < 8; ++i) {
      Vec p = sample_invertible(*alg.jordan, rng);
      Fe np = alg.jordan->generic_coeffs(p).N;
      auto v = ops.similarity_check(alg.jordan->u_operator(p));
      if (!v.is_similarity || !F.eq(*v.multiplier, F.mul(np, np)))
        return "U_p multiplier mismatch over Q at sample " + std::to_string(i);
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion_isotopy_similarity(std::string&) {
  BuiltAlgebra alg = fixture("split-f7");
  const JordanAlgebra& J = *alg.jordan;
  StructureOps ops(J, alg.norm);
  const Field& F = *alg.field;
  SplitMix64 rng(derive_seed(42, "acceptance-isotopy", 0));

  // Similarities -> isotopies with p = g(1)^{-1}.
  for (int i = 0; i < 50; ++i) {
    Vec p = sample_invertible(J, rng);
    Vec q = sample_invertible(J, rng);
    Matrix g = StructureOps::compose(J.u_operator(p), J.u_operator(q));
    if (!ops.similarity_check(g).is_similarity)
      return "composed U_p U_q is not a similarity at sample " + std::to_string(i);
    auto iso = ops.isotopy_decompose(g);
    if (!iso) return "similarity failed isotopy_decompose at sample " + std::to_string(i);
    Vec g1 = g.apply(J.unit());
    if (!vecops::eq(F, *iso, J.inverse(g1)))
      return "recovered p is not g(1)^{-1} at sample " + std::to_string(i);
  }

  // Constructed isotopies (scaled U_q) -> similarities.
  for (int i = 0; i < 50; ++i) {
    Vec q = sample_invertible(J, rng);
    Fe lam = F.sample(rng);
    if (F.is_zero(lam)) lam = F.one();
    Matrix g = StructureOps::compose(ops.homothety(lam), J.u_operator(q));
    auto iso = ops.isotopy_decompose(g);
    if (!iso) return "constructed isotopy rejected at sample " + std::to_string(i);
    if (!ops.similarity_check(g).is_similarity)
      return "constructed isotopy fails similarity_check at sample " + std::to_string(i);
  }
  return std::nullopt;
}

std::optional<std::string> criterion_isotopes(std::string&) {
  BuiltAlgebra alg = fixture("split-f7");
  const JordanAlgebra& J = *alg.jordan;
  const Field& F = *alg.field;

  // A^(1) = A as tables.
  JordanAlgebra same = J.isotope(J.unit());
  for (size_t a = 0; a < 27; ++a)
    for (size_t b = a; b < 27; ++b)
      for (size_t c = 0; c < 27; ++c)
        if (!F.eq(same.table().coeff(a, b, c), J.table().coeff(a, b, c)))
          return "unit isotope differs from the algebra";

  SplitMix64 rng(derive_seed(42, "acceptance-isotope", 0));
  for (int i = 0; i < 50; ++i) {
    Vec p = sample_invertible(J, rng);
    JordanAlgebra jp = J.isotope(p);
    if (!vecops::eq(F, jp.unit(), J.inverse(p)))
      return "isotope unit is not p^{-1} at sample " + std::to_string(i);
    JordanSuiteResult r = jordan_identity_suite(jp, 100, rng.next());
    if (r.failures != 0)
      return "isotope fails the Jordan suite at sample " + std::to_string(i);
  }
  return std::nullopt;
}

std::optional<std::string> criterion_non_division(std::string&) {
  {
    BuiltAlgebra alg = fixture("split-q");
    DivisionProbeReport r = division_probe(*alg.jordan, alg.norm, 1000, 0, 42);
    if (r.witnesses.empty()) return "no witness found in J(M3(Q),1)";
    if (!vecops::eq(*alg.field, r.witnesses.front(), vecops::basis(*alg.field, 27, 0)))
      return "witness in J(M3(Q),1) is not the deterministic (E11,0,0)";
  }
  {
    BuiltAlgebra alg = fixture("h3-zorn");
    DivisionProbeReport r = division_probe(*alg.jordan, alg.norm, 1000, 0, 42);
    if (r.witnesses.empty()) return "no witness found in H3(Zorn,(1,1,1)) within 10^3 trials";
    for (const Vec& w : r.witnesses) {
      if (vecops::is_zero(*alg.field, w)) return "H3 witness is the zero vector";
      if (!alg.field->is_zero(alg.norm(w))) return "H3 witness has nonzero norm";
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion_division_flagship(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  BuiltAlgebra alg = fixture("division-qs");
  DivisionProbeReport r = division_probe(*alg.jordan, alg.norm, 1000, 10, 42);
  double dt = seconds_since(t0);
  note = "probe " + std::to_string(int(dt)) + "s, " + std::to_string(r.subalgebras.size()) +
         " subalgebras";
  if (!r.witnesses.empty()) return "found a norm-zero element in the division flagship";
  if (r.trials != 1000) return "random trial budget not exhausted";
  if (r.subalgebras.size() != 10) return "expected 10 sampled subalgebras";
  for (const auto& s : r.subalgebras) {
    if (s.dimension != 3) return "sampled subalgebra is not cubic";
    if (!s.is_field.has_value()) return "irreducibility undecided for a sampled subalgebra";
    if (!*s.is_field) return "sampled subalgebra is not a field";
  }
  if (dt > 900.0) return "flagship probe exceeded the 15 minute budget";
  return std::nullopt;
}

std::optional<std::string> criterion_composition_degree3(std::string&) {
  FieldPtr q = make_rationals();
  // Octonions two ways: Zorn and Cayley-Dickson (-1,-1,-1).
  CompositionAlgebra zorn = CompositionAlgebra::zorn_split(q);
  CompositionAlgebra cd = [&] {
    CompositionAlgebra c = CompositionAlgebra::ground(q);
    for (int i = 0; i < 3; ++i) c = CompositionAlgebra::cayley_dickson(c, q->from_int(-1));
    return c;
  }();
  for (const CompositionAlgebra* c : {&zorn, &cd}) {
    const Field& F = *c->field();
    SplitMix64 rng(derive_seed(42, "acceptance-comp", 0));
    for (int i = 0; i < 1000; ++i) {
      Vec x = vecops::sample(F, 8, rng);
      Vec y = vecops::sample(F, 8, rng);
      if (!F.eq(c->norm(c->product(x, y)), F.mul(c->norm(x), c->norm(y))))
        return "composition law fails at pair " + std::to_string(i);
    }
  }

  // Degree-3: Nrd multiplicativity and Cayley-Hamilton, 10^3 samples each.
  FieldPtr f7 = make_prime(7);
  DegreeThreeAlgebra m3 = DegreeThreeAlgebra::matrix3(f7);
  Poly mod = {q->from_int(-1), q->from_int(-2), q->from_int(1), q->from_int(1)};
  Poly sig = {q->from_int(-2), q->from_int(0), q->from_int(1)};
  DegreeThreeAlgebra cyc = DegreeThreeAlgebra::cyclic(q, mod, sig, q->from_int(2));
  for (const DegreeThreeAlgebra* d : {&m3, &cyc}) {
    const Field& F = *d->field();
    SplitMix64 rng(derive_seed(42, "acceptance-deg3", 0));
    for (int i = 0; i < 1000; ++i) {
      Vec u = vecops::sample(F, 9, rng);
      Vec v = vecops::sample(F, 9, rng);
      if (!F.eq(d->reduced_norm(d->product(u, v)), F.mul(d->reduced_norm(u), d->reduced_norm(v))))
        return "Nrd not multiplicative at sample " + std::to_string(i);
      Vec u2 = d->product(u, u);
      Vec lhs = vecops::sub(F, d->product(u2, u), vecops::scale(F, d->reduced_trace(u), u2));
      lhs = vecops::add(F, lhs, vecops::scale(F, d->reduced_quad(u), u));
      lhs = vecops::sub(F, lhs, vecops::scale(F, d->reduced_norm(u), d->table().unit()));
      if (!vecops::is_zero(F, lhs)) return "Cayley-Hamilton fails at sample " + std::to_string(i);
    }
  }

  // Splitting embedding of the cyclic algebra: homomorphism on all 81 pairs.
  const Field& L = *cyc.splitting_field();
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j) {
      Vec ei = vecops::basis(*q, 9, i), ej = vecops::basis(*q, 9, j);
      auto mi = cyc.image(ei), mj = cyc.image(ej), mij = cyc.image(cyc.product(ei, ej));
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          Fe acc = L.zero();
          for (int t = 0; t < 3; ++t) L.add_mul(acc, mi[size_t(3 * r + t)], mj[size_t(3 * t + s)]);
          if (!L.eq(acc, mij[size_t(3 * r + s)]))
            return "splitting embedding breaks on basis pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
        }
    }
  return std::nullopt;
}

std::optional<std::string> criterion_mutation(std::string&) {
  Cli r = run_cli("check --config " + std::string(FIXTURE_DIR) + "/corrupted.json");
  if (r.exit_code != 1) return "exit code " + std::to_string(r.exit_code) + ", wanted 1";
  if (r.output.find("\"suite\":\"jordan\"") == std::string::npos)
    return "missing jordan suite line";
  if (r.output.find("\"failures\":[{\"x\":[") == std::string::npos)
    return "no serialized counterexample in the report";
  return std::nullopt;
}

std::optional<std::string> criterion_determinism(std::string&) {
  std::string args = "check --fixture cyclic7-q";
  Cli a = run_cli(args);
  Cli b = run_cli(args, "ALBERTCTL_THREADS=3");
  if (a.exit_code != 0 || b.exit_code != 0) return "clean fixture did not exit 0";
  if (strip_wall(a.output) != strip_wall(b.output))
    return "reports differ between runs (modulo wall_ms)";
  // Failure sets must also reproduce byte-for-byte, including witnesses.
  std::string corrupted = "check --config " + std::string(FIXTURE_DIR) + "/corrupted.json";
  Cli c = run_cli(corrupted);
  Cli d = run_cli(corrupted, "ALBERTCTL_THREADS=2");
  if (strip_wall(c.output) != strip_wall(d.output))
    return "corrupted-run failure sets differ between runs";
  return std::nullopt;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* label;
    Criterion fn;
  };
  const std::vector<Entry> criteria = {
      {1, "jordan identity on the five reference algebras", criterion_jordan},
      {2, "closed Tits norm matches the generic-coefficient norm", criterion_norm_oracle},
      {3, "structure group multipliers (homothety, U_p, composition)", criterion_structure_group},
      {4, "similarity and isotopy decompositions agree both ways", criterion_isotopy_similarity},
      {5, "isotope units, unit isotope, isotope Jordan identity", criterion_isotopes},
      {6, "split and reduced algebras expose norm-zero witnesses", criterion_non_division},
      {7, "division flagship over Q(s): no witness, cubic subfields", criterion_division_flagship},
      {8, "composition law, Nrd, Cayley-Hamilton, splitting embedding", criterion_composition_degree3},
      {9, "mutated fixture fails with a counterexample and exit 1", criterion_mutation},
      {10, "byte-identical reports for fixed config and seed", criterion_determinism},
  };

  int failures = 0;
  for (const Entry& e : criteria) {
    std::string note;
    std::optional<std::string> err;
    try {
      err = e.fn(note);
    } catch (const std::exception& ex) {
      err = std::string("exception: ") + ex.what();
    }
    if (err) {
      ++failures;
      std::cout << "FAIL criterion " << e.number << ": " << e.label << " -- " << *err << "\n";
    } else {
      std::cout << "PASS criterion " << e.number << ": " << e.label
                << (note.empty() ? "" : " [" + note + "]") << "\n";
    }
    std::cout.flush();
  }
  if (failures == 0) {
    std::cout << "all 10 acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " of 10 acceptance criteria failed\n";
  return 1;
}
