#include "albert/config.hpp"

#include <set>

namespace albert {

using jsonu::Json;

namespace {

const std::set<std::string, std::less<>> kSuiteNames = {
    "jordan",   "norm-oracle", "similarity",     "isotopy",  "isotope",
    "composition", "degree3",  "division-probe", "operators"};

SuiteSpec parse_suite(const Json& j, const std::string& path) {
  std::string name = jsonu::get_string(jsonu::member(j, path, "name"), path + "/name");
  if (kSuiteNames.find(name) == kSuiteNames.end())
    jsonu::bad(path + "/name", "unknown suite \"" + name + "\"");

  SuiteSpec s;
  s.name = name;
  if (name == "operators") {
    jsonu::check_keys(j, path, {"name", "samples", "path"});
    s.path = jsonu::get_string(jsonu::member(j, path, "path"), path + "/path");
    if (const Json* v = jsonu::member_opt(j, path, "samples"))
      s.samples = jsonu::get_uint(*v, path + "/samples");
  } else if (name == "division-probe") {
    jsonu::check_keys(j, path, {"name", "samples", "subalgebra-samples"});
    s.samples = jsonu::get_uint(jsonu::member(j, path, "samples"), path + "/samples");
    if (const Json* v = jsonu::member_opt(j, path, "subalgebra-samples"))
      s.subalgebra_samples = jsonu::get_uint(*v, path + "/subalgebra-samples");
  } else {
    jsonu::check_keys(j, path, {"name", "samples"});
    s.samples = jsonu::get_uint(jsonu::member(j, path, "samples"), path + "/samples");
  }
  return s;
}

// validates the algebra subobject's shape; construction happens in
// build_algebra once the field exists
void validate_algebra(const Json& j, const std::string& path) {
  std::string kind = jsonu::get_string(jsonu::member(j, path, "kind"), path + "/kind");
  if (kind == "tits1") {
    jsonu::check_keys(j, path, {"kind", "D", "mu"});
    const Json& d = jsonu::member(j, path, "D");
    std::string dkind = jsonu::get_string(jsonu::member(d, path + "/D", "kind"), path + "/D/kind");
    if (dkind == "matrix3") {
      jsonu::check_keys(d, path + "/D", {"kind"});
    } else if (dkind == "cyclic") {
      jsonu::check_keys(d, path + "/D", {"kind", "modulus", "sigma", "b"});
      jsonu::get_string_array(jsonu::member(d, path + "/D", "modulus"), path + "/D/modulus");
      jsonu::get_string_array(jsonu::member(d, path + "/D", "sigma"), path + "/D/sigma");
      jsonu::get_string(jsonu::member(d, path + "/D", "b"), path + "/D/b");
    } else {
      jsonu::bad(path + "/D/kind", "expected \"matrix3\" or \"cyclic\"");
    }
    jsonu::get_string(jsonu::member(j, path, "mu"), path + "/mu");
  } else if (kind == "h3") {
    jsonu::check_keys(j, path, {"kind", "C", "gamma"});
    const Json& c = jsonu::member(j, path, "C");
    std::string ckind = jsonu::get_string(jsonu::member(c, path + "/C", "kind"), path + "/C/kind");
    if (ckind == "zorn") {
      jsonu::check_keys(c, path + "/C", {"kind"});
    } else if (ckind == "cayley-dickson") {
      jsonu::check_keys(c, path + "/C", {"kind", "lambdas"});
      auto ls = jsonu::get_string_array(jsonu::member(c, path + "/C", "lambdas"), path + "/C/lambdas");
      if (ls.size() != 3)
        jsonu::bad(path + "/C/lambdas", "h3 needs an 8-dimensional composition algebra: exactly 3 doubling parameters");
    } else {
      jsonu::bad(path + "/C/kind", "expected \"zorn\" or \"cayley-dickson\"");
    }
    auto gs = jsonu::get_string_array(jsonu::member(j, path, "gamma"), path + "/gamma");
    if (gs.size() != 3) jsonu::bad(path + "/gamma", "expected exactly 3 entries");
  } else if (kind == "plus-of-matrix3") {
    jsonu::check_keys(j, path, {"kind"});
  } else {
    jsonu::bad(path + "/kind", "expected \"tits1\", \"h3\", or \"plus-of-matrix3\"");
  }
}

Poly parse_poly(const Field& F, const std::vector<std::string>& strs) {
  Poly p;
  p.reserve(strs.size());
  for (const auto& s : strs) p.push_back(F.parse(s));
  return p;
}

}  // namespace

RunConfig parse_config(const Json& j) {
  jsonu::check_keys(j, "/", {"field", "algebra", "suites", "seed", "out", "corrupt"});

  RunConfig cfg;
  cfg.canonical = j;
  cfg.field = field_from_json(jsonu::member(j, "/", "field"), "/field");
  cfg.algebra = jsonu::member(j, "/", "algebra");
  validate_algebra(cfg.algebra, "/algebra");

  const Json& suites = jsonu::member(j, "/", "suites");
  if (!suites.is_array()) jsonu::bad("/suites", "expected an array");
  for (size_t i = 0; i < suites.size(); ++i)
    cfg.suites.push_back(parse_suite(suites[i], "/suites/" + std::to_string(i)));

  cfg.seed = jsonu::get_uint(jsonu::member(j, "/", "seed"), "/seed");
  if (const Json* v = jsonu::member_opt(j, "/", "out"))
    cfg.out = jsonu::get_string(*v, "/out");
  if (const Json* v = jsonu::member_opt(j, "/", "corrupt")) {
    jsonu::check_keys(*v, "/corrupt", {"i", "j", "k", "delta"});
    CorruptSpec c;
    c.i = jsonu::get_uint(jsonu::member(*v, "/corrupt", "i"), "/corrupt/i");
    c.j = jsonu::get_uint(jsonu::member(*v, "/corrupt", "j"), "/corrupt/j");
    c.k = jsonu::get_uint(jsonu::member(*v, "/corrupt", "k"), "/corrupt/k");
    c.delta = jsonu::get_string(jsonu::member(*v, "/corrupt", "delta"), "/corrupt/delta");
    cfg.corrupt = std::move(c);
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) jsonu::bad("/", "config is not valid JSON");
  return parse_config(j);
}

Json fixture_config(const std::string& name) {
  auto base = [](Json field, Json algebra) {
    Json j;
    j["field"] = std::move(field);
    j["algebra"] = std::move(algebra);
    j["suites"] = Json::array({Json{{"name", "jordan"}, {"samples", 1000}}});
    j["seed"] = 42;
    return j;
  };
  Json cyclic7 = Json{{"kind", "cyclic"},
                      {"modulus", {"-1", "-2", "1", "1"}},
                      {"sigma", {"-2", "0", "1"}},
                      {"b", "2"}};
  if (name == "split-f7")
    return base(Json{{"kind", "prime"}, {"p", 7}},
                Json{{"kind", "tits1"}, {"D", Json{{"kind", "matrix3"}}}, {"mu", "1"}});
  if (name == "split-q")
    return base(Json{{"kind", "rationals"}},
                Json{{"kind", "tits1"}, {"D", Json{{"kind", "matrix3"}}}, {"mu", "1"}});
  if (name == "h3-zorn")
    return base(Json{{"kind", "rationals"}},
                Json{{"kind", "h3"}, {"C", Json{{"kind", "zorn"}}}, {"gamma", {"1", "1", "1"}}});
  if (name == "cyclic7-q")
    return base(Json{{"kind", "rationals"}},
                Json{{"kind", "tits1"}, {"D", cyclic7}, {"mu", "2"}});
  if (name == "division-qs")
    return base(Json{{"kind", "function-field"}, {"base", Json{{"kind", "rationals"}}}, {"var", "s"}},
                Json{{"kind", "tits1"}, {"D", cyclic7}, {"mu", "s"}});
  jsonu::bad("/fixture", "unknown fixture \"" + name + "\"");
}

BuiltAlgebra build_algebra(const RunConfig& cfg) {
  const FieldPtr& K = cfg.field;
  const Field& F = *K;
  BuiltAlgebra out;
  out.field = K;
  out.kind = cfg.algebra.at("kind").get<std::string>();

  if (out.kind == "tits1") {
    const Json& d = cfg.algebra.at("D");
    std::string dkind = d.at("kind").get<std::string>();
    DegreeThreeAlgebra D =
        dkind == "matrix3"
            ? DegreeThreeAlgebra::matrix3(K)
            : DegreeThreeAlgebra::cyclic(
                  K, parse_poly(F, d.at("modulus").get<std::vector<std::string>>()),
                  parse_poly(F, d.at("sigma").get<std::vector<std::string>>()),
                  F.parse(d.at("b").get<std::string>()));
    Fe mu = F.parse(cfg.algebra.at("mu").get<std::string>());
    out.tits = std::make_shared<const TitsFirstAlbert>(std::move(D), std::move(mu));
    out.jordan = std::shared_ptr<const JordanAlgebra>(out.tits, &out.tits->jordan());
    auto tits = out.tits;
    out.norm = [tits](const Vec& v) { return tits->closed_norm(v); };
  } else if (out.kind == "h3") {
    const Json& c = cfg.algebra.at("C");
    CompositionAlgebra C = [&]() -> CompositionAlgebra {
      if (c.at("kind").get<std::string>() == "zorn")
        return CompositionAlgebra::zorn_split(K);
      CompositionAlgebra a = CompositionAlgebra::ground(K);
      for (const auto& s : c.at("lambdas").get<std::vector<std::string>>())
        a = CompositionAlgebra::cayley_dickson(a, F.parse(s));
      return a;
    }();
    std::array<Fe, 3> gamma;
    const auto gs = cfg.algebra.at("gamma").get<std::vector<std::string>>();
    for (size_t i = 0; i < 3; ++i) gamma[i] = F.parse(gs[i]);
    out.h3 = std::make_shared<const ReducedAlbert>(std::move(C), std::move(gamma));
    out.jordan = std::shared_ptr<const JordanAlgebra>(out.h3, &out.h3->jordan());
  } else {
    out.jordan = std::make_shared<const JordanAlgebra>(
        JordanAlgebra::plus_of(DegreeThreeAlgebra::matrix3(K).table()));
  }

  if (cfg.corrupt) {
    const CorruptSpec& c = *cfg.corrupt;
    const size_t d = out.jordan->dim();
    if (c.i >= d || c.j >= d || c.k >= d)
      fail(ErrorCode::ConstructionError, "corrupt indices exceed the algebra dimension");
    Fe delta = F.parse(c.delta);
    AlgebraTable t = out.jordan->table();
    // keep the table commutative so the mutation is caught by the Jordan
    // identity itself, not by the cheaper symmetry check
    t.perturb(c.i, c.j, c.k, delta);
    if (c.i != c.j) t.perturb(c.j, c.i, c.k, delta);
    out.jordan = std::make_shared<const JordanAlgebra>(JordanAlgebra::raw(std::move(t)));
  }

  if (!out.norm) {
    auto jp = out.jordan;
    out.norm = [jp](const Vec& v) { return jp->generic_coeffs(v).N; };
  }
  return out;
}

}  // namespace albert
