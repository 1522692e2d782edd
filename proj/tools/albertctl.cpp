#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "albert/exprs.hpp"
#include "albert/harness.hpp"

namespace {

using albert::jsonu::Json;

struct Common {
  std::string config;
  std::string fixture;
  std::string out;
  uint64_t seed = 0;
  bool seed_set = false;
  bool out_set = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "config file (JSON)");
  sub->add_option("--fixture", c.fixture,
                  "built-in fixture: split-f7, split-q, h3-zorn, cyclic7-q, division-qs");
  auto* s = sub->add_option("--seed", c.seed, "override the config seed");
  auto* o = sub->add_option("--out", c.out, "report/output path");
  sub->callback([&c, s, o] {
    c.seed_set = s->count() > 0;
    c.out_set = o->count() > 0;
  });
}

Json load_config(const Common& c) {
  Json j;
  if (!c.fixture.empty() && !c.config.empty())
    albert::fail(albert::ErrorCode::ParseError, "--config and --fixture are mutually exclusive");
  if (!c.fixture.empty()) {
    j = albert::fixture_config(c.fixture);
  } else if (!c.config.empty()) {
    std::ifstream in(c.config);
    if (!in)
      albert::fail(albert::ErrorCode::ParseError, "cannot open config file " + c.config);
    std::stringstream ss;
    ss << in.rdbuf();
    j = Json::parse(ss.str(), nullptr, false);
    if (j.is_discarded())
      albert::fail(albert::ErrorCode::ParseError, c.config + ": not valid JSON");
  } else {
    albert::fail(albert::ErrorCode::ParseError, "one of --config or --fixture is required");
  }
  if (c.seed_set) j["seed"] = c.seed;
  if (c.out_set) j["out"] = c.out;
  return j;
}

int do_build(const Common& c) {
  albert::RunConfig cfg = albert::parse_config(load_config(c));
  albert::BuiltAlgebra alg = albert::build_algebra(cfg);
  Json j;
  j["field"] = cfg.field->descriptor();
  j["algebra"] = cfg.algebra;
  j["table"] = alg.jordan->table().dump();
  std::string text = j.dump(2);
  if (cfg.out) {
    std::ofstream out(*cfg.out);
    if (!out)
      albert::fail(albert::ErrorCode::ParseError, "cannot open output file " + *cfg.out);
    out << text << '\n';
  } else {
    std::cout << text << '\n';
  }
  return 0;
}

int do_check(const Common& c) {
  albert::RunConfig cfg = albert::parse_config(load_config(c));
  albert::BuiltAlgebra alg = albert::build_algebra(cfg);
  std::string fp = albert::config_fingerprint(cfg.canonical);
  albert::RunResult res = albert::run_suites(cfg, alg);

  std::ofstream file;
  if (cfg.out) {
    file.open(*cfg.out, std::ios::app);  // reports are append-only JSONL
    if (!file)
      albert::fail(albert::ErrorCode::ParseError, "cannot open report file " + *cfg.out);
  }
  std::ostream& os = cfg.out ? static_cast<std::ostream&>(file) : std::cout;
  for (const auto& o : res.outcomes)
    os << albert::outcome_json(o, fp).dump() << '\n';
  return res.any_failure ? 1 : 0;
}

int do_eval(const Common& c, const std::string& expr) {
  albert::RunConfig cfg = albert::parse_config(load_config(c));
  albert::BuiltAlgebra alg = albert::build_algebra(cfg);
  std::cout << albert::eval_expression(alg, expr) << '\n';
  return 0;
}

int do_probe(const Common& c, uint64_t trials, uint64_t sub_samples) {
  albert::RunConfig cfg = albert::parse_config(load_config(c));
  albert::BuiltAlgebra alg = albert::build_algebra(cfg);
  Json rep = albert::probe_report(alg, trials, sub_samples, cfg.seed);
  std::string text = rep.dump(2);
  if (cfg.out) {
    std::ofstream out(*cfg.out);
    if (!out)
      albert::fail(albert::ErrorCode::ParseError, "cannot open output file " + *cfg.out);
    out << text << '\n';
  } else {
    std::cout << text << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exceptional Jordan algebra workbench"};
  app.require_subcommand(1);

  Common cb, cc, ce, cp;
  std::string expr;
  uint64_t trials = 1000;
  uint64_t sub_samples = 25;

  CLI::App* build = app.add_subcommand("build", "construct the algebra and dump its structure constants");
  add_common(build, cb);
  CLI::App* check = app.add_subcommand("check", "run the configured property suites");
  add_common(check, cc);
  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression in the configured algebra");
  add_common(eval, ce);
  eval->add_option("expression", expr, "expression to evaluate")->required();
  CLI::App* probe = app.add_subcommand("probe-division", "search for norm-zero elements");
  add_common(probe, cp);
  probe->add_option("--trials", trials, "random trial budget (default 1000)");
  probe->add_option("--subalgebra-samples", sub_samples,
                    "generated-subalgebra samples (default 25)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a config error
  }

  try {
    if (app.got_subcommand(build)) return do_build(cb);
    if (app.got_subcommand(check)) return do_check(cc);
    if (app.got_subcommand(eval)) return do_eval(ce, expr);
    return do_probe(cp, trials, sub_samples);
  } catch (const albert::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
