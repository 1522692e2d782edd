#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "albert/albert_algebras.hpp"
#include "albert/jsonutil.hpp"

namespace albert {

struct SuiteSpec {
  std::string name;
  size_t samples = 0;
  std::optional<std::string> path;              // operators suite only
  std::optional<size_t> subalgebra_samples;     // division-probe only
};

// Deliberate single-entry table corruption, applied after construction so the
// validated table can be regression-tested against mutations.
struct CorruptSpec {
  size_t i = 0, j = 0, k = 0;
  std::string delta;
};

struct RunConfig {
  jsonu::Json canonical;  // the validated config document, fingerprint input
  FieldPtr field;
  jsonu::Json algebra;    // validated algebra subobject
  std::vector<SuiteSpec> suites;
  uint64_t seed = 0;
  std::optional<std::string> out;
  std::optional<CorruptSpec> corrupt;
};

RunConfig parse_config(const jsonu::Json& j);
RunConfig parse_config_text(const std::string& text);

// Built-in fixture configs: split-f7, split-q, h3-zorn, cyclic7-q,
// division-qs. Throws a parse error for unknown names.
jsonu::Json fixture_config(const std::string& name);

// A constructed algebra together with its distinguished cubic norm. For
// tits1 the norm is the closed form; otherwise the generic norm coefficient.
struct BuiltAlgebra {
  std::string kind;
  FieldPtr field;
  std::shared_ptr<const TitsFirstAlbert> tits;  // kind == "tits1"
  std::shared_ptr<const ReducedAlbert> h3;      // kind == "h3"
  std::shared_ptr<const JordanAlgebra> jordan;  // always set
  std::function<Fe(const Vec&)> norm;
};

BuiltAlgebra build_algebra(const RunConfig& cfg);

}  // namespace albert
