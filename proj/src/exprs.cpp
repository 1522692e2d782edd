#include "albert/exprs.hpp"

#include <array>
#include <cctype>

namespace albert {

using jsonu::Json;

namespace {

const std::array<const char*, 9> kFunctions = {
    "product", "norm", "trace-coeff", "adjoint", "inverse",
    "isotope-product", "u-op", "cross", "tilde"};

struct Val {
  enum Kind { Scalar, AlgElem, DElem, Coeffs } kind = Scalar;
  Fe s;
  Vec v;
  Json coeffs;
  std::string src;  // source text, quoted in type errors
};

[[noreturn]] void eval_fail(const std::string& src, const std::string& msg) {
  fail(ErrorCode::EvalError, "in \"" + src + "\": " + msg);
}

class Evaluator {
 public:
  Evaluator(const BuiltAlgebra& alg, std::string_view text)
      : alg_(alg), J_(*alg.jordan), F_(*alg.field), text_(text) {}

  Val run() {
    Val v = expr();
    skip_ws();
    if (pos_ != text_.size())
      eval_fail(std::string(text_.substr(pos_)), "unexpected trailing input");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  // raw text up to a top-level ',', ';', ')' or ']' (or end of input),
  // respecting nesting; scalars like "(s+1)/(s^2)" stay intact
  std::string scan_raw() {
    size_t depth = 0;
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == '[') ++depth;
      else if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      } else if ((c == ',' || c == ';') && depth == 0) {
        break;
      }
      ++pos_;
    }
    size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    return std::string(text_.substr(start, end - start));
  }

  Val expr() {
    skip_ws();
    size_t start = pos_;
    if (peek() == '[') return literal(start);

    // a known function name followed by '(' is a call; anything else is a
    // scalar expression handed to the field parser
    for (const char* fn : kFunctions) {
      std::string_view name(fn);
      if (text_.substr(pos_, name.size()) == name) {
        size_t after = pos_ + name.size();
        while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
        if (after < text_.size() && text_[after] == '(') {
          pos_ = after + 1;
          return call(fn, start);
        }
      }
    }
    std::string raw = scan_raw();
    if (raw.empty()) eval_fail(std::string(text_), "expected an expression");
    Val v;
    v.kind = Val::Scalar;
    v.s = F_.parse(raw);
    v.src = raw;
    return v;
  }

  Val literal(size_t start) {
    ++pos_;  // '['
    std::vector<Fe> coords;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
    } else {
      for (;;) {
        std::string raw = scan_raw();
        if (raw.empty()) eval_fail(std::string(text_.substr(start)), "empty coordinate");
        coords.push_back(F_.parse(raw));
        skip_ws();
        char c = peek();
        if (c == ',' || c == ';') {
          ++pos_;
          continue;
        }
        if (c == ']') {
          ++pos_;
          break;
        }
        eval_fail(std::string(text_.substr(start)), "unterminated coordinate list");
      }
    }
    Val v;
    v.src = std::string(text_.substr(start, pos_ - start));
    if (coords.size() == J_.dim()) {
      v.kind = Val::AlgElem;
    } else if (alg_.tits && coords.size() == 9) {
      v.kind = Val::DElem;
    } else {
      eval_fail(v.src, "coordinate list of length " + std::to_string(coords.size()) +
                           " matches neither the algebra (dim " +
                           std::to_string(J_.dim()) + ")" +
                           (alg_.tits ? " nor its coordinate algebra (dim 9)" : ""));
    }
    v.v = std::move(coords);
    return v;
  }

  Val call(const std::string& fn, size_t start) {
    std::vector<Val> args;
    skip_ws();
    if (peek() == ')') {
      ++pos_;
    } else {
      for (;;) {
        args.push_back(expr());
        skip_ws();
        char c = peek();
        if (c == ',' || c == ';') {
          ++pos_;
          continue;
        }
        if (c == ')') {
          ++pos_;
          break;
        }
        eval_fail(std::string(text_.substr(start)), "unterminated argument list");
      }
    }
    std::string src(text_.substr(start, pos_ - start));
    auto want = [&](size_t n) {
      if (args.size() != n)
        eval_fail(src, fn + " expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    };

    Val out;
    out.src = src;
    if (fn == "product") {
      want(2);
      out.kind = Val::AlgElem;
      out.v = J_.product(to_alg(args[0]), to_alg(args[1]));
    } else if (fn == "norm") {
      want(1);
      out.kind = Val::Scalar;
      out.s = alg_.norm(to_alg(args[0]));
    } else if (fn == "trace-coeff") {
      want(1);
      GenericCoefficients gc = J_.generic_coeffs(to_alg(args[0]));
      out.kind = Val::Coeffs;
      out.coeffs = Json{{"T", F_.to_string(gc.T)}, {"S", F_.to_string(gc.S)}, {"N", F_.to_string(gc.N)}};
    } else if (fn == "adjoint") {
      want(1);
      out.kind = Val::AlgElem;
      out.v = J_.adjoint(to_alg(args[0]));
    } else if (fn == "inverse") {
      want(1);
      out.kind = Val::AlgElem;
      out.v = J_.inverse(to_alg(args[0]));
    } else if (fn == "isotope-product") {
      want(3);
      out.kind = Val::AlgElem;
      out.v = J_.isotope_product(to_alg(args[0]), to_alg(args[1]), to_alg(args[2]));
    } else if (fn == "u-op") {
      want(2);
      out.kind = Val::AlgElem;
      out.v = J_.u_apply(to_alg(args[0]), to_alg(args[1]));
    } else if (fn == "cross") {
      want(2);
      out.kind = Val::DElem;
      out.v = coords().cross(to_d(args[0], src), to_d(args[1], src));
    } else {
      want(1);
      out.kind = Val::DElem;
      out.v = coords().tilde(to_d(args[0], src));
    }
    return out;
  }

  const DegreeThreeAlgebra& coords() const {
    if (!alg_.tits)
      fail(ErrorCode::EvalError,
           "cross and tilde act on the coordinate algebra, which only a tits1 "
           "algebra has");
    return alg_.tits->coordinates();
  }

  Vec to_alg(const Val& a) const {
    switch (a.kind) {
      case Val::Scalar:
        return vecops::scale(F_, a.s, J_.unit());
      case Val::AlgElem:
        return a.v;
      case Val::DElem:
        eval_fail(a.src, "coordinate-algebra element used where an algebra element is required");
      default:
        eval_fail(a.src, "trace-coeff result used as an element");
    }
  }

  Vec to_d(const Val& a, const std::string& ctx) const {
    switch (a.kind) {
      case Val::Scalar:
        return vecops::scale(F_, a.s, coords().unit());
      case Val::DElem:
        return a.v;
      case Val::AlgElem:
        eval_fail(a.src, "algebra element used where a coordinate-algebra element is required (in \"" + ctx + "\")");
      default:
        eval_fail(a.src, "trace-coeff result used as an element");
    }
  }

  const BuiltAlgebra& alg_;
  const JordanAlgebra& J_;
  const Field& F_;
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

std::string eval_expression(const BuiltAlgebra& alg, const std::string& text) {
  Evaluator ev(alg, text);
  Val v = ev.run();
  const Field& F = *alg.field;
  switch (v.kind) {
    case Val::Scalar:
      return F.to_string(v.s);
    case Val::Coeffs:
      return v.coeffs.dump();
    default:
      return vecops::to_json(F, v.v).dump();
  }
}

}  // namespace albert
