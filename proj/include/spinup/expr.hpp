#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "spinup/dual.hpp"
#include "spinup/errors.hpp"

namespace spinup {

enum class Op { Constant, Variable, Sum, Product, Power, Sin, Cos, Exp };

/// Immutable symbolic expression over named real variables.
///
/// Node set: constants, variables, n-ary sums and products, powers with a
/// constant exponent, sin, cos and exp. The set is closed under
/// differentiation. Construction performs constant folding only; no other
/// rewriting is attempted, so structurally different but equal expressions
/// stay different.
class Expr {
 public:
  Expr() : Expr(make(Op::Constant, 0.0, {}, {})) {}

  static Expr constant(double c) { return Expr(make(Op::Constant, c, {}, {})); }

  static Expr variable(std::string name) {
    if (name.empty()) throw InvalidInput("variable name must not be empty");
    return Expr(make(Op::Variable, 0.0, std::move(name), {}));
  }

  static Expr sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    double folded = 0.0;
    for (auto& t : terms) {
      if (t.op() == Op::Sum) {
        for (const auto& c : t.children()) {
          if (c.is_constant()) folded += c.value();
          else flat.push_back(c);
        }
      } else if (t.is_constant()) {
        folded += t.value();
      } else {
        flat.push_back(std::move(t));
      }
    }
    if (folded != 0.0 || flat.empty()) flat.insert(flat.begin(), constant(folded));
    if (flat.size() == 1) return flat.front();
    return Expr(make(Op::Sum, 0.0, {}, std::move(flat)));
  }

  static Expr product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    double folded = 1.0;
    for (auto& f : factors) {
      if (f.op() == Op::Product) {
        for (const auto& c : f.children()) {
          if (c.is_constant()) folded *= c.value();
          else flat.push_back(c);
        }
      } else if (f.is_constant()) {
        folded *= f.value();
      } else {
        flat.push_back(std::move(f));
      }
    }
    if (folded == 0.0) return constant(0.0);
    if (folded != 1.0 || flat.empty()) flat.insert(flat.begin(), constant(folded));
    if (flat.size() == 1) return flat.front();
    return Expr(make(Op::Product, 0.0, {}, std::move(flat)));
  }

  static Expr power(Expr base, double exponent) {
    if (exponent == 0.0) return constant(1.0);
    if (exponent == 1.0) return base;
    if (base.is_constant()) return constant(std::pow(base.value(), exponent));
    return Expr(make(Op::Power, exponent, {}, {std::move(base)}));
  }

  static Expr sin(Expr a) {
    if (a.is_constant()) return constant(std::sin(a.value()));
    return Expr(make(Op::Sin, 0.0, {}, {std::move(a)}));
  }
  static Expr cos(Expr a) {
    if (a.is_constant()) return constant(std::cos(a.value()));
    return Expr(make(Op::Cos, 0.0, {}, {std::move(a)}));
  }
  static Expr exp(Expr a) {
    if (a.is_constant()) return constant(std::exp(a.value()));
    return Expr(make(Op::Exp, 0.0, {}, {std::move(a)}));
  }

  Op op() const noexcept { return node_->op; }
  /// Constant value, or the exponent of a Power node.
  double value() const noexcept { return node_->value; }
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<Expr>& children() const noexcept { return node_->kids; }

  bool is_constant() const noexcept { return op() == Op::Constant; }
  bool is_constant(double c) const noexcept { return is_constant() && value() == c; }
  bool is_variable(std::string_view n) const noexcept {
    return op() == Op::Variable && name() == n;
  }

  void collect_variables(std::set<std::string>& out) const {
    if (op() == Op::Variable) out.insert(name());
    for (const auto& c : children()) c.collect_variables(out);
  }
  std::set<std::string> variables() const {
    std::set<std::string> out;
    collect_variables(out);
    return out;
  }
  bool depends_on(const std::string& var) const {
    if (op() == Op::Variable) return name() == var;
    return std::any_of(children().begin(), children().end(),
                       [&](const Expr& c) { return c.depends_on(var); });
  }

  /// Exact symbolic derivative.
  Expr derivative(const std::string& var) const {
    switch (op()) {
      case Op::Constant:
        return constant(0.0);
      case Op::Variable:
        return constant(name() == var ? 1.0 : 0.0);
      case Op::Sum: {
        std::vector<Expr> terms;
        for (const auto& c : children()) terms.push_back(c.derivative(var));
        return sum(std::move(terms));
      }
      case Op::Product: {
        std::vector<Expr> terms;
        const auto& k = children();
        for (std::size_t i = 0; i < k.size(); ++i) {
          Expr dk = k[i].derivative(var);
          if (dk.is_constant(0.0)) continue;
          std::vector<Expr> factors;
          for (std::size_t j = 0; j < k.size(); ++j) factors.push_back(j == i ? dk : k[j]);
          terms.push_back(product(std::move(factors)));
        }
        return sum(std::move(terms));
      }
      case Op::Power: {
        const Expr& b = children()[0];
        return product({constant(value()), power(b, value() - 1.0), b.derivative(var)});
      }
      case Op::Sin: {
        const Expr& a = children()[0];
        return product({cos(a), a.derivative(var)});
      }
      case Op::Cos: {
        const Expr& a = children()[0];
        return product({constant(-1.0), sin(a), a.derivative(var)});
      }
      case Op::Exp: {
        const Expr& a = children()[0];
        return product({*this, a.derivative(var)});
      }
    }
    return constant(0.0);
  }

  /// Replaces every occurrence of `var` by `replacement`, re-folding constants.
  Expr substitute(const std::string& var, const Expr& replacement) const {
    switch (op()) {
      case Op::Constant:
        return *this;
      case Op::Variable:
        return name() == var ? replacement : *this;
      case Op::Power:
        return power(children()[0].substitute(var, replacement), value());
      case Op::Sin:
        return sin(children()[0].substitute(var, replacement));
      case Op::Cos:
        return cos(children()[0].substitute(var, replacement));
      case Op::Exp:
        return exp(children()[0].substitute(var, replacement));
      case Op::Sum:
      case Op::Product: {
        std::vector<Expr> kids;
        for (const auto& c : children()) kids.push_back(c.substitute(var, replacement));
        return op() == Op::Sum ? sum(std::move(kids)) : product(std::move(kids));
      }
    }
    return *this;
  }

  /// Fully parenthesized text that `parse_expr` reads back to the same tree.
  std::string to_string() const {
    std::string out;
    print(out);
    return out;
  }

  bool structurally_equal(const Expr& other) const { return to_string() == other.to_string(); }

 private:
  struct Node {
    Op op;
    double value;
    std::string name;
    std::vector<Expr> kids;
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> make(Op op, double value, std::string name,
                                          std::vector<Expr> kids) {
    return std::make_shared<const Node>(Node{op, value, std::move(name), std::move(kids)});
  }

  static void print_number(std::string& out, double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (v < 0) out += "(" + s + ")";
    else out += s;
  }

  void print(std::string& out) const {
    switch (op()) {
      case Op::Constant:
        print_number(out, value());
        return;
      case Op::Variable:
        out += name();
        return;
      case Op::Sum:
      case Op::Product: {
        out += "(";
        const char* sep = op() == Op::Sum ? " + " : " * ";
        for (std::size_t i = 0; i < children().size(); ++i) {
          if (i) out += sep;
          children()[i].print(out);
        }
        out += ")";
        return;
      }
      case Op::Power:
        out += "(";
        children()[0].print(out);
        out += " ^ ";
        print_number(out, value());
        out += ")";
        return;
      case Op::Sin:
      case Op::Cos:
      case Op::Exp:
        out += op() == Op::Sin ? "sin(" : op() == Op::Cos ? "cos(" : "exp(";
        children()[0].print(out);
        out += ")";
        return;
    }
  }

  std::shared_ptr<const Node> node_;
};

inline Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
inline Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
inline Expr operator-(const Expr& a) { return Expr::product({Expr::constant(-1.0), a}); }
inline Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
inline Expr operator+(const Expr& a, double b) { return a + Expr::constant(b); }
inline Expr operator+(double a, const Expr& b) { return Expr::constant(a) + b; }
inline Expr operator*(double a, const Expr& b) { return Expr::constant(a) * b; }
inline Expr operator*(const Expr& a, double b) { return a * Expr::constant(b); }
inline Expr pow(const Expr& a, double k) { return Expr::power(a, k); }
inline Expr sin(const Expr& a) { return Expr::sin(a); }
inline Expr cos(const Expr& a) { return Expr::cos(a); }
inline Expr exp(const Expr& a) { return Expr::exp(a); }

/// Evaluates `e` with variables bound positionally: `names[i]` takes `values[i]`.
/// Works for `double` and `Dual` scalars. Unbound variables are an error.
template <class T>
T evaluate(const Expr& e, std::span<const std::string> names, std::span<const T> values,
           std::size_t dims = 0) {
  auto lift = [&](double c) {
    if constexpr (std::is_same_v<T, double>) return c;
    else return T(c, dims);
  };
  switch (e.op()) {
    case Op::Constant:
      return lift(e.value());
    case Op::Variable: {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == e.name()) return values[i];
      }
      throw InvalidInput("unbound variable '" + e.name() + "'");
    }
    case Op::Sum: {
      T acc = lift(0.0);
      for (const auto& c : e.children()) acc = acc + evaluate<T>(c, names, values, dims);
      return acc;
    }
    case Op::Product: {
      T acc = lift(1.0);
      for (const auto& c : e.children()) acc = acc * evaluate<T>(c, names, values, dims);
      return acc;
    }
    case Op::Power: {
      using std::pow;
      return pow(evaluate<T>(e.children()[0], names, values, dims), e.value());
    }
    case Op::Sin: {
      using std::sin;
      return sin(evaluate<T>(e.children()[0], names, values, dims));
    }
    case Op::Cos: {
      using std::cos;
      return cos(evaluate<T>(e.children()[0], names, values, dims));
    }
    case Op::Exp: {
      using std::exp;
      return exp(evaluate<T>(e.children()[0], names, values, dims));
    }
  }
  return lift(0.0);
}

inline double evaluate(const Expr& e, std::span<const std::string> names,
                       std::span<const double> values) {
  const double v = evaluate<double>(e, names, values);
  if (!std::isfinite(v)) throw EvaluationError("non-finite value of " + e.to_string());
  return v;
}

/// Evaluates a constant expression (no variables).
inline double evaluate_constant(const Expr& e) {
  return evaluate(e, std::span<const std::string>{}, std::span<const double>{});
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("expression parse error at column " + std::to_string(pos_ + 1) + ": " +
                       msg + " in '" + std::string(src_) + "'");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr parse_sum() {
    std::vector<Expr> terms{parse_product()};
    for (;;) {
      if (accept('+')) terms.push_back(parse_product());
      else if (accept('-')) terms.push_back(-parse_product());
      else break;
    }
    return Expr::sum(std::move(terms));
  }

  Expr parse_product() {
    std::vector<Expr> factors{parse_unary()};
    for (;;) {
      if (accept('*')) factors.push_back(parse_unary());
      else if (accept('/')) factors.push_back(Expr::power(parse_unary(), -1.0));
      else break;
    }
    return Expr::product(std::move(factors));
  }

  Expr parse_unary() {
    if (accept('-')) return -parse_unary();
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (accept('^')) {
      Expr exponent = parse_unary();
      if (!exponent.is_constant()) fail("exponent must be a constant expression");
      return Expr::power(base, exponent.value());
    }
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
      if (ec != std::errc()) fail("bad number");
      pos_ = static_cast<std::size_t>(ptr - src_.data());
      return Expr::constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string id(src_.substr(start, pos_ - start));
      if (id == "pi") return Expr::constant(std::numbers::pi);
      if (id == "sin" || id == "cos" || id == "exp") {
        expect('(');
        Expr arg = parse_sum();
        expect(')');
        if (id == "sin") return Expr::sin(arg);
        if (id == "cos") return Expr::cos(arg);
        return Expr::exp(arg);
      }
      return Expr::variable(id);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses infix text: `+ - * / ^`, `sin cos exp`, numbers, `pi`, identifiers.
inline Expr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace spinup
