#include "loewner/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "loewner/error.hpp"

namespace loewner {

struct Expression::Node {
  enum class Kind { Number, Var, Add, Sub, Mul, Div, Pow, Neg, Call } kind;
  double number = 0.0;
  std::string fn;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(double t) const {
    auto a = [&](std::size_t i) { return args[i]->eval(t); };
    switch (kind) {
      case Kind::Number: return number;
      case Kind::Var: return t;
      case Kind::Add: return a(0) + a(1);
      case Kind::Sub: return a(0) - a(1);
      case Kind::Mul: return a(0) * a(1);
      case Kind::Div: return a(0) / a(1);
      case Kind::Pow: return std::pow(a(0), a(1));
      case Kind::Neg: return -a(0);
      case Kind::Call: break;
    }
    if (fn == "sqrt") return std::sqrt(a(0));
    if (fn == "exp") return std::exp(a(0));
    if (fn == "log") return std::log(a(0));
    if (fn == "sin") return std::sin(a(0));
    if (fn == "cos") return std::cos(a(0));
    if (fn == "tan") return std::tan(a(0));
    if (fn == "abs") return std::abs(a(0));
    if (fn == "min") return std::min(a(0), a(1));
    return std::max(a(0), a(1));
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "expression '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static NodePtr make(Kind k, std::vector<NodePtr> args = {}, double number = 0.0, std::string fn = {}) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = k;
    n->args = std::move(args);
    n->number = number;
    n->fn = std::move(fn);
    return n;
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (eat('+')) lhs = make(Kind::Add, {lhs, product()});
      else if (eat('-')) lhs = make(Kind::Sub, {lhs, product()});
      else return lhs;
    }
  }
  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (eat('*')) lhs = make(Kind::Mul, {lhs, unary()});
      else if (eat('/')) lhs = make(Kind::Div, {lhs, unary()});
      else return lhs;
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(Kind::Neg, {unary()});
    if (eat('+')) return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return make(Kind::Pow, {base, unary()});
    return base;
  }
  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    if (eat('(')) {
      NodePtr n = sum();
      if (!eat(')')) error("expected ')'");
      return n;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) error("bad number");
      pos_ += static_cast<std::size_t>(end - begin);
      return make(Kind::Number, {}, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "t") return make(Kind::Var);
      if (name == "pi") return make(Kind::Number, {}, std::numbers::pi);
      const bool binary = name == "min" || name == "max";
      const bool unary_fn = name == "sqrt" || name == "exp" || name == "log" || name == "sin" || name == "cos" ||
                            name == "tan" || name == "abs";
      if (!binary && !unary_fn) error("unknown identifier '" + name + "'");
      if (!eat('(')) error("expected '(' after " + name);
      std::vector<NodePtr> args{sum()};
      if (binary) {
        if (!eat(',')) error("expected ',' in " + name);
        args.push_back(sum());
      }
      if (!eat(')')) error("expected ')' after arguments of " + name);
      return make(Kind::Call, std::move(args), 0.0, name);
    }
    error("unexpected character");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  return e;
}

double Expression::operator()(double t) const { return root_->eval(t); }

}  // namespace loewner
