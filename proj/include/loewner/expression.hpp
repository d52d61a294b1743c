#pragma once

#include <memory>
#include <string>

namespace loewner {

/// Real expression in one variable `t`, e.g. "0.4*sin(2*t)".  Supports
/// + - * / ^, unary minus, parentheses, numbers, pi, and the functions
/// sqrt exp log sin cos tan abs min max.
class Expression {
 public:
  /// Throws ParseError on malformed input.
  static Expression parse(const std::string& text);

  double operator()(double t) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace loewner
