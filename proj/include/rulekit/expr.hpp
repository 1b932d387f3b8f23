#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rulekit/jet.hpp"

namespace rulekit {

enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt };

const char* func_name(Func f);

using Constants = std::map<std::string, double>;

/// Immutable expression tree in the curve parameter `s`. Nodes are shared,
/// so copies are cheap and trees can be read from any thread.
class Expr {
 public:
  enum class Kind { Number, Param, Constant, Neg, Add, Sub, Mul, Div, Pow, Call };

  static Expr number(double value);
  static Expr param();
  static Expr constant(std::string name);
  static Expr neg(Expr operand);
  static Expr binary(Kind op, Expr lhs, Expr rhs);
  static Expr pow(Expr base, int exponent);
  static Expr call(Func f, Expr argument);

  Expr();  // the literal 0

  Kind kind() const;
  double number_value() const;
  const std::string& name() const;
  int exponent() const;
  Func func() const;
  /// Operand of Neg/Pow/Call, left operand of binary nodes.
  const Expr& lhs() const;
  const Expr& rhs() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Parses an expression. Grammar, lowest to highest precedence:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] INTEGER)*      (right associative)
///   primary := NUMBER | 's' | NAME | FUNC '(' expr ')' | '(' expr ')'
/// `pi` is always bound. If `known` is given, other names must appear in it.
Expr parse(std::string_view text, const std::set<std::string>* known = nullptr);

/// Prints with the minimal parentheses needed to reparse the same tree.
std::string to_string(const Expr& e);

/// Value and raw derivatives up to `order` (<= Jet::kOrder); higher entries are 0.
Jet eval_jet(const Expr& e, double s, int order, const Constants& constants);

/// Plain double evaluation.
double eval(const Expr& e, double s, const Constants& constants);

/// Replaces every occurrence of `s` with `replacement`.
Expr substitute(const Expr& e, const Expr& replacement);

}  // namespace rulekit
