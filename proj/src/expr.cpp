#include "rulekit/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>

#include "rulekit/errors.hpp"

namespace rulekit {

struct Expr::Node {
  Kind kind = Kind::Number;
  double number = 0.0;
  std::string name;
  int exponent = 0;
  Func func = Func::Sin;
  std::vector<Expr> children;
};

namespace {

const std::string kEmptyName;

std::optional<Func> lookup_func(std::string_view name) {
  if (name == "sin") return Func::Sin;
  if (name == "cos") return Func::Cos;
  if (name == "tan") return Func::Tan;
  if (name == "exp") return Func::Exp;
  if (name == "log") return Func::Log;
  if (name == "sqrt") return Func::Sqrt;
  return std::nullopt;
}

}  // namespace

const char* func_name(Func f) {
  switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
  }
  return "?";
}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr::Expr() : Expr(std::make_shared<const Node>()) {}

Expr Expr::number(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->number = value;
  return Expr(std::move(n));
}

Expr Expr::param() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  return Expr(std::move(n));
}

Expr Expr::constant(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::neg(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->children.push_back(std::move(operand));
  return Expr(std::move(n));
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = op;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = exponent;
  n->children.push_back(std::move(base));
  return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr argument) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->func = f;
  n->children.push_back(std::move(argument));
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::number_value() const { return node_->number; }
const std::string& Expr::name() const { return node_->name; }
int Expr::exponent() const { return node_->exponent; }
Func Expr::func() const { return node_->func; }
const Expr& Expr::lhs() const { return node_->children.at(0); }
const Expr& Expr::rhs() const { return node_->children.at(1); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.children.size() != y.children.size()) return false;
  switch (x.kind) {
    case Expr::Kind::Number:
      if (x.number != y.number) return false;
      break;
    case Expr::Kind::Constant:
      if (x.name != y.name) return false;
      break;
    case Expr::Kind::Pow:
      if (x.exponent != y.exponent) return false;
      break;
    case Expr::Kind::Call:
      if (x.func != y.func) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string_view text;
  double number = 0.0;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>* known) : text_(text), known_(known) { advance(); }

  Expr parse_all() {
    Expr e = parse_expr();
    if (tok_.kind != Tok::End) fail({"operator", "end of input"});
    return e;
  }

 private:
  std::string_view text_;
  const std::set<std::string>* known_;
  std::size_t pos_ = 0;
  Token tok_;

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(tok_.offset) + ": found " + describe(tok_.kind);
    if (tok_.kind != Tok::End) msg += " '" + std::string(tok_.text) + "'";
    msg += ", expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    msg += "}";
    throw SyntaxError(tok_.offset, std::move(expected), msg);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      tok_.kind = Tok::Ident;
      tok_.text = text_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    static constexpr std::pair<char, Tok> kSingle[] = {{'+', Tok::Plus},   {'-', Tok::Minus},  {'*', Tok::Star},
                                                       {'/', Tok::Slash},  {'^', Tok::Caret},  {'(', Tok::LParen},
                                                       {')', Tok::RParen}, {',', Tok::Comma}};
    for (const auto& [ch, kind] : kSingle) {
      if (c == ch) {
        tok_.kind = kind;
        tok_.text = text_.substr(pos_, 1);
        ++pos_;
        return;
      }
    }
    tok_.text = text_.substr(pos_, 1);
    throw SyntaxError(pos_, {"number", "identifier", "operator", "'('", "')'"},
                      "syntax error at offset " + std::to_string(pos_) + ": unexpected character '" +
                          std::string(1, c) + "'");
  }

  void lex_number() {
    std::size_t end = pos_;
    auto digits = [&] {
      std::size_t start = end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      return end - start;
    };
    std::size_t count = digits();
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      count += digits();
    }
    if (count == 0) {
      throw SyntaxError(pos_, {"number"}, "syntax error at offset " + std::to_string(pos_) + ": malformed number");
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t save = end;
      ++end;
      if (end < text_.size() && (text_[end] == '+' || text_[end] == '-')) ++end;
      if (digits() == 0) end = save;
    }
    tok_.kind = Tok::Number;
    tok_.text = text_.substr(pos_, end - pos_);
    tok_.number = std::strtod(std::string(tok_.text).c_str(), nullptr);
    pos_ = end;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const auto op = tok_.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      advance();
      lhs = Expr::binary(op, lhs, parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      const auto op = tok_.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      advance();
      lhs = Expr::binary(op, lhs, parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return Expr::neg(parse_unary());
    }
    return parse_power();
  }

  long long parse_integer_exponent() {
    bool negative = false;
    if (tok_.kind == Tok::Minus) {
      negative = true;
      advance();
    }
    if (tok_.kind != Tok::Number || tok_.text.find_first_of(".eE") != std::string_view::npos) {
      fail({"integer literal"});
    }
    if (tok_.number > 64.0) fail({"integer literal <= 64"});
    const auto value = static_cast<long long>(tok_.number);
    advance();
    return negative ? -value : value;
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (tok_.kind != Tok::Caret) return base;
    std::vector<long long> exponents;
    std::vector<std::size_t> offsets;
    while (tok_.kind == Tok::Caret) {
      advance();
      offsets.push_back(tok_.offset);
      exponents.push_back(parse_integer_exponent());
    }
    // Right associativity: a^b^c = a^(b^c); the folded exponent must stay integral.
    long long folded = exponents.back();
    for (std::size_t i = exponents.size() - 1; i-- > 0;) {
      const long long b = exponents[i];
      if (folded < 0 && std::llabs(b) != 1) {
        throw SyntaxError(offsets[i], {"integer exponent"},
                          "syntax error at offset " + std::to_string(offsets[i]) + ": exponent is not an integer");
      }
      const double value = std::pow(static_cast<double>(b), static_cast<double>(folded));
      if (std::fabs(value) > 64.0) {
        throw SyntaxError(offsets[i], {"integer literal <= 64"},
                          "syntax error at offset " + std::to_string(offsets[i]) + ": exponent too large");
      }
      folded = static_cast<long long>(std::llround(value));
    }
    return Expr::pow(base, static_cast<int>(folded));
  }

  Expr parse_primary() {
    switch (tok_.kind) {
      case Tok::Number: {
        Expr e = Expr::number(tok_.number);
        advance();
        return e;
      }
      case Tok::LParen: {
        advance();
        Expr e = parse_expr();
        if (tok_.kind != Tok::RParen) fail({"')'"});
        advance();
        return e;
      }
      case Tok::Ident:
        return parse_identifier();
      default:
        fail({"number", "s", "identifier", "function", "'('"});
    }
  }

  Expr parse_identifier() {
    const std::string name(tok_.text);
    const std::size_t offset = tok_.offset;
    advance();
    if (auto f = lookup_func(name)) {
      if (tok_.kind != Tok::LParen) fail({"'('"});
      advance();
      if (tok_.kind == Tok::RParen) fail({"expression"});
      Expr arg = parse_expr();
      if (tok_.kind != Tok::RParen) fail({"')'"});
      advance();
      return Expr::call(*f, arg);
    }
    if (tok_.kind == Tok::LParen) throw UnknownIdentifier(name, offset);
    if (name == "s") return Expr::param();
    if (name != "pi" && known_ != nullptr && !known_->contains(name)) throw UnknownIdentifier(name, offset);
    return Expr::constant(name);
  }
};

}  // namespace

Expr parse(std::string_view text, const std::set<std::string>* known) { return Parser(text, known).parse_all(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::Number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.number_value());
      out += buf;
      return;
    }
    case Expr::Kind::Param: out += 's'; return;
    case Expr::Kind::Constant: out += e.name(); return;
    case Expr::Kind::Neg:
      out += '-';
      print_child(e.lhs(), precedence(e.lhs()) < 3, out);
      return;
    case Expr::Kind::Pow:
      print_child(e.lhs(), precedence(e.lhs()) < 5, out);
      out += '^';
      out += std::to_string(e.exponent());
      return;
    case Expr::Kind::Call:
      out += func_name(e.func());
      out += '(';
      print(e.lhs(), out);
      out += ')';
      return;
    default: {
      const int p = precedence(e);
      static constexpr const char* kOps[] = {"+", "-", "*", "/"};
      const int op = static_cast<int>(e.kind()) - static_cast<int>(Expr::Kind::Add);
      print_child(e.lhs(), precedence(e.lhs()) < p, out);
      out += ' ';
      out += kOps[op];
      out += ' ';
      print_child(e.rhs(), precedence(e.rhs()) <= p, out);
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double lookup_constant(const std::string& name, const Constants& constants) {
  if (auto it = constants.find(name); it != constants.end()) return it->second;
  if (name == "pi") return std::numbers::pi;
  throw UnknownIdentifier(name, 0);
}

Jet jet_of(const Expr& e, const Jet& s, const Constants& constants) {
  switch (e.kind()) {
    case Expr::Kind::Number: return Jet(e.number_value());
    case Expr::Kind::Param: return s;
    case Expr::Kind::Constant: return Jet(lookup_constant(e.name(), constants));
    case Expr::Kind::Neg: return -jet_of(e.lhs(), s, constants);
    case Expr::Kind::Add: return jet_of(e.lhs(), s, constants) + jet_of(e.rhs(), s, constants);
    case Expr::Kind::Sub: return jet_of(e.lhs(), s, constants) - jet_of(e.rhs(), s, constants);
    case Expr::Kind::Mul: return jet_of(e.lhs(), s, constants) * jet_of(e.rhs(), s, constants);
    case Expr::Kind::Div: {
      const Jet d = jet_of(e.rhs(), s, constants);
      if (d[0] == 0.0) throw DomainError("division by zero");
      return jet_of(e.lhs(), s, constants) / d;
    }
    case Expr::Kind::Pow: return pow(jet_of(e.lhs(), s, constants), e.exponent());
    case Expr::Kind::Call: {
      const Jet a = jet_of(e.lhs(), s, constants);
      switch (e.func()) {
        case Func::Sin: return sin(a);
        case Func::Cos: return cos(a);
        case Func::Tan: return tan(a);
        case Func::Exp: return exp(a);
        case Func::Log: return log(a);
        case Func::Sqrt: return sqrt(a);
      }
    }
  }
  return Jet();
}

}  // namespace

Jet eval_jet(const Expr& e, double s, int order, const Constants& constants) {
  if (order < 0 || order > Jet::kOrder) throw std::invalid_argument("jet order out of range");
  return jet_of(e, Jet::variable(s), constants).truncated(order);
}

double eval(const Expr& e, double s, const Constants& constants) {
  switch (e.kind()) {
    case Expr::Kind::Number: return e.number_value();
    case Expr::Kind::Param: return s;
    case Expr::Kind::Constant: return lookup_constant(e.name(), constants);
    case Expr::Kind::Neg: return -eval(e.lhs(), s, constants);
    case Expr::Kind::Add: return eval(e.lhs(), s, constants) + eval(e.rhs(), s, constants);
    case Expr::Kind::Sub: return eval(e.lhs(), s, constants) - eval(e.rhs(), s, constants);
    case Expr::Kind::Mul: return eval(e.lhs(), s, constants) * eval(e.rhs(), s, constants);
    case Expr::Kind::Div: {
      const double d = eval(e.rhs(), s, constants);
      if (d == 0.0) throw DomainError("division by zero");
      return eval(e.lhs(), s, constants) / d;
    }
    case Expr::Kind::Pow: {
      const double b = eval(e.lhs(), s, constants);
      if (b == 0.0 && e.exponent() < 0) throw DomainError("negative power of zero");
      double r = 1.0;
      for (int i = 0; i < std::abs(e.exponent()); ++i) r *= b;
      return e.exponent() < 0 ? 1.0 / r : r;
    }
    case Expr::Kind::Call: {
      const double a = eval(e.lhs(), s, constants);
      switch (e.func()) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Tan:
          if (std::fabs(std::cos(a)) < 1e-12) throw DomainError("tan evaluated at a pole");
          return std::tan(a);
        case Func::Exp: return std::exp(a);
        case Func::Log:
          if (!(a > 0.0)) throw DomainError("log of a non-positive value");
          return std::log(a);
        case Func::Sqrt:
          if (a < 0.0) throw DomainError("sqrt of a negative value");
          return std::sqrt(a);
      }
    }
  }
  return 0.0;
}

Expr substitute(const Expr& e, const Expr& replacement) {
  switch (e.kind()) {
    case Expr::Kind::Param: return replacement;
    case Expr::Kind::Number:
    case Expr::Kind::Constant: return e;
    case Expr::Kind::Neg: return Expr::neg(substitute(e.lhs(), replacement));
    case Expr::Kind::Pow: return Expr::pow(substitute(e.lhs(), replacement), e.exponent());
    case Expr::Kind::Call: return Expr::call(e.func(), substitute(e.lhs(), replacement));
    default: return Expr::binary(e.kind(), substitute(e.lhs(), replacement), substitute(e.rhs(), replacement));
  }
}

}  // namespace rulekit
