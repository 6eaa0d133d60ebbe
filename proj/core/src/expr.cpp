#include "helisurf/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <system_error>
#include <utility>

#include "helisurf/errors.hpp"

namespace helisurf {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 10> kFunctions{{
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"exp", Function::Exp},
    {"log", Function::Log},
    {"sqrt", Function::Sqrt},
    {"sinh", Function::Sinh},
    {"cosh", Function::Cosh},
    {"asinh", Function::Asinh},
    {"acosh", Function::Acosh},
}};

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

}  // namespace

std::string_view function_name(Function f) noexcept {
  for (const auto& [name, fn] : kFunctions) {
    if (fn == f) return name;
  }
  return "?";
}

std::optional<Function> function_from_name(std::string_view name) noexcept {
  for (const auto& [n, fn] : kFunctions) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

struct Expression::Node {
  Kind kind;
  double number = 0.0;  // literal value, or exponent for Pow
  Function function = Function::Sin;
  std::optional<Expression> a;
  std::optional<Expression> b;
};

Expression Expression::variable() {
  return Expression(std::make_shared<const Node>(Node{Kind::Variable, 0.0, Function::Sin, std::nullopt, std::nullopt}));
}

Expression Expression::number(double value) {
  if (!std::isfinite(value)) throw DomainError("expression literal must be finite");
  return Expression(std::make_shared<const Node>(Node{Kind::Number, value, Function::Sin, std::nullopt, std::nullopt}));
}

Expression Expression::add(Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Add, 0.0, Function::Sin, std::move(lhs), std::move(rhs)}));
}

Expression Expression::sub(Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Sub, 0.0, Function::Sin, std::move(lhs), std::move(rhs)}));
}

Expression Expression::mul(Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Mul, 0.0, Function::Sin, std::move(lhs), std::move(rhs)}));
}

Expression Expression::div(Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Div, 0.0, Function::Sin, std::move(lhs), std::move(rhs)}));
}

Expression Expression::negate(Expression operand) {
  if (operand.kind() == Kind::Number) return number(-operand.number_value());
  return Expression(std::make_shared<const Node>(
      Node{Kind::Neg, 0.0, Function::Sin, std::move(operand), std::nullopt}));
}

Expression Expression::power(Expression base, double exponent) {
  if (!std::isfinite(exponent)) throw DomainError("exponent must be finite");
  return Expression(std::make_shared<const Node>(
      Node{Kind::Pow, exponent, Function::Sin, std::move(base), std::nullopt}));
}

Expression Expression::call(Function f, Expression argument) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Call, 0.0, f, std::move(argument), std::nullopt}));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }

double Expression::number_value() const {
  if (node_->kind != Kind::Number) throw std::logic_error("not a number node");
  return node_->number;
}

double Expression::exponent() const {
  if (node_->kind != Kind::Pow) throw std::logic_error("not a power node");
  return node_->number;
}

Function Expression::function() const {
  if (node_->kind != Kind::Call) throw std::logic_error("not a call node");
  return node_->function;
}

const Expression& Expression::lhs() const {
  if (!node_->a) throw std::logic_error("node has no operand");
  return *node_->a;
}

const Expression& Expression::rhs() const {
  if (!node_->b) throw std::logic_error("node has no second operand");
  return *node_->b;
}

Jet2 Expression::eval_jet(double u) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Variable:
      return Jet2::variable(u);
    case Kind::Number:
      return Jet2::constant(n.number);
    case Kind::Add:
      return n.a->eval_jet(u) + n.b->eval_jet(u);
    case Kind::Sub:
      return n.a->eval_jet(u) - n.b->eval_jet(u);
    case Kind::Mul:
      return n.a->eval_jet(u) * n.b->eval_jet(u);
    case Kind::Div:
      return n.a->eval_jet(u) / n.b->eval_jet(u);
    case Kind::Neg:
      return -n.a->eval_jet(u);
    case Kind::Pow:
      return pow(n.a->eval_jet(u), n.number);
    case Kind::Call: {
      const Jet2 x = n.a->eval_jet(u);
      switch (n.function) {
        case Function::Sin: return sin(x);
        case Function::Cos: return cos(x);
        case Function::Tan: return tan(x);
        case Function::Exp: return exp(x);
        case Function::Log: return log(x);
        case Function::Sqrt: return sqrt(x);
        case Function::Sinh: return sinh(x);
        case Function::Cosh: return cosh(x);
        case Function::Asinh: return asinh(x);
        case Function::Acosh: return acosh(x);
      }
    }
  }
  throw std::logic_error("corrupt expression node");
}

namespace {

// Binding strength used by the printer; mirrors the parser's grammar levels.
int precedence(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::Add:
    case Expression::Kind::Sub:
      return 1;
    case Expression::Kind::Mul:
    case Expression::Kind::Div:
      return 2;
    case Expression::Kind::Neg:
      return 3;
    case Expression::Kind::Pow:
      return 4;
    case Expression::Kind::Number:
      return e.number_value() < 0.0 || std::signbit(e.number_value()) ? 3 : 5;
    case Expression::Kind::Variable:
    case Expression::Kind::Call:
      return 5;
  }
  return 0;
}

void print_to(const Expression& e, std::string& out);

void print_child(const Expression& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print_to(child, out);
  if (parens) out += ')';
}

void print_to(const Expression& e, std::string& out) {
  using K = Expression::Kind;
  switch (e.kind()) {
    case K::Variable:
      out += 'u';
      return;
    case K::Number:
      out += format_number(e.number_value());
      return;
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
      const int p = precedence(e);
      print_child(e.lhs(), precedence(e.lhs()) < p, out);
      const char* op = e.kind() == K::Add ? " + "
                       : e.kind() == K::Sub ? " - "
                       : e.kind() == K::Mul ? " * "
                                            : " / ";
      out += op;
      // Right operands of equal strength need parentheses to keep the
      // left-associative tree shape.
      print_child(e.rhs(), precedence(e.rhs()) <= p, out);
      return;
    }
    case K::Neg:
      out += '-';
      print_child(e.lhs(), precedence(e.lhs()) < 3, out);
      return;
    case K::Pow:
      print_child(e.lhs(), precedence(e.lhs()) < 5, out);
      out += '^';
      if (std::signbit(e.exponent())) {
        out += '(' + format_number(e.exponent()) + ')';
      } else {
        out += format_number(e.exponent());
      }
      return;
    case K::Call:
      out += function_name(e.function());
      out += '(';
      print_to(e.lhs(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string Expression::to_string() const {
  std::string out;
  print_to(*this, out);
  return out;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  using K = Expression::Kind;
  switch (x.kind) {
    case K::Variable:
      return true;
    case K::Number:
      return std::memcmp(&x.number, &y.number, sizeof(double)) == 0;
    case K::Pow:
      return x.number == y.number && *x.a == *y.a;
    case K::Neg:
      return *x.a == *y.a;
    case K::Call:
      return x.function == y.function && *x.a == *y.a;
    default:
      return *x.a == *y.a && *x.b == *y.b;
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse_all() {
    skip_ws();
    if (pos_ == text_.size()) {
      throw ParseError("empty expression", pos_, {"number", "u", "function", "(", "-"});
    }
    Expression e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'",
           {"+", "-", "*", "/", "^", "end of input"});
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(pos_) + ": " + what;
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += ", ";
        msg += expected[i];
      }
      msg += ')';
    }
    throw ParseError(msg, pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string describe_here() const {
    return pos_ < text_.size() ? "unexpected character '" + std::string(1, text_[pos_]) + "'"
                               : "unexpected end of input";
  }

  Expression parse_expr() {
    Expression lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expression::add(std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = Expression::sub(std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_term() {
    Expression lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expression::mul(std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = Expression::div(std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_unary() {
    if (accept('-')) return Expression::negate(parse_unary());
    return parse_power();
  }

  Expression parse_power() {
    Expression base = parse_primary();
    if (accept('^')) return Expression::power(std::move(base), parse_exponent());
    return base;
  }

  double parse_exponent() {
    if (accept('(')) {
      const double p = parse_exponent();
      if (!accept(')')) fail(describe_here(), {")"});
      return p;
    }
    const bool negative = accept('-');
    skip_ws();
    if (!at_number_start()) fail(describe_here(), {"number", "(", "-"});
    const double p = scan_number();
    return negative ? -p : p;
  }

  bool at_number_start() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '.' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  double scan_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits();
      } else {
        pos_ = save;  // "2e" is the literal 2 followed by an identifier
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      pos_ = start;
      fail("malformed number", {"number"});
    }
    return value;
  }

  Expression parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input", {"number", "u", "function", "(", "-"});
    if (at_number_start()) return Expression::number(scan_number());
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = parse_expr();
      if (!accept(')')) fail(describe_here(), {")", "+", "-", "*", "/", "^"});
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "u") return Expression::variable();
      if (auto fn = function_from_name(ident)) {
        if (!accept('(')) fail(describe_here(), {"("});
        Expression arg = parse_expr();
        if (!accept(')')) fail(describe_here(), {")", "+", "-", "*", "/", "^"});
        return Expression::call(*fn, std::move(arg));
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(ident) + "'", {"u", "function"});
    }
    fail(describe_here(), {"number", "u", "function", "(", "-"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<std::string> expected)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

}  // namespace helisurf
