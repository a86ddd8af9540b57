#include "slp/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace slp {

namespace {

enum class NodeKind { number, variable, negate, add, sub, mul, div, pow, call };
enum class Func { sin, cos, exp, sqrt, abs };

const char* func_name(Func f) {
  switch (f) {
    case Func::sin: return "sin";
    case Func::cos: return "cos";
    case Func::exp: return "exp";
    case Func::sqrt: return "sqrt";
    case Func::abs: return "abs";
  }
  return "?";
}

}  // namespace

struct Expr::Node {
  NodeKind kind;
  double value = 0.0;  // number
  Func func = Func::sin;
  std::shared_ptr<const Node> lhs, rhs;  // rhs unused for negate/call
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_number(double v) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = NodeKind::number;
  n->value = v;
  return n;
}

NodePtr make_node(NodeKind k, NodePtr a, NodePtr b = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_call(Func f, NodePtr arg) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = NodeKind::call;
  n->func = f;
  n->lhs = std::move(arg);
  return n;
}

// ---------------------------------------------------------------------------
// Tokenizer

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  double value = 0.0;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    cur_.offset = pos_;
    cur_.text.clear();
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '+': cur_.kind = Tok::plus; ++pos_; return;
      case '-': cur_.kind = Tok::minus; ++pos_; return;
      case '*': cur_.kind = Tok::star; ++pos_; return;
      case '/': cur_.kind = Tok::slash; ++pos_; return;
      case '^': cur_.kind = Tok::caret; ++pos_; return;
      case '(': cur_.kind = Tok::lparen; ++pos_; return;
      case ')': cur_.kind = Tok::rparen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      cur_.kind = Tok::ident;
      cur_.text.assign(src_.substr(start, pos_ - start));
      return;
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  void lex_number() {
    std::size_t start = pos_;
    bool any_digit = false;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
      any_digit = true;
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        any_digit = true;
      }
    }
    if (!any_digit) throw SyntaxError(start, "malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw SyntaxError(pos_, "exponent digits expected");
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    std::string text(src_.substr(start, pos_ - start));
    cur_.kind = Tok::number;
    cur_.value = std::strtod(text.c_str(), nullptr);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src), size_(src.size()) {}

  NodePtr run() {
    NodePtr e = parse_sum();
    if (lex_.peek().kind != Tok::end)
      throw SyntaxError(lex_.peek().offset, "unexpected trailing input");
    return e;
  }

 private:
  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::plus || k == Tok::minus) {
        lex_.take();
        NodePtr rhs = parse_product();
        lhs = make_node(k == Tok::plus ? NodeKind::add : NodeKind::sub, lhs, rhs);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::star || k == Tok::slash) {
        lex_.take();
        NodePtr rhs = parse_unary();
        lhs = make_node(k == Tok::star ? NodeKind::mul : NodeKind::div, lhs, rhs);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      return make_node(NodeKind::negate, parse_unary());
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (lex_.peek().kind == Tok::caret) {
      lex_.take();
      // Right-associative; the exponent may carry its own unary minus.
      NodePtr exponent = parse_unary();
      return make_node(NodeKind::pow, base, exponent);
    }
    return base;
  }

  NodePtr parse_atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::number: {
        Token tok = lex_.take();
        return make_number(tok.value);
      }
      case Tok::ident: {
        Token tok = lex_.take();
        if (tok.text == "x") return make_node(NodeKind::variable, nullptr);
        Func f;
        if (tok.text == "sin") f = Func::sin;
        else if (tok.text == "cos") f = Func::cos;
        else if (tok.text == "exp") f = Func::exp;
        else if (tok.text == "sqrt") f = Func::sqrt;
        else if (tok.text == "abs") f = Func::abs;
        else throw SyntaxError(tok.offset, "unknown identifier '" + tok.text + "'");
        if (lex_.peek().kind != Tok::lparen)
          throw SyntaxError(lex_.peek().kind == Tok::end ? size_ : lex_.peek().offset,
                            "'(' expected after function name");
        lex_.take();
        NodePtr arg = parse_sum();
        expect_rparen();
        return make_call(f, arg);
      }
      case Tok::lparen: {
        lex_.take();
        NodePtr e = parse_sum();
        expect_rparen();
        return e;
      }
      case Tok::end:
        throw SyntaxError(size_, "value expected before end of input");
      default:
        throw SyntaxError(t.offset, "value expected");
    }
  }

  void expect_rparen() {
    if (lex_.peek().kind != Tok::rparen)
      throw SyntaxError(lex_.peek().kind == Tok::end ? size_ : lex_.peek().offset, "')' expected");
    lex_.take();
  }

  Lexer lex_;
  std::size_t size_;
};

// ---------------------------------------------------------------------------
// Evaluation

double eval_node(const Expr::Node& n, double x) {
  switch (n.kind) {
    case NodeKind::number: return n.value;
    case NodeKind::variable: return x;
    case NodeKind::negate: return -eval_node(*n.lhs, x);
    case NodeKind::add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case NodeKind::sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case NodeKind::mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case NodeKind::div: {
      double a = eval_node(*n.lhs, x);
      double b = eval_node(*n.rhs, x);
      if (b == 0.0) throw Error(errc::domain_error, "division by zero");
      return a / b;
    }
    case NodeKind::pow: {
      double a = eval_node(*n.lhs, x);
      double b = eval_node(*n.rhs, x);
      if (a == 0.0 && b < 0.0) throw Error(errc::domain_error, "zero raised to a negative power");
      double r = std::pow(a, b);
      if (std::isnan(r) && !std::isnan(a) && !std::isnan(b))
        throw Error(errc::domain_error, "power has no real value");
      return r;
    }
    case NodeKind::call: {
      double a = eval_node(*n.lhs, x);
      switch (n.func) {
        case Func::sin: return std::sin(a);
        case Func::cos: return std::cos(a);
        case Func::exp: return std::exp(a);
        case Func::sqrt:
          if (a < 0.0) throw Error(errc::domain_error, "sqrt of a negative number");
          return std::sqrt(a);
        case Func::abs: return std::fabs(a);
      }
      break;
    }
  }
  throw Error(errc::domain_error, "malformed expression tree");
}

// ---------------------------------------------------------------------------
// Printing

// Shortest decimal text that parses back to exactly the same double.
std::string format_number(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

int precedence(const Expr::Node& n) {
  switch (n.kind) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul:
    case NodeKind::div: return 2;
    case NodeKind::negate: return 3;
    case NodeKind::pow: return 4;
    default: return 5;  // atoms
  }
}

void print_node(const Expr::Node& n, std::string& out);

void print_child(const Expr::Node& child, int parent_prec, bool needs_parens_on_tie,
                 std::string& out) {
  int cp = precedence(child);
  bool parens = cp < parent_prec || (cp == parent_prec && needs_parens_on_tie);
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

void print_node(const Expr::Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::number: out += format_number(n.value); return;
    case NodeKind::variable: out += 'x'; return;
    case NodeKind::negate:
      out += '-';
      // A nested negate must keep its parentheses to reparse as written.
      print_child(*n.lhs, precedence(n), true, out);
      return;
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul:
    case NodeKind::div: {
      const char* op = n.kind == NodeKind::add ? " + "
                       : n.kind == NodeKind::sub ? " - "
                       : n.kind == NodeKind::mul ? " * "
                                                 : " / ";
      print_child(*n.lhs, precedence(n), false, out);
      out += op;
      print_child(*n.rhs, precedence(n), true, out);  // left-assoc: protect right ties
      return;
    }
    case NodeKind::pow:
      print_child(*n.lhs, precedence(n), true, out);  // right-assoc: protect left ties
      out += " ^ ";
      print_child(*n.rhs, precedence(n), false, out);
      return;
    case NodeKind::call:
      out += func_name(n.func);
      out += '(';
      print_node(*n.lhs, out);
      out += ')';
      return;
  }
}

bool equal_nodes(const Expr::Node& a, const Expr::Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::number:
      return a.value == b.value || (std::isnan(a.value) && std::isnan(b.value));
    case NodeKind::variable: return true;
    case NodeKind::negate: return equal_nodes(*a.lhs, *b.lhs);
    case NodeKind::call: return a.func == b.func && equal_nodes(*a.lhs, *b.lhs);
    default: return equal_nodes(*a.lhs, *b.lhs) && equal_nodes(*a.rhs, *b.rhs);
  }
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Parser p(text);
  return Expr(p.run());
}

double Expr::eval(double x) const {
  if (!root_) throw Error(errc::domain_error, "empty expression");
  return eval_node(*root_, x);
}

std::string Expr::str() const {
  if (!root_) return "";
  std::string out;
  print_node(*root_, out);
  return out;
}

bool Expr::same_tree(const Expr& other) const {
  if (!root_ || !other.root_) return root_ == other.root_;
  return equal_nodes(*root_, *other.root_);
}

}  // namespace slp
