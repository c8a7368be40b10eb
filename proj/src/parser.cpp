#include "pmech/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace pmech {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  double number = 0.0;
  std::string text;
  size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    current_.pos = pos_;
    if (pos_ >= src_.size()) {
      current_.kind = Tok::End;
      return;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': current_.kind = Tok::Plus; ++pos_; return;
      case '-': current_.kind = Tok::Minus; ++pos_; return;
      case '*': current_.kind = Tok::Star; ++pos_; return;
      case '^': current_.kind = Tok::Caret; ++pos_; return;
      case '(': current_.kind = Tok::LParen; ++pos_; return;
      case ')': current_.kind = Tok::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
        ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        size_t mark = pos_ + 1;
        if (mark < src_.size() && (src_[mark] == '+' || src_[mark] == '-')) ++mark;
        if (mark < src_.size() && std::isdigit(static_cast<unsigned char>(src_[mark]))) {
          pos_ = mark;
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
      }
      current_.kind = Tok::Number;
      current_.text = std::string(src_.substr(start, pos_ - start));
      current_.number = std::strtod(current_.text.c_str(), nullptr);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        ++pos_;
      current_.kind = Tok::Ident;
      current_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view src_;
  size_t pos_ = 0;
  Token current_;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lexer_(src) {}

  ast::NodePtr parse() {
    ast::NodePtr e = expression();
    if (lexer_.peek().kind != Tok::End)
      throw ParseError("unexpected trailing input", lexer_.peek().pos);
    return e;
  }

private:
  static ast::NodePtr node(ast::Kind kind) {
    auto n = std::make_unique<ast::Node>();
    n->kind = kind;
    return n;
  }

  ast::NodePtr expression() {
    ast::NodePtr lhs = term();
    while (lexer_.peek().kind == Tok::Plus || lexer_.peek().kind == Tok::Minus) {
      Tok op = lexer_.take().kind;
      ast::NodePtr n = node(op == Tok::Plus ? ast::Kind::Add : ast::Kind::Subtract);
      n->lhs = std::move(lhs);
      n->rhs = term();
      lhs = std::move(n);
    }
    return lhs;
  }

  ast::NodePtr term() {
    ast::NodePtr lhs = unary();
    while (lexer_.peek().kind == Tok::Star) {
      lexer_.take();
      ast::NodePtr n = node(ast::Kind::Multiply);
      n->lhs = std::move(lhs);
      n->rhs = unary();
      lhs = std::move(n);
    }
    return lhs;
  }

  ast::NodePtr unary() {
    if (lexer_.peek().kind == Tok::Minus) {
      lexer_.take();
      ast::NodePtr n = node(ast::Kind::Negate);
      n->lhs = unary();
      return n;
    }
    return power();
  }

  ast::NodePtr power() {
    ast::NodePtr base = atom();
    if (lexer_.peek().kind != Tok::Caret) return base;
    const size_t caret_pos = lexer_.take().pos;
    if (base->kind != ast::Kind::Variable)
      throw ParseError("'^' applies to variables only", caret_pos);
    const Token& t = lexer_.peek();
    if (t.kind != Tok::Number)
      throw ParseError("expected a nonnegative integer exponent", t.pos);
    double value = t.number;
    if (value < 0.0 || value != std::floor(value) || t.text.find('.') != std::string::npos ||
        t.text.find('e') != std::string::npos || t.text.find('E') != std::string::npos)
      throw ParseError("expected a nonnegative integer exponent", t.pos);
    lexer_.take();
    ast::NodePtr n = node(ast::Kind::Power);
    n->exponent = static_cast<int>(value);
    n->lhs = std::move(base);
    return n;
  }

  ast::NodePtr atom() {
    const Token t = lexer_.take();
    switch (t.kind) {
      case Tok::Number: {
        ast::NodePtr n = node(ast::Kind::Number);
        n->number = t.number;
        return n;
      }
      case Tok::Ident: {
        if (t.text == "i") return node(ast::Kind::Imaginary);
        if (t.text == "PI") return node(ast::Kind::PiConstant);
        ast::NodePtr n = node(ast::Kind::Variable);
        n->name = t.text;
        return n;
      }
      case Tok::LParen: {
        ast::NodePtr inner = expression();
        if (lexer_.peek().kind != Tok::RParen)
          throw ParseError("expected ')'", lexer_.peek().pos);
        lexer_.take();
        return inner;
      }
      default:
        throw ParseError("expected a number, identifier or '('", t.pos);
    }
  }

  Lexer lexer_;
};

int precedence(ast::Kind kind) {
  switch (kind) {
    case ast::Kind::Add:
    case ast::Kind::Subtract: return 1;
    case ast::Kind::Multiply: return 2;
    case ast::Kind::Negate: return 3;
    default: return 4;  // atoms and powers
  }
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void print_node(const ast::Node& n, std::string& out) {
  auto child = [&out](const ast::Node& c, int min_prec) {
    const bool parens = precedence(c.kind) < min_prec;
    if (parens) out += "(";
    print_node(c, out);
    if (parens) out += ")";
  };
  switch (n.kind) {
    case ast::Kind::Number: out += format_number(n.number); return;
    case ast::Kind::Imaginary: out += "i"; return;
    case ast::Kind::PiConstant: out += "PI"; return;
    case ast::Kind::Variable: out += n.name; return;
    case ast::Kind::Negate:
      out += "-";
      child(*n.lhs, precedence(ast::Kind::Negate));
      return;
    case ast::Kind::Add:
      child(*n.lhs, 1);
      out += " + ";
      child(*n.rhs, 2);  // right operand needs higher binding to round-trip a-(b+c) forms
      return;
    case ast::Kind::Subtract:
      child(*n.lhs, 1);
      out += " - ";
      child(*n.rhs, 2);
      return;
    case ast::Kind::Multiply:
      child(*n.lhs, 2);
      out += "*";
      child(*n.rhs, 3);
      return;
    case ast::Kind::Power:
      child(*n.lhs, 4);
      out += "^" + std::to_string(n.exponent);
      return;
  }
}

}  // namespace

ast::NodePtr parse_expression(std::string_view source) { return Parser(source).parse(); }

std::string print_expression(const ast::Node& node) {
  std::string out;
  print_node(node, out);
  return out;
}

SuperPolynomial to_polynomial(const ast::Node& node, const VarTablePtr& table) {
  switch (node.kind) {
    case ast::Kind::Number:
      return SuperPolynomial::constant(table, node.number);
    case ast::Kind::Imaginary:
      return SuperPolynomial::constant(table, Complex{0.0, 1.0});
    case ast::Kind::PiConstant:
      return SuperPolynomial::constant(table, std::numbers::pi);
    case ast::Kind::Variable: {
      int idx = table->find(node.name);
      if (idx < 0) throw ParseError("unknown identifier '" + node.name + "'", 0);
      return SuperPolynomial::variable(table, idx);
    }
    case ast::Kind::Negate:
      return -to_polynomial(*node.lhs, table);
    case ast::Kind::Add:
      return to_polynomial(*node.lhs, table) + to_polynomial(*node.rhs, table);
    case ast::Kind::Subtract:
      return to_polynomial(*node.lhs, table) - to_polynomial(*node.rhs, table);
    case ast::Kind::Multiply:
      return to_polynomial(*node.lhs, table) * to_polynomial(*node.rhs, table);
    case ast::Kind::Power: {
      const ast::Node& base = *node.lhs;
      int idx = table->find(base.name);
      if (idx < 0) throw ParseError("unknown identifier '" + base.name + "'", 0);
      if (table->info(idx).parity == VarParity::Odd && node.exponent >= 2)
        throw ParseError("odd variable '" + base.name + "' cannot carry exponent >= 2", 0);
      SuperPolynomial acc = SuperPolynomial::constant(table, 1.0);
      SuperPolynomial v = SuperPolynomial::variable(table, idx);
      for (int k = 0; k < node.exponent; ++k) acc = acc * v;
      return acc;
    }
  }
  throw ParseError("malformed expression tree", 0);
}

SuperPolynomial parse_polynomial(std::string_view source, const VarTablePtr& table) {
  return to_polynomial(*parse_expression(source), table);
}

}  // namespace pmech
