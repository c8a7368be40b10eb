#ifndef PMECH_PARSER_HPP
#define PMECH_PARSER_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pmech/superpoly.hpp"

namespace pmech {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

namespace ast {

enum class Kind { Number, Imaginary, PiConstant, Variable, Negate, Add, Subtract, Multiply, Power };

struct Node {
  Kind kind;
  double number = 0.0;       // Number
  std::string name;          // Variable
  int exponent = 0;          // Power
  std::unique_ptr<Node> lhs; // Negate/Power operand, binary lhs
  std::unique_ptr<Node> rhs; // binary rhs
};

using NodePtr = std::unique_ptr<Node>;

}  // namespace ast

/// Parses `i`, `PI`, numbers, identifiers, unary minus, + - *, `^` on
/// variables with a nonnegative integer exponent, and parentheses.
/// Precedence: ^  >  unary -  >  *  >  binary +/-. Left-associative.
ast::NodePtr parse_expression(std::string_view source);

/// Minimal-parentheses printer; parse(print(x)) reproduces x.
std::string print_expression(const ast::Node& node);

/// Evaluates the tree over the polynomial algebra. Throws ParseError for
/// unknown identifiers and for powers >= 2 of odd variables.
SuperPolynomial to_polynomial(const ast::Node& node, const VarTablePtr& table);

/// parse + validate + evaluate in one step.
SuperPolynomial parse_polynomial(std::string_view source, const VarTablePtr& table);

}  // namespace pmech

#endif
