// Copyright 2026 The cfkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfkit/expr_parser.hpp"

#include <cctype>
#include <sstream>

#include "cfkit/errors.hpp"

namespace cfkit {

namespace {

enum class Tok { kInteger, kN, kPi, kPlus, kMinus, kStar, kSlash, kCaret, kLParen,
                 kRParen, kEnd };

struct Token {
  Tok kind;
  std::size_t position;
  std::string text;
};

const char* kOperandClasses = "integer, 'n', 'pi', '(' or '-'";

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::kInteger, start, std::string(text.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      const std::string word(text.substr(start, i - start));
      if (word == "n") {
        out.push_back({Tok::kN, start, word});
      } else if (word == "pi") {
        out.push_back({Tok::kPi, start, word});
      } else {
        throw SyntaxError("unknown identifier '" + word + "'; expected 'n' or 'pi'", start);
      }
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + ch + "'", start);
    }
    out.push_back({kind, start, std::string(1, ch)});
    ++i;
  }
  out.push_back({Tok::kEnd, text.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ExprNode parse() {
    if (peek().kind == Tok::kEnd) {
      throw SyntaxError(std::string("empty expression; expected ") + kOperandClasses, 0);
    }
    ExprNode root = expr();
    if (peek().kind != Tok::kEnd) {
      throw SyntaxError("unexpected '" + peek().text +
                            "'; expected operator '+', '-', '*', '/', '^' or end of input",
                        peek().position);
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  static ExprNode binary(ExprNode::Kind kind, ExprNode lhs, ExprNode rhs,
                         std::size_t position) {
    ExprNode node;
    node.kind = kind;
    node.position = position;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprNode expr() {
    ExprNode lhs = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Token& op = next();
      ExprNode rhs = term();
      lhs = binary(op.kind == Tok::kPlus ? ExprNode::Kind::kAdd : ExprNode::Kind::kSubtract,
                   std::move(lhs), std::move(rhs), op.position);
    }
    return lhs;
  }

  ExprNode term() {
    ExprNode lhs = unary();
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token& op = next();
      ExprNode rhs = unary();
      lhs = binary(op.kind == Tok::kStar ? ExprNode::Kind::kMultiply
                                         : ExprNode::Kind::kDivide,
                   std::move(lhs), std::move(rhs), op.position);
    }
    return lhs;
  }

  ExprNode unary() {
    if (peek().kind == Tok::kMinus) {
      ExprNode node;
      node.kind = ExprNode::Kind::kNegate;
      node.position = next().position;
      node.children.push_back(unary());
      return node;
    }
    return power();
  }

  ExprNode power() {
    ExprNode base = primary();
    while (peek().kind == Tok::kCaret) {
      const Token& op = next();
      if (peek().kind != Tok::kInteger) {
        throw SyntaxError("exponent must be a nonnegative integer literal; got '" +
                              peek().text + "'",
                          peek().position);
      }
      ExprNode node;
      node.kind = ExprNode::Kind::kPower;
      node.position = op.position;
      node.value = BigInt(next().text, 10);
      node.children.push_back(std::move(base));
      base = std::move(node);
    }
    if (peek().kind == Tok::kInteger || peek().kind == Tok::kN ||
        peek().kind == Tok::kPi || peek().kind == Tok::kLParen) {
      throw SyntaxError("implicit multiplication is not supported; expected '*'",
                        peek().position);
    }
    return base;
  }

  ExprNode primary() {
    const Token& tok = peek();
    ExprNode node;
    node.position = tok.position;
    switch (tok.kind) {
      case Tok::kInteger:
        node.kind = ExprNode::Kind::kInteger;
        node.value = BigInt(next().text, 10);
        return node;
      case Tok::kN:
        next();
        node.kind = ExprNode::Kind::kVariable;
        return node;
      case Tok::kPi:
        next();
        node.kind = ExprNode::Kind::kPi;
        return node;
      case Tok::kLParen: {
        next();
        ExprNode inner = expr();
        if (peek().kind != Tok::kRParen) {
          throw SyntaxError("expected ')' or an operator, got " +
                                (peek().kind == Tok::kEnd ? std::string("end of input")
                                                          : "'" + peek().text + "'"),
                            peek().position);
        }
        next();
        return inner;
      }
      default:
        throw SyntaxError("expected " + std::string(kOperandClasses) + ", got " +
                              (tok.kind == Tok::kEnd ? std::string("end of input")
                                                     : "'" + tok.text + "'"),
                          tok.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

unsigned long exponent_of(const ExprNode& node) {
  if (!node.value.fits_ulong_p() || node.value > 4096) {
    throw SyntaxError("exponent too large", node.position);
  }
  return node.value.get_ui();
}

PolyRat lower_sequence(const ExprNode& node) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::kInteger:
      return PolyRat(Rational(node.value));
    case K::kVariable:
      return PolyRat::variable();
    case K::kPi:
      throw PiNotAllowedError(node.position);
    case K::kNegate:
      return -lower_sequence(node.children[0]);
    case K::kAdd:
      return lower_sequence(node.children[0]) + lower_sequence(node.children[1]);
    case K::kSubtract:
      return lower_sequence(node.children[0]) - lower_sequence(node.children[1]);
    case K::kMultiply:
      return lower_sequence(node.children[0]) * lower_sequence(node.children[1]);
    case K::kDivide: {
      const PolyRat num = lower_sequence(node.children[0]);
      const PolyRat den = lower_sequence(node.children[1]);
      if (den.is_zero()) throw ZeroDenominatorError(node.position);
      return num / den;
    }
    case K::kPower: {
      const PolyRat base = lower_sequence(node.children[0]);
      const unsigned long k = exponent_of(node);
      // Square-and-multiply keeps intermediate gcds small.
      PolyRat result(Rational(1));
      PolyRat square = base;
      for (unsigned long e = k; e; e >>= 1) {
        if (e & 1) result *= square;
        if (e > 1) square *= square;
      }
      return result;
    }
  }
  throw SyntaxError("malformed expression", node.position);
}

ConstantExpr lower_constant(const ExprNode& node) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::kInteger:
      return {0, Rational(node.value)};
    case K::kVariable:
      throw VariableNotAllowedError(node.position);
    case K::kPi:
      return {1, 0};
    case K::kNegate: {
      const ConstantExpr x = lower_constant(node.children[0]);
      return {-x.pi_coeff, -x.offset};
    }
    case K::kAdd:
    case K::kSubtract: {
      const ConstantExpr x = lower_constant(node.children[0]);
      const ConstantExpr y = lower_constant(node.children[1]);
      if (node.kind == K::kAdd) return {x.pi_coeff + y.pi_coeff, x.offset + y.offset};
      return {x.pi_coeff - y.pi_coeff, x.offset - y.offset};
    }
    case K::kMultiply: {
      const ConstantExpr x = lower_constant(node.children[0]);
      const ConstantExpr y = lower_constant(node.children[1]);
      if (!x.pi_coeff.is_zero() && !y.pi_coeff.is_zero()) {
        throw NonAffinePiError(node.position);
      }
      return {x.pi_coeff * y.offset + y.pi_coeff * x.offset, x.offset * y.offset};
    }
    case K::kDivide: {
      const ConstantExpr x = lower_constant(node.children[0]);
      const ConstantExpr y = lower_constant(node.children[1]);
      if (!y.pi_coeff.is_zero()) throw NonAffinePiError(node.position);
      if (y.offset.is_zero()) throw ZeroDenominatorError(node.position);
      return {x.pi_coeff / y.offset, x.offset / y.offset};
    }
    case K::kPower: {
      const ConstantExpr x = lower_constant(node.children[0]);
      const unsigned long k = exponent_of(node);
      if (k == 0) return {0, 1};
      if (k == 1) return x;
      if (!x.pi_coeff.is_zero()) throw NonAffinePiError(node.position);
      return {0, x.offset.pow(static_cast<long>(k))};
    }
  }
  throw SyntaxError("malformed expression", node.position);
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "n";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace

ExprNode parse_expr_ast(std::string_view text) { return Parser(text).parse(); }

PolyRat parse_sequence_expr(std::string_view text) {
  return lower_sequence(parse_expr_ast(text));
}

ConstantExpr parse_constant_expr(std::string_view text) {
  return lower_constant(parse_expr_ast(text));
}

std::string print_expr(const PolyRat& p) {
  if (p.den() == Polynomial(Rational(1))) return print_polynomial(p.num());
  if (p.is_constant()) return p.eval(0).str();
  std::string out = "(" + print_polynomial(p.num()) + ")/";
  if (p.den().is_constant()) return out + print_polynomial(p.den());
  return out + "(" + print_polynomial(p.den()) + ")";
}

}  // namespace cfkit
