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

#ifndef CFKIT_EXPR_PARSER_HPP_
#define CFKIT_EXPR_PARSER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cfkit/constants.hpp"
#include "cfkit/polynomial.hpp"

namespace cfkit {

// Syntax tree of an expression over integers, the index n and pi.
struct ExprNode {
  enum class Kind {
    kInteger,   // value
    kVariable,  // n
    kPi,
    kNegate,    // -children[0]
    kAdd,
    kSubtract,
    kMultiply,
    kDivide,
    kPower,     // children[0] ^ value, value >= 0
  };
  Kind kind = Kind::kInteger;
  BigInt value;
  std::vector<ExprNode> children;
  std::size_t position = 0;  // byte offset of the token that produced the node
};

// Grammar (whitespace is insignificant):
//
//   expr    = term , { ("+" | "-") , term } ;
//   term    = unary , { ("*" | "/") , unary } ;
//   unary   = "-" , unary | power ;
//   power   = primary , { "^" , integer } ;
//   primary = integer | "n" | "pi" | "(" , expr , ")" ;
//
// Binary operators are left associative. Juxtaposition ("2n") is rejected.
// Throws SyntaxError with the byte offset and the expected token classes.
ExprNode parse_expr_ast(std::string_view text);

// Rational function of n in canonical form. Throws SyntaxError,
// PiNotAllowedError, or ZeroDenominatorError.
PolyRat parse_sequence_expr(std::string_view text);

// pi_coeff * pi + offset. Throws SyntaxError, VariableNotAllowedError,
// NonAffinePiError, or ZeroDenominatorError.
ConstantExpr parse_constant_expr(std::string_view text);

// Canonical text that parse_sequence_expr maps back to p, e.g.
// "n^2 - 2*n + 1", "(n^2)/(4*n^2 - 1)", "5/3".
std::string print_expr(const PolyRat& p);

}  // namespace cfkit

#endif  // CFKIT_EXPR_PARSER_HPP_
