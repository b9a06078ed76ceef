#pragma once

// Ring expressions over the Chow ring of the scroll:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := INT | SYMBOL | '(' expr ')' | '-' atom
//
// SYMBOL is one of H F K X PL B C CX.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "rothkit/chow_ring.hpp"

namespace rothkit::expr {

enum class Symbol { H, F, K, X, PL, B, C, CX };

std::optional<Symbol> symbol_from_name(std::string_view name);
std::string symbol_name(Symbol s);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Literal {
  mpz_class value;
};
struct SymbolRef {
  Symbol symbol;
};
struct Negate {
  NodePtr operand;
};
enum class BinaryOp { Add, Sub, Mul };
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Power {
  NodePtr base;
  unsigned long exponent;
};

struct Node {
  std::variant<Literal, SymbolRef, Negate, Binary, Power> value;
};

/// Structural equality.
bool equal(const Node& a, const Node& b);

/// Throws ParseError with the offending offset and token.
NodePtr parse(std::string_view input);

/// Minimal-parenthesis rendering that parses back to an equal tree.
std::string print(const Node& node);

/// Evaluates in the given ring. X and CX need `b`.
ChowClass evaluate(const Node& node, const ChowContext& ctx, std::optional<std::int64_t> b);

}  // namespace rothkit::expr
