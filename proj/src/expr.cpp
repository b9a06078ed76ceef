#include "rothkit/expr.hpp"

#include <cctype>

#include "rothkit/error.hpp"

namespace rothkit::expr {

std::optional<Symbol> symbol_from_name(std::string_view name) {
  if (name == "H") return Symbol::H;
  if (name == "F") return Symbol::F;
  if (name == "K") return Symbol::K;
  if (name == "X") return Symbol::X;
  if (name == "PL") return Symbol::PL;
  if (name == "B") return Symbol::B;
  if (name == "C") return Symbol::C;
  if (name == "CX") return Symbol::CX;
  return std::nullopt;
}

std::string symbol_name(Symbol s) {
  switch (s) {
    case Symbol::H: return "H";
    case Symbol::F: return "F";
    case Symbol::K: return "K";
    case Symbol::X: return "X";
    case Symbol::PL: return "PL";
    case Symbol::B: return "B";
    case Symbol::C: return "C";
    case Symbol::CX: return "CX";
  }
  return "?";
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) { advance(); }

  NodePtr parse_all() {
    NodePtr e = parse_expr();
    if (cur_.kind != Tok::End) fail("unexpected token");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    if (cur_.kind == Tok::End)
      throw ParseError(cur_.offset, "", "syntax error at end of input: " + what);
    throw ParseError(cur_.offset, cur_.text,
                     "syntax error at offset " + std::to_string(cur_.offset) + " near '" +
                         cur_.text + "': " + what);
  }

  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == input_.size()) {
      cur_ = {Tok::End, "", start};
      return;
    }
    const char c = input_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      cur_ = {Tok::Int, std::string(input_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < input_.size() && std::isalnum(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      cur_ = {Tok::Ident, std::string(input_.substr(start, pos_ - start)), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': cur_ = {Tok::Plus, "+", start}; return;
      case '-': cur_ = {Tok::Minus, "-", start}; return;
      case '*': cur_ = {Tok::Star, "*", start}; return;
      case '^': cur_ = {Tok::Caret, "^", start}; return;
      case '(': cur_ = {Tok::LParen, "(", start}; return;
      case ')': cur_ = {Tok::RParen, ")", start}; return;
      default:
        cur_ = {Tok::End, std::string(1, c), start};
        throw ParseError(start, cur_.text,
                         "syntax error at offset " + std::to_string(start) +
                             ": unexpected character '" + cur_.text + "'");
    }
  }

  static NodePtr make(auto&& v) { return std::make_shared<const Node>(Node{std::forward<decltype(v)>(v)}); }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const BinaryOp op = cur_.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      advance();
      lhs = make(Binary{op, lhs, parse_term()});
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (cur_.kind == Tok::Star) {
      advance();
      lhs = make(Binary{BinaryOp::Mul, lhs, parse_factor()});
    }
    return lhs;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_atom();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    if (cur_.kind != Tok::Int) fail("expected a non-negative integer exponent");
    const mpz_class e(cur_.text);
    if (!e.fits_ulong_p()) fail("exponent too large");
    advance();
    return make(Power{base, e.get_ui()});
  }

  NodePtr parse_atom() {
    switch (cur_.kind) {
      case Tok::Int: {
        NodePtr n = make(Literal{mpz_class(cur_.text)});
        advance();
        return n;
      }
      case Tok::Ident: {
        const auto sym = symbol_from_name(cur_.text);
        if (!sym)
          throw ParseError(cur_.offset, cur_.text,
                           "unknown symbol '" + cur_.text + "' at offset " +
                               std::to_string(cur_.offset) + " (known: H F K X PL B C CX)");
        advance();
        return make(SymbolRef{*sym});
      }
      case Tok::LParen: {
        advance();
        NodePtr e = parse_expr();
        if (cur_.kind != Tok::RParen) fail("expected ')'");
        advance();
        return e;
      }
      case Tok::Minus:
        advance();
        return make(Negate{parse_atom()});
      default:
        fail("expected an integer, a symbol, '(' or '-'");
    }
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, "", 0};
};

// Printing levels: 0 = expr, 1 = term, 2 = factor, 3 = atom.
int level(const Node& n) {
  if (const auto* b = std::get_if<Binary>(&n.value)) return b->op == BinaryOp::Mul ? 1 : 0;
  if (std::holds_alternative<Power>(n.value)) return 2;
  return 3;
}

std::string print_at(const Node& n, int min_level) {
  std::string s = print(n);
  return level(n) >= min_level ? s : "(" + s + ")";
}

}  // namespace

NodePtr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string print(const Node& node) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return v.value.get_str();
        } else if constexpr (std::is_same_v<T, SymbolRef>) {
          return symbol_name(v.symbol);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "-" + print_at(*v.operand, 3);
        } else if constexpr (std::is_same_v<T, Power>) {
          return print_at(*v.base, 3) + "^" + std::to_string(v.exponent);
        } else {
          switch (v.op) {
            case BinaryOp::Add: return print_at(*v.lhs, 0) + " + " + print_at(*v.rhs, 1);
            case BinaryOp::Sub: return print_at(*v.lhs, 0) + " - " + print_at(*v.rhs, 1);
            case BinaryOp::Mul: return print_at(*v.lhs, 1) + "*" + print_at(*v.rhs, 2);
          }
          return "";
        }
      },
      node.value);
}

bool equal(const Node& a, const Node& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        const auto& vb = std::get<T>(b.value);
        if constexpr (std::is_same_v<T, Literal>) {
          return va.value == vb.value;
        } else if constexpr (std::is_same_v<T, SymbolRef>) {
          return va.symbol == vb.symbol;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return equal(*va.operand, *vb.operand);
        } else if constexpr (std::is_same_v<T, Power>) {
          return va.exponent == vb.exponent && equal(*va.base, *vb.base);
        } else {
          return va.op == vb.op && equal(*va.lhs, *vb.lhs) && equal(*va.rhs, *vb.rhs);
        }
      },
      a.value);
}

namespace {

ChowClass evaluate_symbol(Symbol s, const ChowContext& ctx, std::optional<std::int64_t> b) {
  switch (s) {
    case Symbol::H: return ChowClass::h(ctx);
    case Symbol::F: return ChowClass::f(ctx);
    case Symbol::K: return expand_named({NamedTag::K, b}, ctx);
    case Symbol::X:
      if (!b) throw DomainError("symbol X needs --b");
      return expand_named({NamedTag::XTilde, b}, ctx);
    case Symbol::CX:
      if (!b) throw DomainError("symbol CX needs --b");
      return expand_named({NamedTag::CX, b}, ctx);
    case Symbol::PL: return expand_named({NamedTag::PL, b}, ctx);
    case Symbol::B: return expand_named({NamedTag::B, b}, ctx);
    case Symbol::C: return expand_named({NamedTag::C, b}, ctx);
  }
  throw DomainError("unknown symbol");
}

}  // namespace

ChowClass evaluate(const Node& node, const ChowContext& ctx, std::optional<std::int64_t> b) {
  return std::visit(
      [&](const auto& v) -> ChowClass {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return ChowClass::constant(ctx, v.value);
        } else if constexpr (std::is_same_v<T, SymbolRef>) {
          return evaluate_symbol(v.symbol, ctx, b);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -evaluate(*v.operand, ctx, b);
        } else if constexpr (std::is_same_v<T, Power>) {
          return evaluate(*v.base, ctx, b).pow(v.exponent);
        } else {
          ChowClass lhs = evaluate(*v.lhs, ctx, b);
          ChowClass rhs = evaluate(*v.rhs, ctx, b);
          switch (v.op) {
            case BinaryOp::Add: return lhs + rhs;
            case BinaryOp::Sub: return lhs - rhs;
            case BinaryOp::Mul: return lhs * rhs;
          }
          throw DomainError("unknown operator");
        }
      },
      node.value);
}

}  // namespace rothkit::expr
