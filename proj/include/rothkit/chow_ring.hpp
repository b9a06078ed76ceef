#pragma once

// Chow ring of the projectivized split bundle P(E*) -> P^1 of rank r:
//
//   A = Z[H, F] / (F^2, H^r - d_S H^{r-1} F),   deg(H^{r-1} F) = 1.
//
// H is the tautological class, F the class of a fiber, d_S = c1(E).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rothkit {

class ChowContext {
 public:
  /// Ring with only the twist sum known.
  ChowContext(int rank, std::int64_t twist_sum);
  /// Ring of P(E*) for E = O(twists[0]) + ... + O(twists[r-1]).
  explicit ChowContext(std::vector<std::int64_t> twists);

  /// Context of the desingularized Roth scroll S_{0,0,a_1,...,a_{n-1}}.
  static ChowContext roth_scroll(const std::vector<std::int64_t>& positive_twists);

  int rank() const noexcept { return rank_; }
  /// n = r - 1; the fibres over P^1 are P^n.
  int n() const noexcept { return rank_ - 1; }
  std::int64_t twist_sum() const noexcept { return twist_sum_; }
  const std::optional<std::vector<std::int64_t>>& twists() const noexcept { return twists_; }

  bool operator==(const ChowContext& other) const noexcept {
    return rank_ == other.rank_ && twist_sum_ == other.twist_sum_;
  }

 private:
  int rank_;
  std::int64_t twist_sum_;
  std::optional<std::vector<std::int64_t>> twists_;
};

/// Element of the Chow ring stored over the basis H^i F^j, 0 <= i < r,
/// j in {0, 1}. Always kept in normal form.
class ChowClass {
 public:
  explicit ChowClass(const ChowContext& ctx);

  static ChowClass zero(const ChowContext& ctx) { return ChowClass(ctx); }
  static ChowClass one(const ChowContext& ctx) { return constant(ctx, 1); }
  static ChowClass constant(const ChowContext& ctx, const mpz_class& c);
  static ChowClass h(const ChowContext& ctx) { return monomial(ctx, 1, 0); }
  static ChowClass f(const ChowContext& ctx) { return monomial(ctx, 0, 1); }
  /// c * H^h_exp * F^f_exp, reduced. Exponents may exceed the basis range.
  static ChowClass monomial(const ChowContext& ctx, int h_exp, int f_exp,
                            const mpz_class& c = 1);

  const ChowContext& context() const noexcept { return ctx_; }

  /// Coefficient of H^i F^j (zero outside the basis range).
  mpz_class coeff(int i, int j) const;

  bool is_zero() const;
  /// True when all nonzero terms share one codimension (zero counts).
  bool is_homogeneous() const;
  /// Codimension of a nonzero homogeneous class.
  std::optional<int> codimension() const;
  /// The part of codimension `c`.
  ChowClass graded_part(int c) const;

  ChowClass operator-() const;
  ChowClass& operator+=(const ChowClass& rhs);
  ChowClass& operator-=(const ChowClass& rhs);
  ChowClass& operator*=(const ChowClass& rhs);
  ChowClass& operator*=(const mpz_class& c);

  friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
  friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
  friend ChowClass operator*(ChowClass lhs, const ChowClass& rhs) { return lhs *= rhs; }
  friend ChowClass operator*(const mpz_class& c, ChowClass rhs) { return rhs *= c; }
  friend ChowClass operator*(ChowClass lhs, const mpz_class& c) { return lhs *= c; }

  ChowClass pow(unsigned long e) const;

  bool operator==(const ChowClass& other) const;

  /// Expression syntax, highest codimension first, e.g. `H^2 - 3*H*F`.
  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(2 * i + j); }
  void check_same_context(const ChowClass& other) const;

  ChowContext ctx_;
  std::vector<mpz_class> coeffs_;  // size 2r, index 2i + j
};

ChowClass add(const ChowClass& x, const ChowClass& y);
ChowClass mul(const ChowClass& x, const ChowClass& y);

/// Degree of a zero-cycle: the H^{r-1} F coefficient. Throws DomainError if
/// any part of lower codimension is nonzero.
mpz_class degree(const ChowClass& x);

/// The classes with geometric meaning on the desingularized scroll. Classes
/// tagged with a `b` describe X~ in |bH + F|.
enum class NamedTag { K, XTilde, PL, B, C, CX };

struct NamedClass {
  NamedTag tag;
  std::optional<std::int64_t> b;  // required for XTilde and CX
};

ChowClass expand_named(const NamedClass& named, const ChowContext& ctx);

/// Convenience wrappers.
ChowClass canonical_class(const ChowContext& ctx);
ChowClass xtilde_class(const ChowContext& ctx, std::int64_t b);
ChowClass double_point_class(const ChowContext& ctx, std::int64_t b);

}  // namespace rothkit
