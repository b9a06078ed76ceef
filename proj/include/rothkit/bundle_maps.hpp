#pragma once

// Maps between split bundles O(a_1) + ... + O(a_n) -> O(b_1) + ... + O(b_m)
// on P^1. Such a map is an m x n matrix whose (i, j) entry is a binary form
// of degree b_i - a_j; it is surjective iff the matrix has rank m at every
// point of P^1.

#include <cstdint>
#include <string>
#include <vector>

#include "rothkit/binary_form.hpp"
#include "rothkit/scrolls.hpp"

namespace rothkit {

class BundleMapSpec {
 public:
  /// Both tuples are sorted ascending; each needs at least one entry.
  BundleMapSpec(Twists source, Twists target);

  const Twists& source() const noexcept { return source_; }
  const Twists& target() const noexcept { return target_; }

 private:
  Twists source_;
  Twists target_;
};

/// Existence of a surjection source -> target. Sorted a, b must satisfy
/// m <= n and, for each i, b_i >= a_i and, if (a_1..a_i) != (b_1..b_i),
/// also b_i >= a_{i+1} (false when i = n).
bool surjection_exists(const BundleMapSpec& spec);

struct Monomial {
  bool zero = true;
  int x0_exp = 0;
  int x1_exp = 0;

  static Monomial x0(int e) { return {false, e, 0}; }
  static Monomial x1(int e) { return {false, 0, e}; }

  /// `0`, `1`, `x0^3`, `x1^2`
  std::string to_string() const;
  BinaryForm to_form() const;
  bool operator==(const Monomial&) const = default;
};

/// The explicit matrix T with T(i,i) = x0^{b_i-a_i} and
/// T(i,i+1) = x1^{b_i-a_{i+1}} when b_i >= a_{i+1}.
class WitnessMatrix {
 public:
  WitnessMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Monomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Monomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Rows of whitespace-separated monomials, one row per line.
  std::string to_string() const;
  std::vector<std::vector<std::string>> to_grid() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Monomial> entries_;
};

WitnessMatrix witness_matrix(const BundleMapSpec& spec);

/// Row-major matrix of binary forms.
using FormMatrix = std::vector<std::vector<BinaryForm>>;

FormMatrix to_form_matrix(const WitnessMatrix& t);

/// Determinant of a square matrix by cofactor expansion (skips zeros).
BinaryForm determinant(const FormMatrix& square);

/// gcd of all maximal minors; a nonzero constant iff full rank everywhere.
BinaryForm maximal_minor_gcd(const FormMatrix& t);

/// True iff the m x n matrix has rank m at every point of P^1. Throws
/// DomainError when m > n.
bool verify_full_rank(const FormMatrix& t);
bool verify_full_rank(const WitnessMatrix& t);

}  // namespace rothkit
