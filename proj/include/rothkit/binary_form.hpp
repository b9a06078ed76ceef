#pragma once

// Homogeneous polynomials in x0, x1 over Q.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace rothkit {

class BinaryForm {
 public:
  /// The zero form.
  BinaryForm() = default;
  /// sum_k coeffs[k] x0^{degree-k} x1^k; coeffs.size() must be degree + 1.
  BinaryForm(int degree, std::vector<mpq_class> coeffs);

  static BinaryForm monomial(int x0_exp, int x1_exp, const mpq_class& c = 1);
  static BinaryForm constant(const mpq_class& c) { return monomial(0, 0, c); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of a nonzero form.
  int degree() const noexcept { return degree_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  bool is_nonzero_constant() const noexcept { return !is_zero() && degree_ == 0; }

  BinaryForm operator-() const;
  /// Throws DomainError when both sides are nonzero of different degree.
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

  mpq_class evaluate(const mpq_class& x0, const mpq_class& x1) const;

  bool operator==(const BinaryForm& other) const;

  std::string to_string() const;

 private:
  void normalize();

  int degree_ = 0;
  std::vector<mpq_class> coeffs_;  // empty iff zero
};

/// Monic (in the leading nonzero coefficient of x1-powers) greatest common
/// divisor. gcd(0, 0) = 0.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

}  // namespace rothkit
