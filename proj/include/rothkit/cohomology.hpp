#pragma once

// Line bundle cohomology on P(E*) -> P^1 for split E, Hilbert functions of
// scrolls, and Hilbert polynomials of Segre products.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rothkit/scrolls.hpp"

namespace rothkit {

class BundleContext {
 public:
  /// E = O(e_1) + ... + O(e_r), r >= 2, e_i >= 0.
  explicit BundleContext(Twists twists);

  const Twists& twists() const noexcept { return twists_; }
  int rank() const noexcept { return static_cast<int>(twists_.size()); }
  std::int64_t c1() const noexcept { return c1_; }

 private:
  Twists twists_;
  std::int64_t c1_;
};

struct CohomologyTable {
  std::vector<mpz_class> h;  // h[i] = dim H^i, i = 0..r

  mpz_class euler_characteristic() const;
  /// `h^0=6 h^1=0 h^2=0 h^3=0`
  std::string to_string() const;
  bool operator==(const CohomologyTable&) const = default;
};

/// Number of degree-`a` monomials in the summands of E, bucketed by weight:
/// result[w] = #{monomials of Sym^a E with twist w}.
std::vector<mpz_class> symmetric_power_weights(const BundleContext& ctx, std::int64_t a);

/// h^i(O(aH + bF)). Uses the direct image Sym^a E (x) O(b) for a >= 0,
/// vanishing for -r < a < 0, and Serre duality with K = -rH + (c1-2)F for
/// a <= -r.
CohomologyTable line_bundle_cohomology(const BundleContext& ctx, std::int64_t a, std::int64_t b);

/// h^0(O(kH)), k >= 0.
mpz_class scroll_hilbert_function(const BundleContext& ctx, std::int64_t k);

/// Polynomial in k with rational coefficients, coeffs[i] multiplies k^i.
class HilbertPoly {
 public:
  HilbertPoly() = default;
  explicit HilbertPoly(std::vector<mpq_class> coeffs);

  /// Hilbert polynomial of P^m: C(k + m, m).
  static HilbertPoly projective_space(int m);

  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  int dimension() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class evaluate(const mpz_class& k) const;
  /// Leading coefficient times dim!.
  mpz_class degree() const;
  /// Checks integrality at k = 0..dim, which is enough for a numerical polynomial.
  bool integer_valued() const;

  friend HilbertPoly operator*(const HilbertPoly& a, const HilbertPoly& b);
  bool operator==(const HilbertPoly&) const = default;
  std::string to_string() const;

 private:
  std::vector<mpq_class> coeffs_;
};

HilbertPoly product_hilbert(const HilbertPoly& pa, const HilbertPoly& pb);

/// deg(A x B) = C(dim A + dim B, dim B) deg A deg B under the Segre embedding.
mpz_class product_degree(int dim_a, const mpz_class& deg_a, int dim_b, const mpz_class& deg_b);

/// h^1(A, O_A(k)) for a smooth plane curve A of degree d_a:
/// h^2(P^2, O(k - d_a)) = C(d_a - k - 1, 2).
mpz_class plane_curve_h1(std::int64_t d_a, std::int64_t k);

/// Plane curve degrees d_a <= d_max for which X = A x P^{n-1} in P^{3n-1}
/// has h^1(O_X(k)) != 0 at some k > floor((d-1)/(N-n)), d = n d_a.
std::vector<std::int64_t> harris_counterexample_search(std::int64_t n, std::int64_t d_max);

/// floor((d-1)/(N-1)); h^1(O_X(k)) = 0 for every k above it on a
/// nondegenerate curve of degree d in P^N.
std::int64_t curve_vanishing_threshold(std::int64_t d, std::int64_t N);

}  // namespace rothkit
