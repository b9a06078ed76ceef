#include "rothkit/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rothkit/error.hpp"

namespace rothkit {

BundleContext::BundleContext(Twists twists) : twists_(std::move(twists)) {
  if (twists_.size() < 2) throw DomainError("bundle needs rank >= 2");
  for (auto e : twists_)
    if (e < 0) throw DomainError("bundle twists must be non-negative");
  std::sort(twists_.begin(), twists_.end());
  c1_ = std::accumulate(twists_.begin(), twists_.end(), std::int64_t{0});
}

mpz_class CohomologyTable::euler_characteristic() const {
  mpz_class chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0) ? h[i] : mpz_class(-h[i]);
  return chi;
}

std::string CohomologyTable::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) os << ' ';
    os << "h^" << i << '=' << h[i].get_str();
  }
  return os.str();
}

std::vector<mpz_class> symmetric_power_weights(const BundleContext& ctx, std::int64_t a) {
  if (a < 0) throw DomainError("symmetric power of negative degree");
  const auto ua = static_cast<std::size_t>(a);
  const auto max_w = static_cast<std::size_t>(a * ctx.twists().back());
  // ways[j][w]: monomials of degree j and weight w using the summands seen so far
  std::vector<std::vector<mpz_class>> ways(ua + 1, std::vector<mpz_class>(max_w + 1));
  ways[0][0] = 1;
  for (auto e : ctx.twists()) {
    const auto ue = static_cast<std::size_t>(e);
    for (std::size_t j = 1; j <= ua; ++j)
      for (std::size_t w = ue; w <= max_w; ++w)
        if (ways[j - 1][w - ue] != 0) ways[j][w] += ways[j - 1][w - ue];
  }
  return ways[ua];
}

namespace {

CohomologyTable direct_image_cohomology(const BundleContext& ctx, std::int64_t a, std::int64_t b) {
  CohomologyTable t;
  t.h.assign(static_cast<std::size_t>(ctx.rank()) + 1, 0);
  const auto weights = symmetric_power_weights(ctx, a);
  for (std::size_t w = 0; w < weights.size(); ++w) {
    if (weights[w] == 0) continue;
    const std::int64_t deg = static_cast<std::int64_t>(w) + b;  // O(w + b) on P^1
    if (deg >= 0) t.h[0] += weights[w] * (deg + 1);
    if (deg <= -2) t.h[1] += weights[w] * (-deg - 1);
  }
  return t;
}

}  // namespace

CohomologyTable line_bundle_cohomology(const BundleContext& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t r = ctx.rank();
  if (a >= 0) return direct_image_cohomology(ctx, a, b);
  if (a > -r) {
    CohomologyTable t;
    t.h.assign(static_cast<std::size_t>(r) + 1, 0);
    return t;
  }
  const CohomologyTable dual = direct_image_cohomology(ctx, -r - a, ctx.c1() - 2 - b);
  CohomologyTable t;
  t.h.assign(static_cast<std::size_t>(r) + 1, 0);
  for (std::int64_t i = 0; i <= r; ++i)
    t.h[static_cast<std::size_t>(i)] = dual.h[static_cast<std::size_t>(r - i)];
  return t;
}

mpz_class scroll_hilbert_function(const BundleContext& ctx, std::int64_t k) {
  if (k < 0) throw DomainError("Hilbert function needs k >= 0");
  return line_bundle_cohomology(ctx, k, 0).h[0];
}

HilbertPoly::HilbertPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertPoly HilbertPoly::projective_space(int m) {
  if (m < 0) throw DomainError("projective space of negative dimension");
  HilbertPoly p({mpq_class(1)});
  mpz_class fact = 1;
  for (int i = 1; i <= m; ++i) {
    p = p * HilbertPoly({mpq_class(i), mpq_class(1)});
    fact *= i;
  }
  for (auto& c : p.coeffs_) c /= fact;
  return p;
}

mpq_class HilbertPoly::evaluate(const mpz_class& k) const {
  mpq_class v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * k + *it;
  return v;
}

mpz_class HilbertPoly::degree() const {
  if (coeffs_.empty()) return 0;
  mpq_class lead = coeffs_.back();
  for (int i = 2; i <= dimension(); ++i) lead *= i;
  lead.canonicalize();
  if (lead.get_den() != 1) throw DomainError("Hilbert polynomial has non-integral degree");
  return lead.get_num();
}

bool HilbertPoly::integer_valued() const {
  for (int k = 0; k <= std::max(0, dimension()); ++k) {
    mpq_class v = evaluate(k);
    v.canonicalize();
    if (v.get_den() != 1) return false;
  }
  return true;
}

HilbertPoly operator*(const HilbertPoly& a, const HilbertPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return HilbertPoly(std::move(c));
}

std::string HilbertPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = dimension(); i >= 0; --i) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const mpq_class mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'k';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

HilbertPoly product_hilbert(const HilbertPoly& pa, const HilbertPoly& pb) { return pa * pb; }

mpz_class product_degree(int dim_a, const mpz_class& deg_a, int dim_b, const mpz_class& deg_b) {
  if (dim_a < 0 || dim_b < 0) throw DomainError("negative dimension");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(dim_a + dim_b),
               static_cast<unsigned long>(dim_b));
  return binom * deg_a * deg_b;
}

mpz_class plane_curve_h1(std::int64_t d_a, std::int64_t k) {
  if (d_a < 1) throw DomainError("plane curve degree must be >= 1");
  const std::int64_t top = d_a - k - 1;
  if (top < 2) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), 2UL);
  return out;
}

std::vector<std::int64_t> harris_counterexample_search(std::int64_t n, std::int64_t d_max) {
  if (n < 2) throw DomainError("the product construction needs n >= 2");
  std::vector<std::int64_t> out;
  const std::int64_t codim = 2 * n - 1;  // X = A x P^{n-1} in P^{3n-1}
  for (std::int64_t d_a = 1; d_a <= d_max; ++d_a) {
    const std::int64_t threshold = (n * d_a - 1) / codim;
    // h^1(O_X(k)) = h^1(A, O_A(k)) h^0(P^{n-1}, O(k)); the first factor is
    // zero once k >= d_a - 2.
    for (std::int64_t k = threshold + 1; k <= d_a; ++k) {
      mpz_class h0_proj;
      mpz_bin_uiui(h0_proj.get_mpz_t(), static_cast<unsigned long>(k + n - 1),
                   static_cast<unsigned long>(n - 1));
      if (plane_curve_h1(d_a, k) * h0_proj != 0) {
        out.push_back(d_a);
        break;
      }
    }
  }
  return out;
}

std::int64_t curve_vanishing_threshold(std::int64_t d, std::int64_t N) {
  if (N < 2) throw DomainError("curve vanishing threshold needs N >= 2");
  if (d < 1) throw DomainError("degree must be >= 1");
  return (d - 1) / (N - 1);
}

}  // namespace rothkit
