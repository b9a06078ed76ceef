#include "rothkit/chow_ring.hpp"

#include <numeric>
#include <sstream>

#include "rothkit/error.hpp"

namespace rothkit {

ChowContext::ChowContext(int rank, std::int64_t twist_sum) : rank_(rank), twist_sum_(twist_sum) {
  if (rank < 2) throw DomainError("Chow context needs rank >= 2");
  if (twist_sum < 0) throw DomainError("Chow context needs a non-negative twist sum");
}

ChowContext::ChowContext(std::vector<std::int64_t> twists)
    : ChowContext(static_cast<int>(twists.size()),
                  std::accumulate(twists.begin(), twists.end(), std::int64_t{0})) {
  for (auto t : twists)
    if (t < 0) throw DomainError("bundle twists must be non-negative");
  twists_ = std::move(twists);
}

ChowContext ChowContext::roth_scroll(const std::vector<std::int64_t>& positive_twists) {
  std::vector<std::int64_t> twists{0, 0};
  twists.insert(twists.end(), positive_twists.begin(), positive_twists.end());
  return ChowContext(std::move(twists));
}

ChowClass::ChowClass(const ChowContext& ctx)
    : ctx_(ctx), coeffs_(static_cast<std::size_t>(2 * ctx.rank())) {}

ChowClass ChowClass::constant(const ChowContext& ctx, const mpz_class& c) {
  return monomial(ctx, 0, 0, c);
}

ChowClass ChowClass::monomial(const ChowContext& ctx, int h_exp, int f_exp, const mpz_class& c) {
  if (h_exp < 0 || f_exp < 0) throw DomainError("negative exponent in Chow monomial");
  ChowClass out(ctx);
  const int r = ctx.rank();
  if (f_exp >= 2) return out;
  if (h_exp < r) {
    out.coeffs_[out.index(h_exp, f_exp)] = c;
  } else if (h_exp == r && f_exp == 0) {
    out.coeffs_[out.index(r - 1, 1)] = c * ctx.twist_sum();
  }
  return out;
}

mpz_class ChowClass::coeff(int i, int j) const {
  if (i < 0 || i >= ctx_.rank() || j < 0 || j > 1) return 0;
  return coeffs_[index(i, j)];
}

bool ChowClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<int> ChowClass::codimension() const {
  std::optional<int> codim;
  for (int i = 0; i < ctx_.rank(); ++i)
    for (int j = 0; j < 2; ++j) {
      if (coeffs_[index(i, j)] == 0) continue;
      if (codim && *codim != i + j) return std::nullopt;
      codim = i + j;
    }
  return codim;
}

bool ChowClass::is_homogeneous() const { return is_zero() || codimension().has_value(); }

ChowClass ChowClass::graded_part(int c) const {
  ChowClass out(ctx_);
  for (int i = 0; i < ctx_.rank(); ++i)
    for (int j = 0; j < 2; ++j)
      if (i + j == c) out.coeffs_[index(i, j)] = coeffs_[index(i, j)];
  return out;
}

void ChowClass::check_same_context(const ChowClass& other) const {
  if (!(ctx_ == other.ctx_))
    throw ContextMismatch("Chow classes belong to different rings");
}

ChowClass ChowClass::operator-() const {
  ChowClass out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
  check_same_context(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
  check_same_context(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

ChowClass& ChowClass::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& rhs) {
  check_same_context(rhs);
  const int r = ctx_.rank();
  ChowClass out(ctx_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < 2; ++j) {
      const mpz_class& a = coeffs_[index(i, j)];
      if (a == 0) continue;
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < 2 - j; ++l) {
          const mpz_class& c = rhs.coeffs_[index(k, l)];
          if (c == 0) continue;
          const int hi = i + k;
          const int fj = j + l;
          if (hi < r) {
            out.coeffs_[index(hi, fj)] += a * c;
          } else if (hi == r && fj == 0) {
            // H^r = d_S H^{r-1} F
            out.coeffs_[index(r - 1, 1)] += a * c * ctx_.twist_sum();
          }
        }
    }
  coeffs_ = std::move(out.coeffs_);
  return *this;
}

ChowClass ChowClass::pow(unsigned long e) const {
  ChowClass result = one(ctx_);
  ChowClass base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool ChowClass::operator==(const ChowClass& other) const {
  return ctx_ == other.ctx_ && coeffs_ == other.coeffs_;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int codim = ctx_.rank(); codim >= 0; --codim) {
    for (int i = std::min(codim, ctx_.rank() - 1); i >= 0; --i) {
      const int j = codim - i;
      if (j > 1) break;
      const mpz_class& c = coeffs_[index(i, j)];
      if (c == 0) continue;
      mpz_class mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      if (i == 1) mono = "H";
      if (i > 1) mono = "H^" + std::to_string(i);
      if (j == 1) mono += mono.empty() ? "F" : "*F";
      if (mono.empty()) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << '*';
        os << mono;
      }
    }
  }
  return first ? "0" : os.str();
}

ChowClass add(const ChowClass& x, const ChowClass& y) { return x + y; }
ChowClass mul(const ChowClass& x, const ChowClass& y) { return x * y; }

mpz_class degree(const ChowClass& x) {
  const int r = x.context().rank();
  if (!(x - x.graded_part(r)).is_zero())
    throw DomainError("degree is only defined on zero-cycles (codimension " + std::to_string(r) +
                      ")");
  return x.coeff(r - 1, 1);
}

ChowClass canonical_class(const ChowContext& ctx) {
  // K = -rH + (d_S - 2)F
  return ChowClass::monomial(ctx, 1, 0, -ctx.rank()) +
         ChowClass::monomial(ctx, 0, 1, ctx.twist_sum() - 2);
}

ChowClass xtilde_class(const ChowContext& ctx, std::int64_t b) {
  return ChowClass::monomial(ctx, 1, 0, mpz_class(static_cast<long>(b))) + ChowClass::f(ctx);
}

ChowClass double_point_class(const ChowContext& ctx, std::int64_t b) {
  // C_X = (d - n - 2)H - K - X~ with d = b d_S + 1
  const mpz_class d = mpz_class(static_cast<long>(b)) * ctx.twist_sum() + 1;
  const mpz_class coeff = d - ctx.n() - 2;
  return ChowClass::monomial(ctx, 1, 0, coeff) - canonical_class(ctx) - xtilde_class(ctx, b);
}

namespace {

void require_b(const NamedClass& named) {
  if (!named.b) throw DomainError("this class needs the divisor parameter b");
}

void require_rank3(const ChowContext& ctx) {
  if (ctx.rank() < 3) throw DomainError("PL, B and C need rank >= 3 (n >= 2)");
}

}  // namespace

ChowClass expand_named(const NamedClass& named, const ChowContext& ctx) {
  const int n = ctx.n();
  const mpz_class ds = static_cast<long>(ctx.twist_sum());
  switch (named.tag) {
    case NamedTag::K:
      return canonical_class(ctx);
    case NamedTag::XTilde:
      require_b(named);
      return xtilde_class(ctx, *named.b);
    case NamedTag::CX:
      require_b(named);
      return double_point_class(ctx, *named.b);
    case NamedTag::PL:
      require_rank3(ctx);
      return ChowClass::monomial(ctx, n - 1, 0) - ChowClass::monomial(ctx, n - 2, 1, ds);
    case NamedTag::B:
      require_rank3(ctx);
      return ChowClass::monomial(ctx, n - 1, 1);
    case NamedTag::C:
      require_rank3(ctx);
      return ChowClass::monomial(ctx, n, 0) - ChowClass::monomial(ctx, n - 1, 1, ds);
  }
  throw DomainError("unknown named class");
}

}  // namespace rothkit
