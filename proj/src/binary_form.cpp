#include "rothkit/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "rothkit/error.hpp"

namespace rothkit {

BinaryForm::BinaryForm(int degree, std::vector<mpq_class> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw DomainError("binary form of negative degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw DomainError("binary form needs degree + 1 coefficients");
  normalize();
}

void BinaryForm::normalize() {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; })) {
    coeffs_.clear();
    degree_ = 0;
  }
}

BinaryForm BinaryForm::monomial(int x0_exp, int x1_exp, const mpq_class& c) {
  if (x0_exp < 0 || x1_exp < 0) throw DomainError("negative exponent in binary form");
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(x0_exp + x1_exp) + 1);
  coeffs[static_cast<std::size_t>(x1_exp)] = c;
  return BinaryForm(x0_exp + x1_exp, std::move(coeffs));
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_ != b.degree_) throw DomainError("sum of binary forms of different degrees");
  BinaryForm out(a);
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += b.coeffs_[k];
  out.normalize();
  return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(a.degree_ + b.degree_) + 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BinaryForm(a.degree_ + b.degree_, std::move(coeffs));
}

mpq_class BinaryForm::evaluate(const mpq_class& x0, const mpq_class& x1) const {
  mpq_class sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    mpq_class term = coeffs_[k];
    for (int e = 0; e < degree_ - static_cast<int>(k); ++e) term *= x0;
    for (std::size_t e = 0; e < k; ++e) term *= x1;
    sum += term;
  }
  return sum;
}

bool BinaryForm::operator==(const BinaryForm& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const int e0 = degree_ - static_cast<int>(k);
    const int e1 = static_cast<int>(k);
    const mpq_class mag = abs(c);
    std::string mono;
    if (e0 > 0) mono += "x0^" + std::to_string(e0);
    if (e1 > 0) mono += (mono.empty() ? "" : "*") + ("x1^" + std::to_string(e1));
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << mono;
    }
  }
  return os.str();
}

namespace {

// Dense univariate polynomial over Q, index = power of t.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    const mpq_class q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Multiplicity of the root [0:1], i.e. the power of x0 dividing f.
int x0_multiplicity(const BinaryForm& f) {
  const auto& c = f.coeffs();
  int top = static_cast<int>(c.size()) - 1;
  while (c[static_cast<std::size_t>(top)] == 0) --top;
  return f.degree() - top;
}

}  // namespace

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b.is_zero() ? BinaryForm{} : gcd(b, b);
  if (b.is_zero()) return gcd(a, a);
  // f(x0, x1) = x0^v * x0^{deg g} g(x1/x0); the gcd splits the same way.
  const int v = std::min(x0_multiplicity(a), x0_multiplicity(b));
  Poly g = poly_gcd(Poly(a.coeffs().begin(), a.coeffs().end()),
                    Poly(b.coeffs().begin(), b.coeffs().end()));
  const int dg = static_cast<int>(g.size()) - 1;
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(dg + v) + 1);
  for (int k = 0; k <= dg; ++k) coeffs[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k)];
  return BinaryForm(dg + v, std::move(coeffs));
}

}  // namespace rothkit
