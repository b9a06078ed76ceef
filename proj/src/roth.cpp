#include "rothkit/roth.hpp"

#include <algorithm>
#include <numeric>

#include "rothkit/error.hpp"

namespace rothkit {

RothData::RothData(Twists a_list, std::int64_t b) : a_list_(std::move(a_list)), b_(b) {
  if (a_list_.empty()) throw DomainError("a Roth variety needs n >= 2, i.e. at least one twist a_i");
  for (auto a : a_list_)
    if (a < 1) throw DomainError("Roth scroll twists a_i must be >= 1");
  if (b_ < 1) throw DomainError("b must be a positive integer");
  std::sort(a_list_.begin(), a_list_.end());
  scroll_degree_ = std::accumulate(a_list_.begin(), a_list_.end(), std::int64_t{0});
  if (scroll_degree_ < 2) throw DomainError("Roth varieties need codimension N - n = sum a_i >= 2");
}

mpz_class sectional_genus(std::int64_t d, std::int64_t n, std::int64_t N) {
  const mpz_class codim = N - n;
  if (codim <= 0) throw DomainError("sectional genus needs N > n");
  mpq_class canon(mpz_class(mpz_class(d - 1) * mpz_class(d - (N - n + 1))), mpz_class(2 * codim));
  canon.canonicalize();
  if (canon.get_den() != 1) throw DomainError("sectional genus " + canon.get_str() + " is not an integer");
  return canon.get_num();
}

RothReport report(const RothData& data) {
  const std::int64_t n = data.n();
  const std::int64_t b = data.b();
  const std::int64_t ds = data.scroll_degree();
  const std::int64_t d = data.degree();
  const std::int64_t N = data.ambient_dim();

  RothReport r;
  r.n = n;
  r.b = b;
  r.a_list = data.a_list();
  r.d = d;
  r.N = N;
  r.sectional_genus = sectional_genus(d, n, N);
  r.double_point_h = d - b - 1;
  r.double_point_f = 1 - ds;
  r.cx_dot_l = 0;
  mpz_class base = d - b - 1;
  mpz_pow_ui(r.cx_top_power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  r.cx_top_power *= (d - n);
  for (auto a : data.a_list()) r.normal_bundle_twists.push_back(1 - b * a);
  r.normal_bundle_c1 = std::accumulate(r.normal_bundle_twists.begin(), r.normal_bundle_twists.end(),
                                       std::int64_t{0});
  const bool all_ones = std::all_of(data.a_list().begin(), data.a_list().end(),
                                    [](std::int64_t a) { return a == 1; });
  r.is_big = !(b == 1 && all_ones);
  r.is_castelnuovo = b >= n + 1;
  r.generic_curve_section_castelnuovo = b >= 2;
  r.is_rational_normal_scroll = b == 1;
  if (b == 1) {
    Twists t{1};
    t.insert(t.end(), data.a_list().begin(), data.a_list().end());
    r.scroll_type = ScrollSpec(std::move(t));
  }
  r.linearly_normal = true;
  r.projectively_normal = true;
  r.intermediate_cohomology_vanishes = true;
  r.adjoint_vanishing = true;
  r.section_through_l = {N - n, b};
  return r;
}

bool Verification::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return !c.applicable || c.passed; });
}

Verification verify_identities(const RothData& data) {
  const ChowContext ctx = data.chow_context();
  const int n = data.n();
  const std::int64_t b = data.b();
  const mpz_class bz = b;
  const mpz_class ds = data.scroll_degree();
  const mpz_class d = data.degree();

  const ChowClass h = ChowClass::h(ctx);
  const ChowClass x = xtilde_class(ctx, b);
  const ChowClass k = canonical_class(ctx);
  const ChowClass cx = double_point_class(ctx, b);
  const ChowClass pl = expand_named({NamedTag::PL, std::nullopt}, ctx);

  Verification v;
  auto push = [&](std::string name, bool applicable, mpz_class computed, mpz_class expected) {
    const bool ok = applicable && computed == expected;
    v.checks.push_back({std::move(name), applicable, ok, std::move(computed), std::move(expected)});
  };

  push("cx_dot_l", true, degree(cx * pl * x), 0);

  const mpz_class two_pi_minus_two =
      degree((k + x) * x * h.pow(n - 1)) + (n - 1) * degree(h.pow(n) * x);
  push("sectional_genus", true, two_pi_minus_two, bz * bz * ds - bz * ds - 2);

  mpz_class expected_top;
  const mpz_class base = d - bz - 1;
  mpz_pow_ui(expected_top.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  expected_top *= (d - n);
  push("cx_top_power", true, degree(cx.pow(n) * x), expected_top);

  if (n == 2)
    push("line_self_intersection", true, degree(pl * pl * x), 2 - d);
  else
    push("line_self_intersection", false, 0, 0);
  return v;
}

CastelnuovoParams castelnuovo_params(std::int64_t d, std::int64_t n, std::int64_t N) {
  if (d < 1) throw DomainError("degree must be >= 1");
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (N <= n) throw DomainError("Castelnuovo bound needs N > n");
  const std::int64_t codim = N - n;
  CastelnuovoParams p;
  p.m = (d - 1) / codim;
  p.epsilon = (d - 1) - p.m * codim;
  mpz_class c1, c2;
  mpz_bin_uiui(c1.get_mpz_t(), static_cast<unsigned long>(p.m), static_cast<unsigned long>(n + 1));
  mpz_bin_uiui(c2.get_mpz_t(), static_cast<unsigned long>(p.m), static_cast<unsigned long>(n));
  p.bound = c1 * codim + c2 * p.epsilon;
  return p;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::No:
      return "false";
    case Truth::Yes:
      return "true";
    case Truth::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

struct VerdictVisitor {
  AmplenessVerdict operator()(const CurveKind&) const {
    return {Truth::Yes, Truth::Yes, Truth::Yes, Truth::Yes, Truth::Yes};
  }
  AmplenessVerdict operator()(const SemiCanonicalKind&) const {
    return {Truth::Yes, Truth::Yes, Truth::Yes, Truth::Yes, Truth::Yes};
  }
  // C_X . L = 0, so |C_X| contracts the line.
  AmplenessVerdict operator()(const RothKind&) const {
    return {Truth::Yes, Truth::Yes, Truth::No, Truth::No, Truth::No};
  }
  AmplenessVerdict operator()(const RothProjectionKind&) const {
    return {Truth::Yes, Truth::Yes, Truth::No, Truth::No, Truth::No};
  }
  // Whether |C_X| also separates tangent directions here is open.
  AmplenessVerdict operator()(const GeneralNonRothKind&) const {
    return {Truth::Yes, Truth::Yes, Truth::Yes, Truth::Yes, Truth::Unknown};
  }
};

}  // namespace

AmplenessVerdict ampleness_verdict(const VarietyDescriptor& desc) {
  return std::visit(VerdictVisitor{}, desc);
}

}  // namespace rothkit
