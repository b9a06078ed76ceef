#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "rothkit/error.hpp"
#include "rothkit/roth.hpp"

using namespace rothkit;

namespace {

const IdentityCheck& find_check(const Verification& v, const std::string& name) {
  for (const auto& c : v.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return v.checks.front();
}

mpz_class binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

void all_a_lists(int len, std::int64_t max_a, Twists& cur, std::vector<Twists>& out) {
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = cur.empty() ? 1 : cur.back(); v <= max_a; ++v) {
    cur.push_back(v);
    all_a_lists(len - 1, max_a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("report: n=2, a=(3), b=2") {
  const RothReport r = report(RothData({3}, 2));
  CHECK(r.d == 7);
  CHECK(r.N == 5);
  CHECK(r.sectional_genus == 3);
  CHECK(r.double_point_h == 4);
  CHECK(r.double_point_f == -2);
  CHECK(r.cx_top_power == 80);
  CHECK(r.cx_dot_l == 0);
  CHECK(r.normal_bundle_twists == Twists{-5});
  CHECK(r.normal_bundle_c1 == -5);
  CHECK(r.is_big);
  CHECK_FALSE(r.is_castelnuovo);
  CHECK_FALSE(r.is_rational_normal_scroll);
  CHECK_FALSE(r.scroll_type.has_value());
  CHECK(r.projectively_normal);
  CHECK(r.section_through_l.curve_count == 3);
  CHECK(r.section_through_l.component_degree == 2);
}

TEST_CASE("report: n=3, a=(1,1), b=1 is the scroll S_1,1,1") {
  const RothReport r = report(RothData({1, 1}, 1));
  CHECK(r.d == 3);
  CHECK_FALSE(r.is_big);
  CHECK(r.is_rational_normal_scroll);
  REQUIRE(r.scroll_type.has_value());
  CHECK(r.scroll_type->twists() == Twists{1, 1, 1});
  CHECK(r.cx_top_power == 0);
}

TEST_CASE("report: n=2, a=(3), b=3") {
  const RothReport r = report(RothData({3}, 3));
  CHECK(r.d == 10);
  CHECK(r.sectional_genus == 9);
  CHECK(r.is_castelnuovo);
  const CastelnuovoParams c = castelnuovo_params(10, 1, 4);
  CHECK(c.bound == r.sectional_genus);
}

TEST_CASE("RothData validation") {
  CHECK_THROWS_AS(RothData({}, 2), DomainError);
  CHECK_THROWS_AS(RothData({1}, 2), DomainError);  // d_S = 1
  CHECK_THROWS_AS(RothData({0, 3}, 2), DomainError);
  CHECK_THROWS_AS(RothData({3}, 0), DomainError);
  CHECK_NOTHROW(RothData({2}, 1));
}

TEST_CASE("verify_identities") {
  {
    const Verification v = verify_identities(RothData({3}, 2));
    CHECK(v.all_passed());
    const auto& line = find_check(v, "line_self_intersection");
    CHECK(line.applicable);
    CHECK(line.computed == -5);
  }
  {
    const Verification v = verify_identities(RothData({1, 2, 3}, 5));
    CHECK(v.all_passed());
    CHECK(find_check(v, "cx_dot_l").passed);
    CHECK(find_check(v, "sectional_genus").passed);
    CHECK(find_check(v, "cx_top_power").passed);
    CHECK_FALSE(find_check(v, "line_self_intersection").applicable);
  }
  for (int n = 3; n <= 6; ++n) {
    const Verification v = verify_identities(RothData(Twists(static_cast<std::size_t>(n - 1), 1), 1));
    CHECK(v.all_passed());
    CHECK(find_check(v, "cx_top_power").computed == 0);
  }
}

TEST_CASE("closed forms against independent oracles") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Twists> lists;
    Twists cur;
    all_a_lists(n - 1, 4, cur, lists);
    for (const auto& a : lists) {
      const std::int64_t ds = std::accumulate(a.begin(), a.end(), std::int64_t{0});
      if (ds < 2) continue;
      for (std::int64_t b = 1; b <= 6; ++b) {
        const RothReport r = report(RothData(a, b));
        const std::int64_t d = b * ds + 1, N = ds + n;
        // genus from the rational formula
        mpq_class pi(mpz_class((d - 1) * (d - (N - n + 1))), mpz_class(2 * (N - n)));
        pi.canonicalize();
        CHECK(pi.get_den() == 1);
        CHECK(r.sectional_genus == pi.get_num());
        CHECK(r.sectional_genus >= 0);
        CHECK(2 * r.sectional_genus == b * b * ds - b * ds);

        // C_X^n . X~ by expanding the unreduced product
        const int rank = n + 1;
        oracle::FreePoly p = oracle::linear(b, 1);
        const oracle::FreePoly cx = oracle::linear(b * (ds - 1), 1 - ds);
        for (int k = 0; k < n; ++k) p = oracle::free_mul(p, cx);
        CHECK(oracle::free_degree(p, rank, ds) == r.cx_top_power);
        CHECK((r.cx_top_power <= 0) == (b == 1 && ds == n - 1));
        CHECK(r.is_big == !(b == 1 && ds == n - 1));

        std::int64_t sum = 0;
        for (auto t : r.normal_bundle_twists) sum += t;
        CHECK(sum == n - d);
        CHECK(r.normal_bundle_c1 == n - d);
        CHECK(r.cx_dot_l == 0);

        const CastelnuovoParams c = castelnuovo_params(d, n, N);
        CHECK(c.epsilon == 0);
        CHECK(c.m == b);
        CHECK(verify_identities(RothData(a, b)).all_passed());
      }
    }
  }
}

TEST_CASE("sectional_genus rejects non-integral values") {
  CHECK(sectional_genus(7, 2, 5) == 3);
  CHECK(sectional_genus(4, 1, 4) == 0);
  CHECK_THROWS_AS(sectional_genus(4, 1, 3), DomainError);  // 3/4
}

TEST_CASE("castelnuovo_params") {
  auto check = [](std::int64_t d, std::int64_t n, std::int64_t N, std::int64_t m, std::int64_t e, long bound) {
    const CastelnuovoParams c = castelnuovo_params(d, n, N);
    CHECK(c.m == m);
    CHECK(c.epsilon == e);
    CHECK(c.bound == bound);
  };
  check(10, 1, 4, 3, 0, 9);
  check(4, 1, 3, 1, 1, 1);
  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t N = n + 1; N <= n + 6; ++N) check(N - n + 1, n, N, 1, 0, 0);
  CHECK_THROWS_AS(castelnuovo_params(5, 3, 3), DomainError);
  // oracle over a grid
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t N = n + 1; N <= n + 5; ++N)
      for (std::int64_t d = 1; d <= 40; ++d) {
        const CastelnuovoParams c = castelnuovo_params(d, n, N);
        CHECK(d - 1 == c.m * (N - n) + c.epsilon);
        CHECK(c.epsilon >= 0);
        CHECK(c.epsilon < N - n);
        CHECK(c.bound == binom(c.m, n + 1) * (N - n) + binom(c.m, n) * c.epsilon);
      }
}

TEST_CASE("ampleness verdicts") {
  const RothData data({3}, 2);
  const AmplenessVerdict curve = ampleness_verdict(CurveKind{});
  CHECK(curve.base_point_free == Truth::Yes);
  CHECK(curve.nef == Truth::Yes);
  CHECK(curve.very_ample == Truth::Yes);
  const AmplenessVerdict semi = ampleness_verdict(SemiCanonicalKind{});
  CHECK(semi.very_ample == Truth::Yes);
  for (const AmplenessVerdict& v : {ampleness_verdict(RothKind{data}), ampleness_verdict(RothProjectionKind{data})}) {
    CHECK(v.base_point_free == Truth::Yes);
    CHECK(v.nef == Truth::Yes);
    CHECK(v.ample == Truth::No);
  }
  const AmplenessVerdict general = ampleness_verdict(GeneralNonRothKind{});
  CHECK(general.ample == Truth::Yes);
  CHECK(general.separates_points == Truth::Yes);
  CHECK(general.base_point_free == Truth::Yes);
  CHECK(to_string(Truth::Unknown) == "unknown");

  const std::vector<VarietyDescriptor> all = {CurveKind{}, SemiCanonicalKind{}, RothKind{data},
                                              RothProjectionKind{data}, GeneralNonRothKind{}};
  for (const auto& d : all) {
    const AmplenessVerdict v = ampleness_verdict(d);
    if (v.ample == Truth::Yes) CHECK(v.separates_points == Truth::Yes);
    if (v.separates_points == Truth::Yes) CHECK(v.base_point_free == Truth::Yes);
    if (v.very_ample == Truth::Yes) CHECK(v.ample == Truth::Yes);
  }
}
