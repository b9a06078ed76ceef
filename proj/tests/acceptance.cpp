// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "rothkit/chow_ring.hpp"
#include "rothkit/cohomology.hpp"
#include "rothkit/roth.hpp"
#include "rothkit/sweeps.hpp"

using namespace rothkit;
using namespace rothkit::sweeps;

namespace {

int failures = 0;

void report_line(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string u(std::uint64_t v) { return std::to_string(v); }

// (0,0,a_1,...,a_{n-1}) with 2 <= n <= 5, 1 <= a_i <= 4 and sum a_i >= 2
std::vector<Twists> roth_shapes() {
  std::vector<Twists> out;
  for (std::size_t len = 1; len <= 4; ++len)
    for (const auto& a : sorted_tuples(len, 1, 4))
      if (std::accumulate(a.begin(), a.end(), std::int64_t{0}) >= 2) out.push_back(a);
  return out;
}

}  // namespace

int main() {
  const RothTally roth = roth_sweep(5, 4, 6, Exec::Parallel);
  const std::string cases = u(roth.cases) + " cases";

  report_line(1, roth.cases > 0 && roth.xc_degree_failures == 0 && roth.plxh_degree_failures == 0,
              "deg(X~ C) = deg(PL X~ H) = 1", cases);

  {
    const RothData data({3}, 2);
    const ChowClass cx = expand_named({NamedTag::CX, 2}, data.chow_context());
    const bool example = cx.to_string() == "4*H - 2*F";
    report_line(2, roth.cases > 0 && roth.cx_dot_l_failures == 0 && roth.cx_class_failures == 0 && example,
                "deg(C_X PL X~) = 0 and C_X = b(d_S-1)H + (1-d_S)F", cases + ", a=(3) b=2 gives " + cx.to_string());
  }

  report_line(3, roth.cases > 0 && roth.genus_failures == 0, "2pi-2 = b^2 d_S - b d_S - 2, integral closed form",
              cases);

  report_line(4, roth.cases > 0 && roth.top_power_failures == 0, "deg(C_X^n X~) = (d-b-1)^n (d-n)", cases);

  report_line(5,
              roth.line_self_intersection_checked > 0 && roth.line_self_intersection_failures == 0 &&
                  roth.normal_bundle_failures == 0,
              "n=2: deg(PL^2 X~) = 2-d; sum(1 - b a_i) = n-d",
              u(roth.line_self_intersection_checked) + " surface cases, " + cases);

  {
    std::ostringstream out, err;
    const int code = cli::dispatch({"scroll", "section", "5,9,11,15"}, out, err);
    const bool golden = code == 0 && out.str() == "S_12,13,15\n";
    const SectionTally t = section_maximality_sweep(12, 4, Exec::Parallel);
    const bool ok = golden && t.scrolls > 0 && t.verified == t.scrolls && t.failures == 0 && t.invariant_failures == 0;
    report_line(6, ok, "generic section of S_5,9,11,15 is S_12,13,15; greatest section exists",
                u(t.verified) + "/" + u(t.scrolls) + " scrolls of degree <= 12, dim <= 4");
  }

  {
    const SurjectionTally t = surjection_sweep(SurjectionConfig{}, Exec::Parallel);
    const bool ok = t.positives > 0 && t.witness_verified == t.positives && t.witness_failed == 0 &&
                    t.equal_rank_violations == 0;
    report_line(7, ok, "surjection criterion agrees with witness minor gcd",
                u(t.pairs) + " pairs, " + u(t.witness_verified) + "/" + u(t.positives) + " witnesses full rank");
  }

  {
    const OrderTally t = degeneration_order_sweep(12, 4, Exec::Parallel);
    const bool ok = t.scrolls > 0 && t.reflexivity_failures == 0 && t.antisymmetry_failures == 0 &&
                    t.transitivity_failures == 0 && t.cross_class_failures == 0;
    report_line(8, ok, "degeneration order is a partial order", u(t.scrolls) + " scrolls, " + u(t.pairs) + " pairs");
  }

  {
    std::uint64_t contexts = 0, bad = 0;
    for (const auto& a : roth_shapes()) {
      Twists t{0, 0};
      t.insert(t.end(), a.begin(), a.end());
      const BundleContext ctx(t);
      ++contexts;
      for (const auto& h : line_bundle_cohomology(ctx, 0, -1).h)
        if (h != 0) ++bad;
      const std::int64_t n = static_cast<std::int64_t>(a.size()) + 1;
      const std::int64_t big_n = ctx.c1() + n;
      const CohomologyTable oh = line_bundle_cohomology(ctx, 1, 0);
      if (oh.h[0] != big_n + 1) ++bad;
    }
    const SerreTally s = serre_duality_sweep(5, 4, 8, Exec::Parallel);
    const bool ok = bad == 0 && s.cases > 0 && s.duality_failures == 0 && s.structure_sheaf_failures == 0;
    report_line(9, ok, "O(-F) acyclic, h0(O(H)) = N+1, Serre duality",
                u(contexts) + " scroll contexts, " + u(s.cases) + " duality cases");
  }

  {
    const auto found = harris_counterexample_search(2, 40);
    std::vector<std::int64_t> scan;
    for (std::int64_t d = 1; d <= 40; ++d)
      if (d - 3 > (2 * d - 1) / 3) scan.push_back(d);
    const bool ok = !found.empty() && found.front() == 9 && found == scan;
    report_line(10, ok, "smallest counterexample plane curve degree at n=2 is 9",
                found.empty() ? "none found" : "smallest " + std::to_string(found.front()));
  }

  {
    const RothReport r = report(RothData({3}, 3));
    const CastelnuovoParams c = castelnuovo_params(10, 1, 4);
    bool ok = r.sectional_genus == 9 && c.bound == 9 && c.epsilon == 0 && c.m == 3 && roth.castelnuovo_failures == 0;
    std::uint64_t checked = 0;
    for (std::int64_t n = 1; n <= 8; ++n)
      for (std::int64_t ds = 2; ds <= 30; ++ds)
        for (std::int64_t b = 1; b <= 30; ++b) {
          const CastelnuovoParams p = castelnuovo_params(b * ds + 1, n, ds + n);
          ++checked;
          if (p.epsilon != 0 || p.m != b) ok = false;
        }
    report_line(11, ok, "pi = 9 = Castelnuovo bound for a=(3) b=3; eps = 0 and M = b",
                u(checked) + " Roth degrees");
  }

  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
