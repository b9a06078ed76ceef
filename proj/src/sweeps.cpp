#include "rothkit/sweeps.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

#include "rothkit/bundle_maps.hpp"
#include "rothkit/chow_ring.hpp"
#include "rothkit/cohomology.hpp"
#include "rothkit/roth.hpp"

namespace rothkit::sweeps {

namespace {

void merge(SurjectionTally& t, const SurjectionTally& o) {
  t.pairs += o.pairs;
  t.positives += o.positives;
  t.witness_verified += o.witness_verified;
  t.witness_failed += o.witness_failed;
  t.equal_rank_violations += o.equal_rank_violations;
  t.necessity_checked += o.necessity_checked;
  t.necessity_violations += o.necessity_violations;
}

void merge(OrderTally& t, const OrderTally& o) {
  t.scrolls += o.scrolls;
  t.pairs += o.pairs;
  t.reflexivity_failures += o.reflexivity_failures;
  t.antisymmetry_failures += o.antisymmetry_failures;
  t.transitivity_failures += o.transitivity_failures;
  t.cross_class_failures += o.cross_class_failures;
}

void merge(SectionTally& t, const SectionTally& o) {
  t.scrolls += o.scrolls;
  t.candidates += o.candidates;
  t.verified += o.verified;
  t.failures += o.failures;
  t.invariant_failures += o.invariant_failures;
}

void merge(RothTally& t, const RothTally& o) {
  t.cases += o.cases;
  t.xc_degree_failures += o.xc_degree_failures;
  t.plxh_degree_failures += o.plxh_degree_failures;
  t.cx_dot_l_failures += o.cx_dot_l_failures;
  t.cx_class_failures += o.cx_class_failures;
  t.genus_failures += o.genus_failures;
  t.top_power_failures += o.top_power_failures;
  t.line_self_intersection_checked += o.line_self_intersection_checked;
  t.line_self_intersection_failures += o.line_self_intersection_failures;
  t.normal_bundle_failures += o.normal_bundle_failures;
  t.bigness_failures += o.bigness_failures;
  t.castelnuovo_failures += o.castelnuovo_failures;
}

void merge(SerreTally& t, const SerreTally& o) {
  t.contexts += o.contexts;
  t.cases += o.cases;
  t.duality_failures += o.duality_failures;
  t.structure_sheaf_failures += o.structure_sheaf_failures;
}

template <typename Tally, typename Kernel>
Tally drive(std::size_t count, Exec exec, const Kernel& kernel) {
  Tally total{};
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i) kernel(i, total);
    return total;
  }
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    Tally local{};
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < n; ++i) kernel(static_cast<std::size_t>(i), local);
#pragma omp critical(rothkit_sweep_merge)
    merge(total, local);
  }
  return total;
}

void sorted_tuples_rec(std::size_t len, std::int64_t lo, std::int64_t hi, Twists& cur,
                       std::vector<Twists>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = cur.empty() ? lo : cur.back(); v <= hi; ++v) {
    cur.push_back(v);
    sorted_tuples_rec(len, lo, hi, cur, out);
    cur.pop_back();
  }
}

// Random binary form of the given degree with coefficients in [-9, 9],
// leading and trailing ones nonzero.
BinaryForm random_form(int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<mpq_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = dist(rng);
  if (c.front() == 0) c.front() = 1;
  if (c.back() == 0) c.back() = -1;
  return BinaryForm(degree, std::move(c));
}

}  // namespace

std::vector<Twists> sorted_tuples(std::size_t len, std::int64_t lo, std::int64_t hi) {
  std::vector<Twists> out;
  Twists cur;
  sorted_tuples_rec(len, lo, hi, cur, out);
  return out;
}

SurjectionTally surjection_sweep(const SurjectionConfig& cfg, Exec exec) {
  std::vector<std::vector<Twists>> by_len(cfg.max_rank + 1);
  for (std::size_t k = 1; k <= cfg.max_rank; ++k) by_len[k] = sorted_tuples(k, 0, cfg.max_entry);
  // one work item per source tuple; the kernel loops over all targets
  std::vector<const Twists*> sources;
  for (std::size_t k = 1; k <= cfg.max_rank; ++k)
    for (const auto& t : by_len[k]) sources.push_back(&t);

  auto kernel = [&](std::size_t idx, SurjectionTally& tally) {
    const Twists& a = *sources[idx];
    std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
    for (std::size_t m = 1; m <= a.size(); ++m)
      for (const Twists& b : by_len[m]) {
        ++tally.pairs;
        const BundleMapSpec spec(a, b);
        const bool verdict = surjection_exists(spec);
        if (verdict) {
          ++tally.positives;
          if (verify_full_rank(witness_matrix(spec)))
            ++tally.witness_verified;
          else
            ++tally.witness_failed;
          if (m == a.size() && a != b) ++tally.equal_rank_violations;
          continue;
        }
        if (!cfg.check_necessity) continue;
        ++tally.necessity_checked;
        FormMatrix t(m, std::vector<BinaryForm>(a.size()));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i; j <= i + 1 && j < a.size(); ++j) {
            const auto deg = b[i] - a[j];
            if (deg >= 0) t[i][j] = random_form(static_cast<int>(deg), rng);
          }
        if (verify_full_rank(t)) ++tally.necessity_violations;
      }
  };
  return drive<SurjectionTally>(sources.size(), exec, kernel);
}

std::vector<ScrollSpec> all_scrolls(std::int64_t max_degree, int max_dim, bool positive_only) {
  std::vector<ScrollSpec> out;
  const std::int64_t lo = positive_only ? 1 : 0;
  for (int k = 1; k <= max_dim; ++k)
    for (auto& t : sorted_tuples(static_cast<std::size_t>(k), lo, max_degree)) {
      std::int64_t sum = 0;
      for (auto v : t) sum += v;
      if (sum >= 1 && sum <= max_degree) out.emplace_back(std::move(t));
    }
  return out;
}

OrderTally degeneration_order_sweep(std::int64_t max_degree, int max_dim, Exec exec) {
  const auto scrolls = all_scrolls(max_degree, max_dim, false);
  auto kernel = [&](std::size_t idx, OrderTally& tally) {
    const ScrollSpec& x = scrolls[idx];
    ++tally.scrolls;
    if (!degenerates_to(x, x)) ++tally.reflexivity_failures;
    for (const auto& y : scrolls) {
      ++tally.pairs;
      const bool xy = degenerates_to(x, y);
      const bool same_class = x.dim() == y.dim() && x.degree() == y.degree();
      if (!same_class) {
        if (xy) ++tally.cross_class_failures;
        continue;
      }
      if (!xy) continue;
      if (!(x == y) && degenerates_to(y, x)) ++tally.antisymmetry_failures;
      for (const auto& z : scrolls)
        if (z.dim() == x.dim() && z.degree() == x.degree() && degenerates_to(y, z) &&
            !degenerates_to(x, z))
          ++tally.transitivity_failures;
    }
  };
  return drive<OrderTally>(scrolls.size(), exec, kernel);
}

SectionTally section_maximality_sweep(std::int64_t max_degree, int max_dim, Exec exec) {
  std::vector<ScrollSpec> bigs;
  for (auto& s : all_scrolls(max_degree, max_dim, true))
    if (s.dim() >= 2) bigs.push_back(std::move(s));

  auto kernel = [&](std::size_t idx, SectionTally& tally) {
    const ScrollSpec& big = bigs[idx];
    ++tally.scrolls;
    // every sorted positive tuple with dim - 1 entries summing to the degree
    std::vector<ScrollSpec> sections;
    for (auto& t : sorted_tuples(static_cast<std::size_t>(big.dim() - 1), 1, big.degree())) {
      std::int64_t sum = 0;
      for (auto v : t) sum += v;
      if (sum != big.degree()) continue;
      ++tally.candidates;
      ScrollSpec s(std::move(t));
      if (is_hyperplane_section(big, s)) sections.push_back(std::move(s));
    }
    try {
      const ScrollSpec g = generic_hyperplane_section(big);
      const bool member = std::find(sections.begin(), sections.end(), g) != sections.end();
      const bool dominates = std::all_of(sections.begin(), sections.end(),
                                         [&](const ScrollSpec& t) { return degenerates_to(g, t); });
      if (member && dominates)
        ++tally.verified;
      else
        ++tally.failures;
      if (g.ambient_dim() != big.ambient_dim() - 1 || g.degree() != big.degree() ||
          g.dim() != big.dim() - 1)
        ++tally.invariant_failures;
    } catch (const std::exception&) {
      ++tally.failures;
    }
  };
  return drive<SectionTally>(bigs.size(), exec, kernel);
}

std::uint64_t RothTally::total_failures() const {
  return xc_degree_failures + plxh_degree_failures + cx_dot_l_failures + cx_class_failures +
         genus_failures + top_power_failures + line_self_intersection_failures +
         normal_bundle_failures + bigness_failures + castelnuovo_failures;
}

RothTally roth_sweep(int max_n, std::int64_t max_a, std::int64_t max_b, Exec exec) {
  std::vector<RothData> cases;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& a : sorted_tuples(static_cast<std::size_t>(n - 1), 1, max_a)) {
      std::int64_t ds = 0;
      for (auto v : a) ds += v;
      if (ds < 2) continue;
      for (std::int64_t b = 1; b <= max_b; ++b) cases.emplace_back(a, b);
    }

  auto kernel = [&](std::size_t idx, RothTally& tally) {
    const RothData& data = cases[idx];
    ++tally.cases;
    const ChowContext ctx = data.chow_context();
    const int n = data.n();
    const std::int64_t b = data.b();
    const std::int64_t ds = data.scroll_degree();
    const ChowClass h = ChowClass::h(ctx);
    const ChowClass f = ChowClass::f(ctx);
    const ChowClass x = xtilde_class(ctx, b);
    const ChowClass c = expand_named({NamedTag::C, std::nullopt}, ctx);
    const ChowClass pl = expand_named({NamedTag::PL, std::nullopt}, ctx);

    if (degree(x * c) != 1) ++tally.xc_degree_failures;
    if (degree(pl * x * h) != 1) ++tally.plxh_degree_failures;

    const ChowClass cx = double_point_class(ctx, b);
    const ChowClass cx_expected = mpz_class(b * (ds - 1)) * h + mpz_class(1 - ds) * f;
    if (!(cx == cx_expected)) ++tally.cx_class_failures;

    const Verification v = verify_identities(data);
    for (const auto& check : v.checks) {
      if (!check.applicable) continue;
      if (check.name == "cx_dot_l" && !check.passed) ++tally.cx_dot_l_failures;
      if (check.name == "cx_top_power" && !check.passed) ++tally.top_power_failures;
      if (check.name == "line_self_intersection") {
        ++tally.line_self_intersection_checked;
        if (!check.passed) ++tally.line_self_intersection_failures;
      }
      if (check.name == "sectional_genus" && !check.passed) ++tally.genus_failures;
    }

    const RothReport r = report(data);
    // 2 pi - 2 from the ring must match the closed-form genus
    const mpz_class genus_closed = mpz_class(b * b * ds - b * ds) / 2;
    if (r.sectional_genus < 0 || r.sectional_genus != genus_closed) ++tally.genus_failures;
    for (const auto& check : v.checks)
      if (check.name == "sectional_genus" && check.computed != 2 * r.sectional_genus - 2)
        ++tally.genus_failures;

    if (r.normal_bundle_c1 != n - r.d || r.normal_bundle_c1 != data.n() - data.degree())
      ++tally.normal_bundle_failures;

    const bool segre = b == 1 && std::all_of(data.a_list().begin(), data.a_list().end(),
                                             [](std::int64_t a) { return a == 1; });
    if ((r.cx_top_power <= 0) != segre || r.is_big == segre) ++tally.bigness_failures;

    const CastelnuovoParams p = castelnuovo_params(r.d, n, r.N);
    if (p.epsilon != 0 || p.m != b) ++tally.castelnuovo_failures;
  };
  return drive<RothTally>(cases.size(), exec, kernel);
}

SerreTally serre_duality_sweep(int max_rank, std::int64_t max_twist, std::int64_t range,
                               Exec exec) {
  std::vector<BundleContext> contexts;
  for (int r = 2; r <= max_rank; ++r)
    for (auto& t : sorted_tuples(static_cast<std::size_t>(r), 0, max_twist))
      contexts.emplace_back(std::move(t));

  auto kernel = [&](std::size_t idx, SerreTally& tally) {
    const BundleContext& ctx = contexts[idx];
    ++tally.contexts;
    const auto r = static_cast<std::size_t>(ctx.rank());
    const CohomologyTable o = line_bundle_cohomology(ctx, 0, 0);
    if (o.h[0] != 1 || std::any_of(o.h.begin() + 1, o.h.end(), [](const mpz_class& v) { return v != 0; }))
      ++tally.structure_sheaf_failures;
    for (std::int64_t a = -range; a <= range; ++a)
      for (std::int64_t b = -range; b <= range; ++b) {
        ++tally.cases;
        const CohomologyTable lhs = line_bundle_cohomology(ctx, a, b);
        const CohomologyTable rhs =
            line_bundle_cohomology(ctx, -ctx.rank() - a, ctx.c1() - 2 - b);
        for (std::size_t i = 0; i <= r; ++i)
          if (lhs.h[i] != rhs.h[r - i]) {
            ++tally.duality_failures;
            break;
          }
      }
  };
  return drive<SerreTally>(contexts.size(), exec, kernel);
}

}  // namespace rothkit::sweeps
