#pragma once

// Exhaustive verification sweeps over finite parameter boxes. Each sweep has
// an OpenMP-parallel driver and a serial reference driver sharing the same
// per-item kernel; both must produce identical tallies.

#include <cstdint>
#include <string>
#include <vector>

#include "rothkit/scrolls.hpp"

namespace rothkit::sweeps {

enum class Exec { Serial, Parallel };

/// All sorted tuples of length `len` with entries in [lo, hi].
std::vector<Twists> sorted_tuples(std::size_t len, std::int64_t lo, std::int64_t hi);

struct SurjectionConfig {
  std::int64_t max_entry = 8;
  std::size_t max_rank = 5;
  bool check_necessity = false;
  std::uint64_t seed = 0x5eed;
};

struct SurjectionTally {
  std::uint64_t pairs = 0;
  std::uint64_t positives = 0;
  std::uint64_t witness_verified = 0;
  std::uint64_t witness_failed = 0;        // criterion true, witness not full rank
  std::uint64_t equal_rank_violations = 0; // m = n, a != b, criterion true
  std::uint64_t necessity_checked = 0;
  std::uint64_t necessity_violations = 0;  // criterion false, pattern matrix full rank
  bool operator==(const SurjectionTally&) const = default;
};

/// Pairs source (n <= max_rank) -> target (m <= n) with entries in
/// [0, max_entry]. Positives must have a full-rank witness. With
/// check_necessity, every negative gets a matrix with the witness sparsity
/// pattern and random generic entries, which must not be full rank.
SurjectionTally surjection_sweep(const SurjectionConfig& cfg, Exec exec);

struct OrderTally {
  std::uint64_t scrolls = 0;
  std::uint64_t pairs = 0;
  std::uint64_t reflexivity_failures = 0;
  std::uint64_t antisymmetry_failures = 0;
  std::uint64_t transitivity_failures = 0;
  std::uint64_t cross_class_failures = 0;  // true across different (dim, degree)
  bool operator==(const OrderTally&) const = default;
};

/// All scrolls (zeros allowed) of degree <= max_degree and dim <= max_dim.
std::vector<ScrollSpec> all_scrolls(std::int64_t max_degree, int max_dim, bool positive_only);

OrderTally degeneration_order_sweep(std::int64_t max_degree, int max_dim, Exec exec);

struct SectionTally {
  std::uint64_t scrolls = 0;
  std::uint64_t candidates = 0;
  std::uint64_t verified = 0;
  std::uint64_t failures = 0;
  std::uint64_t invariant_failures = 0;  // N, degree, dim bookkeeping
  bool operator==(const SectionTally&) const = default;
};

/// For every scroll with all twists >= 1, degree <= max_degree and
/// 2 <= dim <= max_dim, checks generic_hyperplane_section against an
/// unpruned enumeration of all hyperplane sections.
SectionTally section_maximality_sweep(std::int64_t max_degree, int max_dim, Exec exec);

struct RothTally {
  std::uint64_t cases = 0;
  std::uint64_t xc_degree_failures = 0;          // deg(X~ C) = 1
  std::uint64_t plxh_degree_failures = 0;        // deg(PL X~ H) = 1
  std::uint64_t cx_dot_l_failures = 0;
  std::uint64_t cx_class_failures = 0;           // C_X = b(d_S-1)H + (1-d_S)F
  std::uint64_t genus_failures = 0;
  std::uint64_t top_power_failures = 0;
  std::uint64_t line_self_intersection_checked = 0;
  std::uint64_t line_self_intersection_failures = 0;
  std::uint64_t normal_bundle_failures = 0;      // sum (1 - b a_i) = n - d
  std::uint64_t bigness_failures = 0;            // cx_top_power <= 0 iff S_{1,...,1}
  std::uint64_t castelnuovo_failures = 0;        // eps = 0 and M = b
  bool operator==(const RothTally&) const = default;
  std::uint64_t total_failures() const;
};

/// Roth data with 2 <= n <= max_n, 1 <= a_i <= max_a (sorted), 1 <= b <= max_b
/// and sum a_i >= 2.
RothTally roth_sweep(int max_n, std::int64_t max_a, std::int64_t max_b, Exec exec);

struct SerreTally {
  std::uint64_t contexts = 0;
  std::uint64_t cases = 0;
  std::uint64_t duality_failures = 0;
  std::uint64_t structure_sheaf_failures = 0;  // h^*(O) = (1, 0, ..., 0)
  bool operator==(const SerreTally&) const = default;
};

/// Bundles of rank 2..max_rank with twists in [0, max_twist], line bundles
/// aH + bF with |a|, |b| <= range.
SerreTally serre_duality_sweep(int max_rank, std::int64_t max_twist, std::int64_t range, Exec exec);

}  // namespace rothkit::sweeps
