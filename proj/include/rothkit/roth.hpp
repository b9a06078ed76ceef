#pragma once

// Invariants of Roth varieties: smooth X^n in P^N lying on a scroll
// S_{0,0,a_1,...,a_{n-1}} and containing its vertex line L. Such an X is
// the image of a divisor X~ in |bH + F| on the desingularized scroll.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "rothkit/chow_ring.hpp"
#include "rothkit/scrolls.hpp"

namespace rothkit {

class RothData {
 public:
  /// `a_list` holds the n - 1 positive scroll twists, `b` the coefficient
  /// of H in the class of X~.
  RothData(Twists a_list, std::int64_t b);

  int n() const noexcept { return static_cast<int>(a_list_.size()) + 1; }
  const Twists& a_list() const noexcept { return a_list_; }
  std::int64_t b() const noexcept { return b_; }
  /// d_S = N - n
  std::int64_t scroll_degree() const noexcept { return scroll_degree_; }
  std::int64_t ambient_dim() const noexcept { return scroll_degree_ + n(); }
  std::int64_t degree() const noexcept { return b_ * scroll_degree_ + 1; }

  ScrollSpec scroll() const { return roth_scroll(a_list_); }
  ChowContext chow_context() const { return ChowContext::roth_scroll(a_list_); }

 private:
  Twists a_list_;
  std::int64_t b_;
  std::int64_t scroll_degree_;
};

struct SectionThroughLine {
  std::int64_t curve_count;       // N - n plane curves besides L
  std::int64_t component_degree;  // each of degree b
};

struct RothReport {
  std::int64_t n;
  std::int64_t b;
  Twists a_list;
  std::int64_t d;
  std::int64_t N;
  mpz_class sectional_genus;
  mpz_class double_point_h;  // C_X = h H + f F on S~
  mpz_class double_point_f;
  mpz_class cx_dot_l;
  mpz_class cx_top_power;
  Twists normal_bundle_twists;  // N_{L/X} = sum O_L(1 - b a_i)
  std::int64_t normal_bundle_c1;
  bool is_big;
  bool is_castelnuovo;
  bool generic_curve_section_castelnuovo;  // b >= 2
  bool is_rational_normal_scroll;
  std::optional<ScrollSpec> scroll_type;  // S_{1,a_1,...} when b = 1
  bool linearly_normal;
  bool projectively_normal;
  bool intermediate_cohomology_vanishes;  // H^i(O_X(k)) = 0, 1 <= i <= n-1
  bool adjoint_vanishing;                 // H^i(O_X((d-n-2)H)) = 0, i >= 1
  SectionThroughLine section_through_l;
};

RothReport report(const RothData& data);

/// Integer sectional genus (d-1)(d-(N-n+1)) / (2(N-n)); throws DomainError
/// when the value is not an integer.
mpz_class sectional_genus(std::int64_t d, std::int64_t n, std::int64_t N);

struct IdentityCheck {
  std::string name;
  bool applicable;
  bool passed;
  mpz_class computed;
  mpz_class expected;
};

struct Verification {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Re-derives the closed forms by evaluating intersection numbers in the
/// Chow ring of the scroll:
///   cx_dot_l       C_X . (P^1 x L) . X~ = 0
///   sectional_genus (K + X~) X~ H^{n-1} + (n-1) H^n X~ = b^2 d_S - b d_S - 2
///   cx_top_power   C_X^n . X~ = (d-b-1)^n (d-n)
///   line_self_intersection (n = 2 only) (P^1 x L)^2 . X~ = 2 - d
Verification verify_identities(const RothData& data);

struct CastelnuovoParams {
  std::int64_t m;        // floor((d-1)/(N-n))
  std::int64_t epsilon;  // d - 1 = m (N-n) + epsilon
  mpz_class bound;       // C(m, n+1)(N-n) + C(m, n) epsilon
};

CastelnuovoParams castelnuovo_params(std::int64_t d, std::int64_t n, std::int64_t N);

/// What is known about the variety, for the ampleness verdict of |C_X|.
struct CurveKind {};
struct SemiCanonicalKind {};
struct RothKind {
  RothData data;
};
struct RothProjectionKind {
  RothData data;
};
struct GeneralNonRothKind {};

using VarietyDescriptor =
    std::variant<CurveKind, SemiCanonicalKind, RothKind, RothProjectionKind, GeneralNonRothKind>;

enum class Truth { No, Yes, Unknown };
std::string to_string(Truth t);

struct AmplenessVerdict {
  Truth base_point_free;
  Truth nef;
  Truth separates_points;
  Truth ample;
  Truth very_ample;
};

AmplenessVerdict ampleness_verdict(const VarietyDescriptor& desc);

}  // namespace rothkit
