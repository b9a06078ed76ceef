#pragma once

// Rational normal scrolls S_{a_0,...,a_k}, the degeneration order on them and
// their hyperplane sections.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rothkit {

using Twists = std::vector<std::int64_t>;

/// Parse a comma-separated integer tuple such as `0,0,2,3` (no spaces).
Twists parse_tuple(std::string_view text);
std::string format_tuple(const Twists& t);

class ScrollSpec {
 public:
  /// Sorts ascending. Twists must be non-negative and not all zero.
  explicit ScrollSpec(Twists twists);

  const Twists& twists() const noexcept { return twists_; }
  int dim() const noexcept { return static_cast<int>(twists_.size()); }
  std::int64_t degree() const noexcept { return degree_; }
  /// N with S spanning P^N.
  std::int64_t ambient_dim() const noexcept { return degree_ + dim() - 1; }
  /// Dimension of the vertex; empty for a smooth scroll.
  std::optional<int> vertex_dim() const;

  /// `S_5,9,11,15`
  std::string to_string() const;

  bool operator==(const ScrollSpec&) const = default;

 private:
  Twists twists_;
  std::int64_t degree_;
};

/// The cone S_{0,0,a_1,...,a_{n-1}} over a smooth scroll with vertex a line.
ScrollSpec roth_scroll(const Twists& positive_twists);

/// Prefix-sum dominance: `special` lies in the closure of the family of
/// scrolls of type `general`.
bool degenerates_to(const ScrollSpec& general, const ScrollSpec& special);

/// Whether S_small is a hyperplane section of S_big. Both need all
/// twists >= 1.
bool is_hyperplane_section(const ScrollSpec& big, const ScrollSpec& small);

/// The section type of a generic hyperplane: the greatest element under
/// degenerates_to among all hyperplane sections. Throws DomainError when
/// there is no section or no greatest one.
ScrollSpec generic_hyperplane_section(const ScrollSpec& big);

/// All hyperplane section types of `big`, ascending lexicographically.
std::vector<ScrollSpec> hyperplane_sections(const ScrollSpec& big);

/// Splitting type of the normal bundle of the directrix curve S_{a_sel}
/// inside the scroll: the twists a_sel - a_i, i != sel, in index order.
Twists subscroll_normal_bundle(const ScrollSpec& spec, std::size_t selected);

}  // namespace rothkit
