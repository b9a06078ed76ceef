#include "rothkit/scrolls.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "rothkit/bundle_maps.hpp"
#include "rothkit/error.hpp"

namespace rothkit {

Twists parse_tuple(std::string_view text) {
  Twists out;
  if (text.empty()) throw DomainError("empty tuple");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::int64_t value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last)
      throw DomainError("malformed tuple entry '" + std::string(item) + "' in '" +
                        std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_tuple(const Twists& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

ScrollSpec::ScrollSpec(Twists twists) : twists_(std::move(twists)) {
  if (twists_.empty()) throw DomainError("scroll needs at least one twist");
  std::sort(twists_.begin(), twists_.end());
  if (twists_.front() < 0) throw DomainError("scroll twists must be non-negative");
  degree_ = std::accumulate(twists_.begin(), twists_.end(), std::int64_t{0});
  if (degree_ == 0) throw DomainError("scroll twists must not all be zero");
}

std::optional<int> ScrollSpec::vertex_dim() const {
  const auto zeros = std::count(twists_.begin(), twists_.end(), 0);
  if (zeros == 0) return std::nullopt;
  return static_cast<int>(zeros) - 1;
}

std::string ScrollSpec::to_string() const { return "S_" + format_tuple(twists_); }

ScrollSpec roth_scroll(const Twists& positive_twists) {
  for (auto a : positive_twists)
    if (a < 1) throw DomainError("Roth scroll twists a_i must be >= 1");
  Twists t{0, 0};
  t.insert(t.end(), positive_twists.begin(), positive_twists.end());
  return ScrollSpec(std::move(t));
}

bool degenerates_to(const ScrollSpec& general, const ScrollSpec& special) {
  if (general.dim() != special.dim() || general.degree() != special.degree()) return false;
  std::int64_t g = 0;
  std::int64_t s = 0;
  for (int i = 0; i < general.dim(); ++i) {
    g += general.twists()[i];
    s += special.twists()[i];
    if (s > g) return false;
  }
  return true;
}

namespace {

void require_positive(const ScrollSpec& s) {
  if (s.twists().front() < 1)
    throw DomainError("hyperplane sections are only decided for scrolls with all twists >= 1, got " +
                      s.to_string());
}

// Sorted tuples of `parts` entries with entry i >= lower[i], summing to
// `total`; the lower bound b_i >= a_i of the surjection criterion prunes.
void enumerate_sections(const Twists& lower, std::size_t idx, std::int64_t remaining,
                        Twists& cur, std::vector<Twists>& out) {
  const std::size_t parts = lower.size();
  if (idx == parts) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const std::int64_t prev = idx ? cur[idx - 1] : 1;
  const std::int64_t lo = std::max({prev, lower[idx], std::int64_t{1}});
  const std::int64_t left = static_cast<std::int64_t>(parts - idx);
  // remaining entries are all >= v, so v * left <= remaining
  for (std::int64_t v = lo; v * left <= remaining; ++v) {
    cur.push_back(v);
    enumerate_sections(lower, idx + 1, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_hyperplane_section(const ScrollSpec& big, const ScrollSpec& small) {
  require_positive(big);
  require_positive(small);
  if (small.dim() != big.dim() - 1 || small.degree() != big.degree()) return false;
  return surjection_exists(BundleMapSpec(big.twists(), small.twists()));
}

std::vector<ScrollSpec> hyperplane_sections(const ScrollSpec& big) {
  require_positive(big);
  if (big.dim() < 2) throw DomainError("a hyperplane section needs a scroll of dimension >= 2");
  const Twists lower(big.twists().begin(), big.twists().end() - 1);
  std::vector<Twists> candidates;
  Twists cur;
  enumerate_sections(lower, 0, big.degree(), cur, candidates);
  std::vector<ScrollSpec> out;
  for (auto& c : candidates) {
    ScrollSpec s(std::move(c));
    if (is_hyperplane_section(big, s)) out.push_back(std::move(s));
  }
  return out;
}

ScrollSpec generic_hyperplane_section(const ScrollSpec& big) {
  const auto sections = hyperplane_sections(big);
  if (sections.empty()) throw DomainError(big.to_string() + " has no hyperplane section scroll");
  std::vector<const ScrollSpec*> greatest;
  for (const auto& g : sections) {
    const bool dominates = std::all_of(sections.begin(), sections.end(),
                                       [&](const ScrollSpec& t) { return degenerates_to(g, t); });
    if (dominates) greatest.push_back(&g);
  }
  if (greatest.size() != 1)
    throw DomainError("hyperplane sections of " + big.to_string() +
                      " have no unique most general element");
  return *greatest.front();
}

Twists subscroll_normal_bundle(const ScrollSpec& spec, std::size_t selected) {
  if (spec.dim() < 2) throw DomainError("normal bundle needs a scroll with at least two summands");
  if (selected >= spec.twists().size())
    throw DomainError("summand index " + std::to_string(selected) + " out of range");
  const auto a0 = spec.twists()[selected];
  Twists out;
  for (std::size_t i = 0; i < spec.twists().size(); ++i)
    if (i != selected) out.push_back(a0 - spec.twists()[i]);
  return out;
}

}  // namespace rothkit
