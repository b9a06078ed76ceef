#include "rothkit/bundle_maps.hpp"

#include <algorithm>
#include <sstream>

#include "rothkit/error.hpp"

namespace rothkit {

BundleMapSpec::BundleMapSpec(Twists source, Twists target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.empty() || target_.empty())
    throw DomainError("bundle map needs non-empty source and target");
  std::sort(source_.begin(), source_.end());
  std::sort(target_.begin(), target_.end());
}

bool surjection_exists(const BundleMapSpec& spec) {
  const auto& a = spec.source();
  const auto& b = spec.target();
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (m > n) return false;
  bool prefixes_equal = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < a[i]) return false;
    prefixes_equal = prefixes_equal && a[i] == b[i];
    if (!prefixes_equal) {
      // a_{n+1} is treated as +infinity
      if (i + 1 >= n || b[i] < a[i + 1]) return false;
    }
  }
  return true;
}

std::string Monomial::to_string() const {
  if (zero) return "0";
  std::string s;
  if (x0_exp > 0) s += "x0^" + std::to_string(x0_exp);
  if (x1_exp > 0) s += (s.empty() ? "" : "*") + ("x1^" + std::to_string(x1_exp));
  return s.empty() ? "1" : s;
}

BinaryForm Monomial::to_form() const {
  return zero ? BinaryForm{} : BinaryForm::monomial(x0_exp, x1_exp);
}

WitnessMatrix::WitnessMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

std::vector<std::vector<std::string>> WitnessMatrix::to_grid() const {
  std::vector<std::vector<std::string>> grid(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) grid[i].push_back(at(i, j).to_string());
  return grid;
}

std::string WitnessMatrix::to_string() const {
  const auto grid = to_grid();
  std::size_t width = 1;
  for (const auto& row : grid)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::ostringstream os;
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << row[j];
      if (j + 1 < row.size()) os << std::string(width - row[j].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

WitnessMatrix witness_matrix(const BundleMapSpec& spec) {
  if (!surjection_exists(spec))
    throw DomainError("no surjection O(" + format_tuple(spec.source()) + ") -> O(" +
                      format_tuple(spec.target()) + ") exists, so there is no witness");
  const auto& a = spec.source();
  const auto& b = spec.target();
  WitnessMatrix t(b.size(), a.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    t.at(i, i) = Monomial::x0(static_cast<int>(b[i] - a[i]));
    if (i + 1 < a.size() && b[i] >= a[i + 1])
      t.at(i, i + 1) = Monomial::x1(static_cast<int>(b[i] - a[i + 1]));
  }
  return t;
}

FormMatrix to_form_matrix(const WitnessMatrix& t) {
  FormMatrix out(t.rows(), std::vector<BinaryForm>(t.cols()));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) out[i][j] = t.at(i, j).to_form();
  return out;
}

namespace {

BinaryForm cofactor_expand(const FormMatrix& a, std::size_t row, std::vector<std::size_t>& cols) {
  if (row == a.size()) return BinaryForm::constant(1);
  BinaryForm sum;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const BinaryForm& entry = a[row][cols[k]];
    if (entry.is_zero()) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    BinaryForm term = entry * cofactor_expand(a, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_shape(const FormMatrix& t) {
  if (t.empty()) throw DomainError("empty matrix");
  for (const auto& row : t)
    if (row.size() != t.front().size()) throw DomainError("ragged matrix");
  if (t.size() > t.front().size())
    throw DomainError("an m x n matrix with m > n never has rank m");
}

}  // namespace

BinaryForm determinant(const FormMatrix& square) {
  for (const auto& row : square)
    if (row.size() != square.size()) throw DomainError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(square.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_expand(square, 0, cols);
}

BinaryForm maximal_minor_gcd(const FormMatrix& t) {
  check_shape(t);
  const std::size_t m = t.size();
  const std::size_t n = t.front().size();
  BinaryForm g;
  FormMatrix minor(m, std::vector<BinaryForm>(m));
  for_each_subset(n, m, [&](const std::vector<std::size_t>& cols) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) minor[i][j] = t[i][cols[j]];
    g = gcd(g, determinant(minor));
    return !g.is_nonzero_constant();
  });
  return g;
}

bool verify_full_rank(const FormMatrix& t) { return maximal_minor_gcd(t).is_nonzero_constant(); }

bool verify_full_rank(const WitnessMatrix& t) { return verify_full_rank(to_form_matrix(t)); }

}  // namespace rothkit
