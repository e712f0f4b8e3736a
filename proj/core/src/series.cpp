#include "posethom/series.hpp"

#include "posethom/errors.hpp"

namespace posethom {

Series::Series(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw ArgumentError("series: at least one value (c_0) is required");
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k] < 0) throw ArgumentError("series: negative entry at index " + std::to_string(k));
}

Series Series::from_lower_half(const std::vector<std::int64_t>& half, int n) {
  if (n < 0) throw ArgumentError("series: n must be >= 0");
  if (static_cast<int>(half.size()) < n / 2 + 1 || static_cast<int>(half.size()) > n + 1)
    throw ArgumentError("series: " + std::to_string(half.size()) + " values cannot be completed to n=" +
                        std::to_string(n) + " by symmetry");
  std::vector<std::int64_t> v(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const int src = k < static_cast<int>(half.size()) ? k : n - k;
    v[static_cast<std::size_t>(k)] = half[static_cast<std::size_t>(src)];
  }
  return Series(std::move(v));
}

std::string Series::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(values_[k]);
  }
  return s;
}

}  // namespace posethom
