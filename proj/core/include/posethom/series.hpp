#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace posethom {

/// An integer function c_0..c_n (orbit numbers or character multiplicities).
/// Entries are nonnegative; indices outside 0..n read as zero.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<std::int64_t> values);

  int n() const { return static_cast<int>(values_.size()) - 1; }
  std::int64_t operator[](int k) const {
    return k < 0 || k > n() ? 0 : values_[static_cast<std::size_t>(k)];
  }
  const std::vector<std::int64_t>& values() const { return values_; }

  /// Completes a lower half c_0..c_m to c_0..c_n using c_k = c_{n-k}.
  static Series from_lower_half(const std::vector<std::int64_t>& half, int n);

  std::string to_string() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Orbit numbers N_0..N_n.
using OrbitSeries = Series;

}  // namespace posethom
