#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace posethom {

/// Cycle lengths in descending order.
using Partition = std::vector<int>;

/// A permutation of {0..degree-1}. Printed and parsed 1-based.
/// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  /// Throws DataError unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// 1-based cycle notation such as "(1,2,3)(4,5)"; points may also be
  /// separated by blanks. Fixed points may be omitted; "()" is the identity.
  static Perm parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  /// Smallest moved point, or degree() for the identity.
  std::uint32_t first_moved() const;
  Perm inverse() const;
  std::string to_cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

Partition cycle_type(const Perm& g);

}  // namespace posethom

template <>
struct std::hash<posethom::Perm> {
  std::size_t operator()(const posethom::Perm& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : g.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};
