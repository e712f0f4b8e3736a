#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace posethom {

using GfElem = std::uint8_t;

/// Table-driven arithmetic in GF(q) for prime q < 256 and for q in {4, 8, 9, 16}.
/// Elements of GF(p^e) are encoded as base-p digit strings of polynomial
/// coefficients (constant term least significant).
class GaloisField {
 public:
  explicit GaloisField(std::uint32_t q);

  static bool supported(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }

  GfElem add(GfElem a, GfElem b) const { return add_[a * q_ + b]; }
  GfElem sub(GfElem a, GfElem b) const { return add_[a * q_ + neg_[b]]; }
  GfElem mul(GfElem a, GfElem b) const { return mul_[a * q_ + b]; }
  GfElem neg(GfElem a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  GfElem inv(GfElem a) const { return inv_[a]; }

  /// Reduced row echelon form of a rows x cols matrix stored row-major, in place.
  /// Returns the rank; zero rows are moved to the bottom.
  std::size_t rref(std::span<GfElem> m, std::size_t rows, std::size_t cols) const;

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  std::vector<GfElem> add_;
  std::vector<GfElem> mul_;
  std::vector<GfElem> neg_;
  std::vector<GfElem> inv_;
};

}  // namespace posethom
