#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace posethom {

/// Compressed-column sparse matrix over GF(p), or over the nonnegative
/// integers when modulus() == 0 (used for 0/1 incidence matrices before
/// reduction mod p).
///
/// Invariants: no duplicate (row, col) pairs, no stored zeros, values in
/// 1..p-1 for a prime modulus, row indices strictly increasing within a column.
/// Zero-row and zero-column matrices are ordinary values.
class SparseMat {
 public:
  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    std::uint32_t value;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMat() = default;
  /// The zero matrix.
  SparseMat(std::size_t rows, std::size_t cols, std::uint32_t modulus);

  /// Builds from arbitrary triplets. Duplicates are summed (mod p when
  /// modulus > 0), zeros dropped, indices range-checked.
  static SparseMat from_triplets(std::size_t rows, std::size_t cols, std::uint32_t modulus,
                                 std::vector<Entry> entries);

  static SparseMat identity(std::size_t n, std::uint32_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return modulus_; }
  std::size_t nnz() const { return row_idx_.size(); }
  bool is_zero() const { return row_idx_.empty(); }

  std::span<const std::uint32_t> col_rows(std::size_t c) const {
    return {row_idx_.data() + col_ptr_[c], row_idx_.data() + col_ptr_[c + 1]};
  }
  std::span<const std::uint32_t> col_values(std::size_t c) const {
    return {values_.data() + col_ptr_[c], values_.data() + col_ptr_[c + 1]};
  }

  /// Value at (r, c); zero when not stored.
  std::uint32_t at(std::size_t r, std::size_t c) const;

  /// All entries in column-major order.
  std::vector<Entry> entries() const;

  SparseMat transpose() const;
  /// Reduces entries mod p. The source may be an integer or a GF(p) matrix.
  SparseMat reduce(std::uint32_t p) const;
  /// Multiplies every entry by c (mod p). Requires a prime modulus.
  SparseMat scaled(std::uint64_t c) const;

  friend bool operator==(const SparseMat&, const SparseMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t modulus_ = 0;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<std::uint32_t> row_idx_;
  std::vector<std::uint32_t> values_;
};

}  // namespace posethom
