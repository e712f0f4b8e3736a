#include "posethom/sparse_mat.hpp"

#include <algorithm>
#include <string>

#include "posethom/errors.hpp"

namespace posethom {

SparseMat::SparseMat(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), col_ptr_(cols + 1, 0) {
  if (rows > UINT32_MAX || cols > UINT32_MAX) throw ArgumentError("SparseMat: dimension too large");
}

SparseMat SparseMat::from_triplets(std::size_t rows, std::size_t cols, std::uint32_t modulus,
                                   std::vector<Entry> entries) {
  SparseMat m(rows, cols, modulus);
  for (const auto& e : entries)
    if (e.row >= rows || e.col >= cols)
      throw ArgumentError("SparseMat: entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                          ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::size_t i = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    while (i < entries.size() && entries[i].col == c) {
      const std::uint32_t r = entries[i].row;
      std::uint64_t v = 0;
      for (; i < entries.size() && entries[i].col == c && entries[i].row == r; ++i) {
        v += entries[i].value;
        if (modulus > 0) v %= modulus;
      }
      if (v != 0) {
        m.row_idx_.push_back(r);
        m.values_.push_back(static_cast<std::uint32_t>(v));
      }
    }
    m.col_ptr_[c + 1] = m.row_idx_.size();
  }
  return m;
}

SparseMat SparseMat::identity(std::size_t n, std::uint32_t modulus) {
  std::vector<Entry> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    e.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), 1});
  return from_triplets(n, n, modulus, std::move(e));
}

std::uint32_t SparseMat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ArgumentError("SparseMat::at: index out of range");
  const auto rs = col_rows(c);
  const auto it = std::lower_bound(rs.begin(), rs.end(), r);
  if (it == rs.end() || *it != r) return 0;
  return values_[col_ptr_[c] + static_cast<std::size_t>(it - rs.begin())];
}

std::vector<SparseMat::Entry> SparseMat::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t t = col_ptr_[c]; t < col_ptr_[c + 1]; ++t)
      out.push_back({row_idx_[t], static_cast<std::uint32_t>(c), values_[t]});
  return out;
}

SparseMat SparseMat::transpose() const {
  auto e = entries();
  for (auto& x : e) std::swap(x.row, x.col);
  return from_triplets(cols_, rows_, modulus_, std::move(e));
}

SparseMat SparseMat::reduce(std::uint32_t p) const {
  if (p == 0) throw ArgumentError("SparseMat::reduce: modulus must be positive");
  if (modulus_ != 0 && modulus_ != p)
    throw ArgumentError("SparseMat::reduce: cannot reduce a mod-" + std::to_string(modulus_) +
                        " matrix mod " + std::to_string(p));
  auto e = entries();
  for (auto& x : e) x.value %= p;
  return from_triplets(rows_, cols_, p, std::move(e));
}

SparseMat SparseMat::scaled(std::uint64_t c) const {
  if (modulus_ == 0) throw ArgumentError("SparseMat::scaled: requires a prime modulus");
  const std::uint64_t cm = c % modulus_;
  auto e = entries();
  for (auto& x : e) x.value = static_cast<std::uint32_t>(x.value * cm % modulus_);
  return from_triplets(rows_, cols_, modulus_, std::move(e));
}

}  // namespace posethom
