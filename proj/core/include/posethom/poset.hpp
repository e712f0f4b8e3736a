#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "posethom/galois_field.hpp"
#include "posethom/qarith.hpp"
#include "posethom/sparse_mat.hpp"

namespace posethom {

enum class PosetKind { boolean, projective };

/// The Boolean lattice P(n,1) of subsets of an n-set, or the projective
/// space P(n,q) of subspaces of GF(q)^n. Both are ranked by size/dimension.
class PosetSpec {
 public:
  static PosetSpec boolean(int n);
  static PosetSpec projective(int n, int q);
  /// Parses "boolean:<n>" or "projective:<n>,<q>".
  static PosetSpec parse(std::string_view text);

  PosetKind kind() const { return kind_; }
  int n() const { return n_; }
  int q() const { return q_; }
  bool is_boolean() const { return kind_ == PosetKind::boolean; }

  /// |Q_k| = gauss_binom(n, k, q); zero outside 0..n.
  BigInt rank_size(int k) const { return gauss_binom(n_, k, q_); }
  BigInt total_size() const;

  std::string to_string() const;

  friend bool operator==(const PosetSpec&, const PosetSpec&) = default;

 private:
  PosetSpec(PosetKind kind, int n, int q) : kind_(kind), n_(n), q_(q) {}

  PosetKind kind_;
  int n_;
  int q_;
};

inline BigInt rank_size(const PosetSpec& spec, int k) { return spec.rank_size(k); }

/// A subset of {0..n-1}; bit t set iff point t+1 is a member.
using SubsetMask = std::uint64_t;

/// A subspace of GF(q)^n stored as its canonical reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;

  /// Row space of `rows` (rows x n, row-major); the result is canonical and its
  /// rank is the rank of `rows`.
  static Subspace span_of(std::vector<GfElem> rows, int nrows, int n, const GaloisField& field);

  int rank() const { return rank_; }
  int n() const { return n_; }
  /// Row-major RREF entries, rank() x n().
  const std::vector<GfElem>& rref() const { return rref_; }
  GfElem at(int r, int c) const { return rref_[static_cast<std::size_t>(r * n_ + c)]; }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
    return a.rref_ <=> b.rref_;
  }

 private:
  int rank_ = 0;
  int n_ = 0;
  std::vector<GfElem> rref_;
};

using RankElement = std::variant<SubsetMask, Subspace>;

inline constexpr std::size_t kDefaultMaxRankSize = 5'000'000;

/// Colex rank of a subset among subsets of equal size; equals its position in
/// numeric order of masks.
std::uint64_t subset_index(SubsetMask mask);
/// Inverse of subset_index for subsets of size k.
SubsetMask subset_at(std::uint64_t index, int k);
/// Next mask with the same popcount in numeric order.
SubsetMask next_subset(SubsetMask mask);
std::uint64_t binomial64(int n, int k);

/// Rank sets and incidence matrices of one poset, enumerated on demand and cached.
/// Safe to share between threads.
class Poset {
 public:
  explicit Poset(PosetSpec spec, std::size_t max_rank_size = kDefaultMaxRankSize);

  const PosetSpec& spec() const { return spec_; }
  std::size_t max_rank_size() const { return max_rank_size_; }
  /// Field GF(q) for projective posets, nullptr for boolean.
  const GaloisField* field() const { return field_.get(); }

  /// |Q_k| as a machine integer; throws ResourceError above the cap.
  std::size_t size(int k) const;

  /// Sorted masks of size k. Boolean only.
  const std::vector<SubsetMask>& subsets(int k) const;
  /// Sorted canonical subspaces of dimension k. Projective only.
  const std::vector<Subspace>& subspaces(int k) const;

  std::vector<RankElement> elements(int k) const;

  /// Position of x in its rank's basis order.
  std::size_t index_of(const RankElement& x) const;
  std::size_t index_of(SubsetMask x) const { return static_cast<std::size_t>(subset_index(x)); }
  std::size_t index_of(const Subspace& x) const;

  /// Canonical re-encoding of an element.
  RankElement canonical(const RankElement& x) const;

  /// y <= x in the poset.
  bool contains(const RankElement& x, const RankElement& y) const;

  /// Incidence map M_k -> M_{k-1} over GF(p), 1 <= k <= n.
  SparseMat boundary(int k, const FieldSpec& field) const;
  /// Integer 0/1 matrix with (y, x) = 1 iff y <= x, rk x = k, rk y = k - i.
  SparseMat incidence(int k, int i) const;

 private:
  void check_rank(int k) const;
  /// For each element x of rank k, the indices of its subobjects of rank k - i.
  std::vector<std::vector<std::uint32_t>> below(int k, int i) const;

  PosetSpec spec_;
  std::size_t max_rank_size_;
  std::unique_ptr<GaloisField> field_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<SubsetMask>> subsets_;
  mutable std::map<int, std::vector<Subspace>> subspaces_;
  // subspaces of GF(q)^k, needed to enumerate the subobjects of a k-space
  mutable std::map<int, std::unique_ptr<Poset>> local_;
};

std::vector<RankElement> enumerate_rank(const PosetSpec& spec, int k,
                                        std::size_t max_rank_size = kDefaultMaxRankSize);
SparseMat boundary_matrix(const PosetSpec& spec, int k, const FieldSpec& field,
                          std::size_t max_rank_size = kDefaultMaxRankSize);
SparseMat incidence_matrix(const PosetSpec& spec, int k, int i,
                           std::size_t max_rank_size = kDefaultMaxRankSize);

}  // namespace posethom
