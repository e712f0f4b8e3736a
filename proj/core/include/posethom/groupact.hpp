#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "posethom/galois_field.hpp"
#include "posethom/permutation.hpp"
#include "posethom/poset.hpp"
#include "posethom/qarith.hpp"
#include "posethom/series.hpp"

namespace posethom {

inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

/// An invertible n x n matrix over GF(q), acting on column vectors.
class GfMatrix {
 public:
  GfMatrix(std::shared_ptr<const GaloisField> field, int n, std::vector<GfElem> entries);
  static GfMatrix identity(std::shared_ptr<const GaloisField> field, int n);

  int n() const { return n_; }
  const GaloisField& field() const { return *field_; }
  const std::shared_ptr<const GaloisField>& field_ptr() const { return field_; }
  GfElem at(int r, int c) const { return entries_[static_cast<std::size_t>(r * n_ + c)]; }
  const std::vector<GfElem>& entries() const { return entries_; }

  bool is_invertible() const;

  friend GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);
  friend bool operator==(const GfMatrix& a, const GfMatrix& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

 private:
  std::shared_ptr<const GaloisField> field_;
  int n_;
  std::vector<GfElem> entries_;
};

using GroupElement = std::variant<Perm, GfMatrix>;

enum class GroupKind { permutation, matrix };

/// A permutation group on {1..degree} or a matrix group in GL(n, q), given by generators.
class Group {
 public:
  static Group permutation_group(std::size_t degree, std::vector<Perm> generators);
  static Group matrix_group(int n, int q, std::vector<GfMatrix> generators);

  GroupKind kind() const { return kind_; }
  /// Permutation degree, or matrix dimension.
  int degree() const { return degree_; }
  int n() const { return degree_; }
  /// Field size for matrix groups, 1 for permutation groups.
  int q() const { return q_; }

  const std::vector<Perm>& permutations() const { return permutations_; }
  const std::vector<GfMatrix>& matrices() const { return matrices_; }
  std::shared_ptr<const GaloisField> field() const { return field_; }
  std::vector<GroupElement> generators() const;

  /// Order stated in the group file, if any (verified by parse_group when feasible).
  const std::optional<BigInt>& declared_order() const { return declared_order_; }
  void set_declared_order(BigInt order) { declared_order_ = std::move(order); }

  /// Whether this group acts on the poset (permutations of degree n on
  /// boolean:n, matrices of GL(n,q) on projective:n,q).
  bool acts_on(const PosetSpec& spec) const;

 private:
  GroupKind kind_ = GroupKind::permutation;
  int degree_ = 0;
  int q_ = 1;
  std::vector<Perm> permutations_;
  std::vector<GfMatrix> matrices_;
  std::shared_ptr<const GaloisField> field_;
  std::optional<BigInt> declared_order_;
};

/// Reads a group file:
///   {"kind":"permutation","degree":24,"generators":["(1,2,3)(4,5)", ...], "order": ...}
///   {"kind":"matrix","n":3,"q":2,"generators":[[[1,0,0],[0,1,0],[0,0,1]], ...]}
/// Permutation generators may also be 1-based image lists. A stated "order" is
/// checked against the computed one (for matrix groups only when the closure fits the cap).
Group parse_group(std::string_view json_text, std::size_t max_group_order = kDefaultMaxGroupOrder);

/// |G|: Schreier-Sims for permutation groups, breadth-first closure for matrix groups.
BigInt group_order(const Group& g, std::size_t max_group_order = kDefaultMaxGroupOrder);

/// All elements by breadth-first closure of the generators. Permutation groups only.
std::vector<Perm> enumerate_elements(const Group& g, std::size_t max_group_order = kDefaultMaxGroupOrder);

/// Number of k-subsets fixed by an element of the given cycle type: the
/// coefficient of t^k in prod_c (1 + t^c).
BigInt fix_count_subsets(const Partition& cycle_type, int k);

/// N_0..N_n by averaging fixed k-subsets over all elements.
OrbitSeries burnside_counts(const Group& g, const PosetSpec& spec,
                            std::size_t max_group_order = kDefaultMaxGroupOrder);

/// Orbits of the group on the rank-k elements by union-find over generator images.
std::uint64_t orbit_count_unionfind(const Group& g, const Poset& poset, int k);
std::uint64_t orbit_count_unionfind(const Group& g, const PosetSpec& spec, int k,
                                    std::size_t max_rank_size = kDefaultMaxRankSize);
/// All ranks 0..n.
OrbitSeries orbit_series_unionfind(const Group& g, const Poset& poset);

/// Image of a rank element; the result is canonical and has the same rank.
/// Left action: act(g*h, x) == act(g, act(h, x)).
SubsetMask act(const Perm& g, SubsetMask x);
Subspace act(const GfMatrix& g, const Subspace& x);
RankElement act(const GroupElement& g, const RankElement& x, const PosetSpec& spec);

}  // namespace posethom
