#pragma once

#include <cstddef>

#include "posethom/poset.hpp"
#include "posethom/qarith.hpp"
#include "posethom/sparse_mat.hpp"

namespace posethom {

/// Rank over GF(p) by exact column elimination. Deterministic.
std::size_t rank(const SparseMat& m);

/// cols - rank.
inline std::size_t nullity(const SparseMat& m) { return m.cols() - rank(m); }

/// Exact product a * b mod p. Throws ArgumentError on shape or modulus mismatch.
SparseMat matmul(const SparseMat& a, const SparseMat& b);

/// Matrix of d^i : M_k -> M_{k-i}, the product d_{k-i+1} ... d_k.
/// The shape is always |Q_{k-i}| x |Q_k|, so ranks outside 0..n give empty matrices.
SparseMat power_boundary(const Poset& poset, int k, int i, const FieldSpec& field);
SparseMat power_boundary(const PosetSpec& spec, int k, int i, const FieldSpec& field,
                         std::size_t max_rank_size = kDefaultMaxRankSize);

}  // namespace posethom
