#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "posethom/poset.hpp"
#include "posethom/qarith.hpp"
#include "posethom/sparse_mat.hpp"

namespace posethom {

/// The two-class sequence through M_j for d^i and d^(pi-i):
///   ... <- M_{j-pi} <- M_{j-i} <- M_j <- M_{j+pi-i} <- M_{j+pi} <- ...
struct SequenceLayout {
  int j = 0;
  int i = 0;
  int pi = 0;
  int n = 0;
  /// Indices of the sequence inside a window covering 0..n and the initial arrow.
  std::vector<int> indices;
  /// Initial arrow M_a <- M_b: the unique consecutive pair with 0 <= a + b < pi.
  int a = 0;
  int b = 0;
  /// Signed arrow count from M_b to M_j, positive toward larger indices.
  int offset = 0;
  /// Position of M_j: arrow distance |offset| from the 0-position M_b.
  int d = 0;

  /// Signed offset of any module index of the sequence.
  int offset_of(int index) const;
  /// True iff index lies in the sequence's two residue classes.
  bool contains(int index) const;
};

SequenceLayout sequence_layout(int j, int i, int pi, int n);

/// n - pi < 2j - i < n. Outside this window the homology vanishes.
bool vanishing_window(int n, int pi, int j, int i);

struct TraceCheck {
  int j = 0;
  int i = 0;
  /// Dimension of the one non-vanishing homology of the sequence (0 if none).
  long long lhs = 0;
  /// (-1)^d ([dim M_b]_pi - [dim M_a]_pi).
  long long rhs = 0;
  /// Position of the homology used for lhs.
  int d = 0;
  /// Module index carrying the homology (j when the sequence is exact).
  int homology_index = 0;
  /// At most one homology of the sequence is nonzero.
  bool almost_exact = true;
  bool pass = false;
};

struct HomologyRecord {
  int j = 0;
  int i = 0;
  long long dim = 0;
  bool in_window = false;
  TraceCheck trace;
  bool pass = false;
};

struct HomologyReport {
  PosetSpec spec;
  std::uint32_t p = 0;
  int pi = 0;
  std::vector<HomologyRecord> records;
  bool pass = false;
};

/// Result of checking d^pi = 0 and d^i = (i!)_q * incidence(k, i) mod p.
struct OperatorIdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Homology of the incidence sequence of one poset over GF(p), with cached
/// operator powers and ranks. Safe to share between threads.
class HomologyEngine {
 public:
  HomologyEngine(const Poset& poset, FieldSpec field);

  const Poset& poset() const { return poset_; }
  const FieldSpec& field() const { return field_; }
  int pi() const { return pi_; }

  /// d^i : M_k -> M_{k-i}.
  const SparseMat& power(int k, int i) const;
  std::size_t power_rank(int k, int i) const;

  /// dim (Ker d^i on M_j) / d^(pi-i)(M_{j+pi-i}).
  long long homology_dim(int j, int i) const;
  TraceCheck trace_check(int j, int i) const;
  HomologyReport scan() const;
  OperatorIdentityReport verify_operator_identities() const;

 private:
  void check_args(int j, int i) const;

  const Poset& poset_;
  FieldSpec field_;
  int pi_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const SparseMat>> powers_;
  mutable std::map<std::pair<int, int>, std::size_t> ranks_;
};

long long homology_dim(const PosetSpec& spec, const FieldSpec& field, int j, int i);
TraceCheck trace_check(const PosetSpec& spec, const FieldSpec& field, int j, int i);
HomologyReport homology_scan(const PosetSpec& spec, const FieldSpec& field,
                             std::size_t max_rank_size = kDefaultMaxRankSize);

}  // namespace posethom
