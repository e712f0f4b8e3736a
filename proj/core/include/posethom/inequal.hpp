#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posethom/homology.hpp"
#include "posethom/series.hpp"

namespace posethom {

/// [c_k]_pi: sum of c over in-range indices congruent to k mod pi.
std::int64_t fold(const Series& c, int pi, int k);

struct FoldedChainResult {
  int n = 0;
  int pi = 0;
  int m = 0;
  int s = 0;
  /// folded[r] = [c_{m-r}]_pi for r = 0..s.
  std::vector<std::int64_t> folded;
  bool pass = true;
  /// Smallest r with folded[r-1] < folded[r].
  std::optional<int> first_violation;
};

/// [c_m] >= [c_{m-1}] >= ... >= [c_{m-s}] >= 0 with m = n/2, s = pi/2.
FoldedChainResult check_chain(const Series& c, int pi);

struct LwResult {
  bool pass = true;
  /// First (k, l) with k <= l, k + l <= n and c_k > c_l.
  std::optional<std::pair<int, int>> first_violation;
};

LwResult check_lw(const Series& c);

struct PalindromeResult {
  bool pass = true;
  std::optional<int> first_violation;
};

PalindromeResult check_palindrome(const Series& c);

/// In-range index sets congruent to m - r mod pi, r = 0..s, each ascending.
std::vector<std::vector<int>> symbolic_chain(int n, int pi);

struct PairCheck {
  int a = 0;
  int b = 0;
  /// Position of the window slot, the only place the sequence can carry homology.
  int d = 0;
  std::optional<int> homology_index;
  std::int64_t fold_a = 0;
  std::int64_t fold_b = 0;
  bool pass = true;
};

/// [c_a] <= [c_b] when d is even, [c_b] <= [c_a] when d is odd, equality if the sequence is exact.
PairCheck check_pair(const Series& c, const SequenceLayout& layout);

struct BoundsStep {
  std::string rule;
  int k = 0;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::string reason;
};

struct BoundsReport {
  int n = 0;
  std::vector<int> pis;
  std::vector<std::int64_t> lower;
  std::vector<BoundsStep> log;
};

/// Lower bounds for orbit numbers N_0..N_n from N_k >= 1, symmetry,
/// Livingstone-Wagner and the folded chain of every pi in pis.
BoundsReport deduce_bounds(int n, const std::vector<int>& pis);

}  // namespace posethom
