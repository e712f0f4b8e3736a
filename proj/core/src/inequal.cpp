#include "posethom/inequal.hpp"

#include <numeric>

#include "posethom/errors.hpp"

namespace posethom {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

std::string index_set_name(const std::vector<int>& set) {
  std::string s;
  for (int v : set) {
    if (!s.empty()) s += '+';
    s += "N_" + std::to_string(v);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::int64_t fold(const Series& c, int pi, int k) {
  if (pi < 1) throw ArgumentError("fold: pi must be >= 1");
  std::int64_t sum = 0;
  for (int t = mod(k, pi); t <= c.n(); t += pi) sum += c[t];
  return sum;
}

FoldedChainResult check_chain(const Series& c, int pi) {
  if (pi < 2) throw ArgumentError("check_chain: pi must be >= 2");
  FoldedChainResult r;
  r.n = c.n();
  r.pi = pi;
  r.m = r.n / 2;
  r.s = pi / 2;
  for (int t = 0; t <= r.s; ++t) r.folded.push_back(fold(c, pi, r.m - t));
  for (int t = 1; t <= r.s; ++t)
    if (r.folded[static_cast<std::size_t>(t - 1)] < r.folded[static_cast<std::size_t>(t)]) {
      r.pass = false;
      r.first_violation = t;
      break;
    }
  if (r.folded.back() < 0) {
    r.pass = false;
    if (!r.first_violation) r.first_violation = r.s;
  }
  return r;
}

LwResult check_lw(const Series& c) {
  const int n = c.n();
  for (int k = 0; k <= n; ++k)
    for (int l = k; k + l <= n; ++l)
      if (c[k] > c[l]) return {false, std::make_pair(k, l)};
  return {};
}

PalindromeResult check_palindrome(const Series& c) {
  const int n = c.n();
  for (int k = 0; k <= n; ++k)
    if (c[k] != c[n - k]) return {false, k};
  return {};
}

std::vector<std::vector<int>> symbolic_chain(int n, int pi) {
  if (pi < 2) throw ArgumentError("symbolic_chain: pi must be >= 2");
  if (n < 0) throw ArgumentError("symbolic_chain: n must be >= 0");
  const int m = n / 2;
  std::vector<std::vector<int>> out;
  for (int r = 0; r <= pi / 2; ++r) {
    std::vector<int> set;
    for (int t = mod(m - r, pi); t <= n; t += pi) set.push_back(t);
    out.push_back(std::move(set));
  }
  return out;
}

PairCheck check_pair(const Series& c, const SequenceLayout& layout) {
  PairCheck r;
  r.a = layout.a;
  r.b = layout.b;
  r.fold_a = fold(c, layout.pi, layout.a);
  r.fold_b = fold(c, layout.pi, layout.b);
  // the only homology that can survive sits at the window slot
  for (int x : layout.indices) {
    if (x < 0 || x > layout.n) continue;
    const int step = (x - layout.j) % layout.pi == 0 ? layout.i : layout.pi - layout.i;
    if (!vanishing_window(layout.n, layout.pi, x, step)) continue;
    r.homology_index = x;
    r.d = std::abs(layout.offset_of(x));
  }
  if (!r.homology_index)
    r.pass = r.fold_a == r.fold_b;
  else
    r.pass = r.d % 2 == 0 ? r.fold_a <= r.fold_b : r.fold_b <= r.fold_a;
  return r;
}

BoundsReport deduce_bounds(int n, const std::vector<int>& pis) {
  if (n < 0) throw ArgumentError("deduce_bounds: n must be >= 0");
  for (int pi : pis)
    if (pi < 2) throw ArgumentError("deduce_bounds: every pi must be >= 2, got " + std::to_string(pi));

  BoundsReport rep;
  rep.n = n;
  rep.pis = pis;
  rep.lower.assign(static_cast<std::size_t>(n) + 1, 0);
  auto& L = rep.lower;

  const auto raise = [&](int k, std::int64_t value, const char* rule, std::string reason) {
    auto& slot = L[static_cast<std::size_t>(k)];
    if (value <= slot) return false;
    rep.log.push_back({rule, k, slot, value, std::move(reason)});
    slot = value;
    return true;
  };

  std::vector<std::vector<std::vector<int>>> chains;
  for (int pi : pis) chains.push_back(symbolic_chain(n, pi));

  const int cap = std::max(4 * n, 4);
  for (int round = 0;; ++round) {
    if (round == cap) throw ConsistencyError("deduce_bounds: no fixpoint after " + std::to_string(cap) + " rounds");
    bool changed = false;

    for (int k = 0; k <= n; ++k) changed |= raise(k, 1, "R1", "rank set nonempty");

    for (int k = 0; k <= n; ++k)
      changed |= raise(k, L[static_cast<std::size_t>(n - k)], "R2", "N_" + std::to_string(k) + " = N_" + std::to_string(n - k));

    for (int k = 0; k <= n; ++k)
      for (int l = k + 1; k + l <= n; ++l)
        changed |= raise(l, L[static_cast<std::size_t>(k)], "R3",
                         "N_" + std::to_string(l) + " >= N_" + std::to_string(k));

    for (std::size_t c = 0; c < chains.size(); ++c) {
      const auto& chain = chains[c];
      for (std::size_t r = 1; r < chain.size(); ++r) {
        if (chain[r - 1].size() != 1) continue;
        const int u = chain[r - 1].front();
        std::int64_t sum = 0;
        for (int v : chain[r]) sum += L[static_cast<std::size_t>(v)];
        changed |= raise(u, sum, "R4",
                         "pi=" + std::to_string(pis[c]) + ": N_" + std::to_string(u) + " >= " + index_set_name(chain[r]));
      }
    }
    if (!changed) break;
  }
  return rep;
}

}  // namespace posethom
