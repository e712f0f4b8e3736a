#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "posethom/sparse_mat.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

inline Dense to_dense(const posethom::SparseMat& m) {
  Dense d(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

inline std::int64_t modp(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = modp(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Row reduction on a dense copy.
inline std::size_t dense_rank(Dense a, std::int64_t p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && modp(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const auto inv = inv_mod(a[r][c], p);
    for (auto& v : a[r]) v = modp(v * inv, p);
    for (std::size_t t = 0; t < rows; ++t) {
      if (t == r) continue;
      const auto f = modp(a[t][c], p);
      if (!f) continue;
      for (std::size_t s = 0; s < cols; ++s) a[t][s] = modp(a[t][s] - f * a[r][s], p);
    }
    ++r;
  }
  return r;
}

inline Dense dense_mul(const Dense& a, const Dense& b, std::int64_t p) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Dense c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < m; ++j) c[i][j] = modp(c[i][j] + a[i][t] * b[t][j], p);
  return c;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
  return r;
}

// Subspaces of GF(p)^n (p prime) as sets of vectors, grown one vector at a time.
using Vec = std::vector<int>;
using VecSet = std::set<Vec>;

inline std::vector<Vec> all_vectors(int n, int p) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int t = 0;
    while (t < n && ++v[static_cast<std::size_t>(t)] == p) v[static_cast<std::size_t>(t++)] = 0;
    if (t == n) break;
  }
  return out;
}

inline VecSet extend(const VecSet& space, const Vec& v, int p) {
  VecSet out;
  for (const auto& u : space)
    for (int c = 0; c < p; ++c) {
      Vec w(u.size());
      for (std::size_t t = 0; t < u.size(); ++t) w[t] = (u[t] + c * v[t]) % p;
      out.insert(w);
    }
  return out;
}

inline std::vector<std::set<VecSet>> subspaces_by_dim(int n, int p) {
  const auto vecs = all_vectors(n, p);
  std::vector<std::set<VecSet>> by_dim(static_cast<std::size_t>(n) + 1);
  by_dim[0].insert(VecSet{Vec(static_cast<std::size_t>(n), 0)});
  for (int k = 1; k <= n; ++k)
    for (const auto& s : by_dim[static_cast<std::size_t>(k - 1)])
      for (const auto& v : vecs)
        if (!s.count(v)) by_dim[static_cast<std::size_t>(k)].insert(extend(s, v, p));
  return by_dim;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data(const std::string& rel) { return read_file(std::string(POSETHOM_DATA_DIR) + "/" + rel); }

}  // namespace oracle
