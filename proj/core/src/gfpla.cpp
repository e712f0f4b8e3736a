#include "posethom/gfpla.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "posethom/errors.hpp"

namespace posethom {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

void require_prime_modulus(const SparseMat& m, const char* op) {
  if (m.modulus() == 0 || !is_prime(m.modulus()))
    throw ArgumentError(std::string(op) + ": matrix modulus " + std::to_string(m.modulus()) + " is not prime");
}

}  // namespace

std::size_t rank(const SparseMat& m) {
  if (m.is_zero()) return 0;
  require_prime_modulus(m, "rank");
  const std::uint64_t p = m.modulus();

  // Reduced columns keyed by their leading (smallest) row index; leading coefficient 1.
  struct Pivot {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> values;
  };
  std::vector<std::int64_t> pivot_of(m.rows(), -1);
  std::vector<Pivot> pivots;
  std::vector<std::uint64_t> acc(m.rows(), 0);
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;

  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto rows = m.col_rows(c);
    if (rows.empty()) continue;
    const auto vals = m.col_values(c);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      acc[rows[t]] = vals[t];
      heap.push(rows[t]);
    }
    while (!heap.empty()) {
      const std::uint32_t lead = heap.top();
      while (!heap.empty() && heap.top() == lead) heap.pop();
      if (acc[lead] == 0) continue;
      if (pivot_of[lead] >= 0) {
        const Pivot& piv = pivots[static_cast<std::size_t>(pivot_of[lead])];
        const std::uint64_t coef = acc[lead];
        for (std::size_t t = 0; t < piv.rows.size(); ++t) {
          const std::uint32_t r = piv.rows[t];
          if (acc[r] == 0) heap.push(r);
          acc[r] = (acc[r] + (p - coef) * piv.values[t]) % p;
        }
        continue;
      }
      // New pivot: everything still nonzero in acc is at rows >= lead and in the heap.
      Pivot piv;
      const std::uint64_t inv = inverse_mod(acc[lead], p);
      piv.rows.push_back(lead);
      piv.values.push_back(1);
      acc[lead] = 0;
      while (!heap.empty()) {
        const std::uint32_t r = heap.top();
        while (!heap.empty() && heap.top() == r) heap.pop();
        if (acc[r] == 0) continue;
        piv.rows.push_back(r);
        piv.values.push_back(static_cast<std::uint32_t>(acc[r] * inv % p));
        acc[r] = 0;
      }
      pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
      pivots.push_back(std::move(piv));
    }
  }
  return pivots.size();
}

SparseMat matmul(const SparseMat& a, const SparseMat& b) {
  if (a.cols() != b.rows())
    throw ArgumentError("matmul: shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.modulus() != b.modulus())
    throw ArgumentError("matmul: modulus mismatch " + std::to_string(a.modulus()) + " vs " +
                        std::to_string(b.modulus()));
  require_prime_modulus(a, "matmul");
  const std::uint64_t p = a.modulus();

  std::vector<SparseMat::Entry> out;
  std::vector<std::uint64_t> acc(a.rows(), 0);
  std::vector<char> seen(a.rows(), 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    const auto brows = b.col_rows(c);
    const auto bvals = b.col_values(c);
    for (std::size_t t = 0; t < brows.size(); ++t) {
      const auto arows = a.col_rows(brows[t]);
      const auto avals = a.col_values(brows[t]);
      for (std::size_t u = 0; u < arows.size(); ++u) {
        const std::uint32_t r = arows[u];
        if (!seen[r]) {
          seen[r] = 1;
          touched.push_back(r);
        }
        acc[r] = (acc[r] + std::uint64_t{avals[u]} * bvals[t]) % p;
      }
    }
    for (auto r : touched) {
      if (acc[r] != 0) out.push_back({r, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(acc[r])});
      acc[r] = 0;
      seen[r] = 0;
    }
    touched.clear();
  }
  return SparseMat::from_triplets(a.rows(), b.cols(), a.modulus(), std::move(out));
}

SparseMat power_boundary(const Poset& poset, int k, int i, const FieldSpec& field) {
  if (i < 1) throw ArgumentError("power_boundary: i must be positive, got " + std::to_string(i));
  const int n = poset.spec().n();
  const std::size_t rows = poset.size(k - i);
  const std::size_t cols = poset.size(k);
  if (k < 0 || k > n || k - i < 0) return SparseMat(rows, cols, field.p());
  SparseMat result = poset.boundary(k, field);
  for (int t = k - 1; t > k - i; --t) result = matmul(poset.boundary(t, field), result);
  return result;
}

SparseMat power_boundary(const PosetSpec& spec, int k, int i, const FieldSpec& field, std::size_t max_rank_size) {
  return power_boundary(Poset(spec, max_rank_size), k, i, field);
}

}  // namespace posethom
