#include "posethom/galois_field.hpp"

#include <algorithm>
#include <string>

#include "posethom/errors.hpp"
#include "posethom/qarith.hpp"

namespace posethom {

namespace {

struct PrimePower {
  std::uint32_t q;
  std::uint32_t p;
  std::uint32_t e;
  // monic irreducible modulus, coefficients of x^0 .. x^(e-1)
  std::vector<std::uint32_t> modulus;
};

const std::vector<PrimePower>& prime_powers() {
  static const std::vector<PrimePower> table = {
      {4, 2, 2, {1, 1}},        // x^2 + x + 1
      {8, 2, 3, {1, 1, 0}},     // x^3 + x + 1
      {9, 3, 2, {1, 0}},        // x^2 + 1
      {16, 2, 4, {1, 1, 0, 0}}, // x^4 + x + 1
  };
  return table;
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e);
  for (auto& x : d) {
    x = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

bool GaloisField::supported(std::uint32_t q) {
  if (q < 256 && is_prime(q)) return true;
  return std::any_of(prime_powers().begin(), prime_powers().end(),
                     [q](const PrimePower& pp) { return pp.q == q; });
}

GaloisField::GaloisField(std::uint32_t q) : q_(q), p_(q) {
  if (!supported(q))
    throw ArgumentError("GF(" + std::to_string(q) + ") is not supported (primes < 256, 4, 8, 9, 16)");
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  if (is_prime(q)) {
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<GfElem>((a + b) % q);
        mul_[a * q + b] = static_cast<GfElem>((a * b) % q);
      }
  } else {
    const auto& pp = *std::find_if(prime_powers().begin(), prime_powers().end(),
                                   [q](const PrimePower& x) { return x.q == q; });
    p_ = pp.p;
    const std::uint32_t p = pp.p;
    const std::uint32_t e = pp.e;
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto da = digits(a, p, e);
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto db = digits(b, p, e);
        std::vector<std::uint32_t> sum(e);
        for (std::uint32_t t = 0; t < e; ++t) sum[t] = (da[t] + db[t]) % p;
        add_[a * q + b] = static_cast<GfElem>(undigits(sum, p));

        std::vector<std::uint32_t> prod(2 * e - 1, 0);
        for (std::uint32_t s = 0; s < e; ++s)
          for (std::uint32_t t = 0; t < e; ++t) prod[s + t] = (prod[s + t] + da[s] * db[t]) % p;
        // x^e = -(modulus) reduces degrees >= e
        for (std::uint32_t deg = 2 * e - 2; deg >= e; --deg) {
          const std::uint32_t c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          for (std::uint32_t t = 0; t < e; ++t)
            prod[deg - e + t] = (prod[deg - e + t] + (p - c) * pp.modulus[t]) % p;
        }
        prod.resize(e);
        mul_[a * q + b] = static_cast<GfElem>(undigits(prod, p));
      }
    }
  }

  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<GfElem>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<GfElem>(b);
    }
  for (std::uint32_t a = 1; a < q; ++a)
    if (mul_[a * q + inv_[a]] != 1)
      throw ConsistencyError("GF(" + std::to_string(q) + "): element without inverse");
}

std::size_t GaloisField::rref(std::span<GfElem> m, std::size_t rows, std::size_t cols) const {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + pivot * cols, m.begin() + (pivot + 1) * cols, m.begin() + rank * cols);
    const GfElem scale = inv(m[rank * cols + c]);
    for (std::size_t t = 0; t < cols; ++t) m[rank * cols + t] = mul(m[rank * cols + t], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const GfElem f = m[r * cols + c];
      if (f == 0) continue;
      for (std::size_t t = 0; t < cols; ++t)
        m[r * cols + t] = sub(m[r * cols + t], mul(f, m[rank * cols + t]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace posethom
