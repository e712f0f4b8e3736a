#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace posethom {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// A prime field GF(p). Primality is checked on construction.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

/// |i|_q = 1 + q + ... + q^(i-1). Requires i >= 1 and q >= 1.
BigInt q_int(long long i, long long q);

/// (i!)_q = |1|_q |2|_q ... |i|_q, with (0!)_q = 1.
BigInt q_factorial(long long i, long long q);

/// Number of k-subspaces of GF(q)^n, or of k-subsets of an n-set when q = 1.
/// Zero when k < 0 or k > n.
BigInt gauss_binom(long long n, long long k, long long q);

/// |i|_q mod p and (i!)_q mod p without big integers.
std::uint64_t q_int_mod(long long i, std::uint64_t q, std::uint64_t p);
std::uint64_t q_factorial_mod(long long i, std::uint64_t q, std::uint64_t p);

/// Quantum characteristic: the least pi > 0 with |pi|_q = 0 mod p.
/// Found by direct search over the definition. Throws IncompatibilityError if p | q.
int quantum_char(std::uint32_t p, std::uint64_t q);

/// Same value by the number-theoretic route: p when q = 1 mod p, otherwise the
/// multiplicative order of q mod p. Kept as an independent cross-check.
int quantum_char_by_order(std::uint32_t p, std::uint64_t q);

}  // namespace posethom
