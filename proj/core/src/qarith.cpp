#include "posethom/qarith.hpp"

#include <string>

#include "posethom/errors.hpp"

namespace posethom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw ArgumentError("field characteristic " + std::to_string(p) + " is not prime");
  // matrix products are accumulated in 64 bits
  if (p >= (1u << 16)) throw ArgumentError("field characteristic " + std::to_string(p) + " too large");
}

BigInt q_int(long long i, long long q) {
  if (i < 1) throw ArgumentError("q_int: i must be >= 1, got " + std::to_string(i));
  if (q < 1) throw ArgumentError("q_int: q must be >= 1, got " + std::to_string(q));
  BigInt sum = 0;
  BigInt power = 1;
  for (long long t = 0; t < i; ++t) {
    sum += power;
    power *= q;
  }
  return sum;
}

BigInt q_factorial(long long i, long long q) {
  if (i < 0) throw ArgumentError("q_factorial: i must be >= 0, got " + std::to_string(i));
  if (q < 1) throw ArgumentError("q_factorial: q must be >= 1, got " + std::to_string(q));
  BigInt result = 1;
  for (long long t = 1; t <= i; ++t) result *= q_int(t, q);
  return result;
}

BigInt gauss_binom(long long n, long long k, long long q) {
  if (q < 1) throw ArgumentError("gauss_binom: q must be >= 1, got " + std::to_string(q));
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // prod_{t<k} |n-t|_q / |t+1|_q, dividing once at the end
  BigInt num = 1;
  BigInt den = 1;
  for (long long t = 0; t < k; ++t) {
    num *= q_int(n - t, q);
    den *= q_int(t + 1, q);
  }
  if (num % den != 0) throw ConsistencyError("gauss_binom: inexact division");
  return num / den;
}

std::uint64_t q_int_mod(long long i, std::uint64_t q, std::uint64_t p) {
  if (i < 1) throw ArgumentError("q_int_mod: i must be >= 1");
  std::uint64_t s = 0;
  const std::uint64_t qm = q % p;
  for (long long t = 0; t < i; ++t) s = (s * qm + 1) % p;
  return s;
}

std::uint64_t q_factorial_mod(long long i, std::uint64_t q, std::uint64_t p) {
  if (i < 0) throw ArgumentError("q_factorial_mod: i must be >= 0");
  std::uint64_t result = 1 % p;
  std::uint64_t s = 0;
  const std::uint64_t qm = q % p;
  for (long long t = 1; t <= i; ++t) {
    s = (s * qm + 1) % p;
    result = result * s % p;
  }
  return result;
}

namespace {

void check_char_args(std::uint32_t p, std::uint64_t q) {
  if (!is_prime(p)) throw ArgumentError("quantum_char: " + std::to_string(p) + " is not prime");
  if (q < 1) throw ArgumentError("quantum_char: q must be >= 1");
  if (q % p == 0)
    throw IncompatibilityError("quantum_char: p=" + std::to_string(p) + " divides q=" + std::to_string(q));
}

}  // namespace

int quantum_char(std::uint32_t p, std::uint64_t q) {
  check_char_args(p, q);
  // |pi|_q = q |pi-1|_q + 1; the answer never exceeds p
  const std::uint64_t qm = q % p;
  std::uint64_t s = 0;
  for (std::uint32_t pi = 1; pi <= p; ++pi) {
    s = (s * qm + 1) % p;
    if (s == 0) return static_cast<int>(pi);
  }
  throw ConsistencyError("quantum_char: no pi <= p found for p=" + std::to_string(p) +
                         ", q=" + std::to_string(q));
}

int quantum_char_by_order(std::uint32_t p, std::uint64_t q) {
  check_char_args(p, q);
  const std::uint64_t qm = q % p;
  if (qm == 1) return static_cast<int>(p);
  std::uint64_t x = qm;
  int order = 1;
  while (x != 1) {
    x = x * qm % p;
    ++order;
  }
  return order;
}

}  // namespace posethom
