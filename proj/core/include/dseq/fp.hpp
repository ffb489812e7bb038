#ifndef DSEQ_FP_HPP
#define DSEQ_FP_HPP

#include <cstdint>

#include "dseq/errors.hpp"

namespace dseq::fp {

// Arithmetic in F_p for an odd prime p < 2^31.  Residues are kept in
// [0, p); products fit in int64_t without overflow.

inline std::int64_t reduce(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t add(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a - b;
  return s < 0 ? s + p : s;
}

inline std::int64_t neg(std::int64_t a, std::int64_t p) { return a == 0 ? 0 : p - a; }

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;
}

inline std::int64_t pow(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t acc = 1 % p;
  base = reduce(base, p);
  while (e > 0) {
    if (e & 1) acc = mul(acc, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return acc;
}

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0) throw input_error("division by zero in F_p");
  return pow(a, p - 2, p);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace dseq::fp

#endif
