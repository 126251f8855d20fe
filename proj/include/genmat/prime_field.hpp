#pragma once

#include <cstdint>
#include <stdexcept>

namespace genmat {

// Default modulus for generic-rank evaluation: the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1 && witness; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

// Arithmetic context for the prime field Z_p. Elements are plain uint64_t
// values in [0, p); all operations assume reduced inputs.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus = kDefaultPrime) : p_(modulus) {
    if (!detail::is_prime_u64(modulus)) {
      throw std::invalid_argument("PrimeField: modulus is not prime");
    }
    if (modulus >= (std::uint64_t{1} << 63)) {
      throw std::invalid_argument("PrimeField: modulus must be below 2^63");
    }
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;  // p < 2^63, so no overflow
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return detail::mulmod_u64(a, b, p_);
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const {
    return detail::powmod_u64(base, exp, p_);
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  // Reduces an arbitrary signed value into [0, p).
  std::uint64_t from_int(long long v) const {
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

 private:
  std::uint64_t p_;
};

}  // namespace genmat
