#pragma once

// Exact small-integer number theory shared by every module.

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace polarglue {

using BigInt = mpz_class;

/// Representative of a mod m in [0, m); m > 0.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Representative of a mod m in (-m/2, m/2].
constexpr std::int64_t symmetric_mod(std::int64_t a, std::int64_t m) noexcept {
  std::int64_t r = floor_mod(a, m);
  return 2 * r > m ? r - m : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept {
  auto r = static_cast<__int128>(floor_mod(a, m)) * floor_mod(b, m) % m;
  return static_cast<std::int64_t>(r);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m) noexcept;

/// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) noexcept;

/// A square root of a mod the odd prime p (Tonelli-Shanks), or nullopt for a non-residue.
std::optional<std::int64_t> sqrt_mod_prime(std::int64_t a, std::int64_t p) noexcept;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n) noexcept;
BigInt isqrt(const BigInt& n);

bool is_perfect_square(std::int64_t n) noexcept;
bool is_perfect_square(const BigInt& n);

/// Largest k with p^k | n; n != 0, p >= 2.
int valuation(std::int64_t n, std::int64_t p) noexcept;
int valuation(const BigInt& n, std::int64_t p);

/// p^k, throwing Overflow when it does not fit in int64.
std::int64_t checked_pow(std::int64_t p, int k);

/// Narrow a 128-bit or big intermediate, throwing Overflow when out of range.
std::int64_t narrow(__int128 v);
std::int64_t narrow(const BigInt& v);

}  // namespace polarglue
