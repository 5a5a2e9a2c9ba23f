#include "polarglue/arith.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "polarglue/error.hpp"

namespace polarglue {

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m) noexcept {
  if (m == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = floor_mod(base, m);
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exponent >>= 1U;
  }
  return result;
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) noexcept {
  __int128 old_r = floor_mod(a, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 quot = old_r / r;
    __int128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return floor_mod(static_cast<std::int64_t>(old_s % m), m);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod_u(r, b, m);
    b = mulmod_u(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is exact below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t isqrt(std::int64_t n) noexcept {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

BigInt isqrt(const BigInt& n) {
  if (n <= 0) return 0;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(std::int64_t n) noexcept {
  if (n < 0) return false;
  std::int64_t r = isqrt(n);
  return r * r == n;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int valuation(std::int64_t n, std::int64_t p) noexcept {
  int k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

int valuation(const BigInt& n, std::int64_t p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  BigInt m = n;
  BigInt prime = static_cast<long>(p);
  int k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t()) != 0) {
    m /= prime;
    ++k;
  }
  return k;
}

std::int64_t checked_pow(std::int64_t p, int k) {
  __int128 r = 1;
  for (int i = 0; i < k; ++i) {
    r *= p;
    if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::Overflow, "power does not fit in 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t narrow(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::Overflow, "value does not fit in 64 bits");
  return v.get_si();
}

std::optional<std::int64_t> sqrt_mod_prime(std::int64_t a, std::int64_t p) noexcept {
  a = floor_mod(a, p);
  if (a == 0) return 0;
  const auto half = static_cast<std::uint64_t>((p - 1) / 2);
  if (pow_mod(a, half, p) != 1) return std::nullopt;
  std::uint64_t odd = static_cast<std::uint64_t>(p - 1);
  int twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  std::int64_t z = 2;
  while (pow_mod(z, half, p) != p - 1) ++z;
  std::int64_t c = pow_mod(z, odd, p);
  std::int64_t x = pow_mod(a, (odd + 1) / 2, p);
  std::int64_t t = pow_mod(a, odd, p);
  int m = twos;
  while (t != 1) {
    int i = 0;
    for (std::int64_t t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
    std::int64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    x = mul_mod(x, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    m = i;
  }
  return x;
}

}  // namespace polarglue
