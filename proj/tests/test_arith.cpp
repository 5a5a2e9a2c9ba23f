#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "polarglue/arith.hpp"
#include "polarglue/error.hpp"

using namespace polarglue;

TEST_CASE("floor and symmetric residues") {
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(7, 3) == 1);
  CHECK(symmetric_mod(8, 9) == -1);
  CHECK(symmetric_mod(4, 9) == 4);
  CHECK(symmetric_mod(5, 9) == -4);
  CHECK(symmetric_mod(-1, 2) == 1);
}

TEST_CASE("modular powers and inverses") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(*inverse_mod(3, 7) == 5);
  CHECK(*inverse_mod(-2, 9) == 4);
  CHECK_FALSE(inverse_mod(6, 9).has_value());
  const std::int64_t big = (std::int64_t{1} << 61) - 1;
  CHECK(pow_mod(3, static_cast<std::uint64_t>(big - 1), big) == 1);
}

TEST_CASE("Miller-Rabin agrees with trial division") {
  for (std::int64_t n = 0; n < 20000; ++n) CHECK(is_prime(static_cast<std::uint64_t>(n)) == brute::is_prime(n));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(1000003ULL * 1000033ULL));
}

TEST_CASE("integer square roots") {
  for (std::int64_t n = 0; n < 5000; ++n) {
    std::int64_t r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(is_perfect_square(n) == (r * r == n));
  }
  CHECK_FALSE(is_perfect_square(std::int64_t{-4}));
  const std::int64_t big = 3037000499;
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
  BigInt huge = BigInt(1) << 200;
  CHECK(is_perfect_square(huge));
  CHECK_FALSE(is_perfect_square(BigInt(huge + 1)));
}

TEST_CASE("valuations and checked powers") {
  CHECK(valuation(std::int64_t{72}, 2) == 3);
  CHECK(valuation(std::int64_t{72}, 3) == 2);
  CHECK(valuation(std::int64_t{-27}, 3) == 3);
  CHECK(valuation(BigInt(1) << 100, 2) == 100);
  CHECK_THROWS_AS(valuation(BigInt(0), 3), Error);
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(10, 19), Error);
  CHECK_THROWS_AS(narrow(BigInt(1) << 70), Error);
  CHECK(narrow(static_cast<__int128>(-5)) == -5);
}

TEST_CASE("square roots modulo odd primes") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 41, 97, 113, 193, 65537}) {
    for (std::int64_t a = 0; a < std::min<std::int64_t>(p, 300); ++a) {
      auto r = sqrt_mod_prime(a, p);
      CHECK(r.has_value() == brute::is_square_mod(a, p));
      if (r) CHECK(mul_mod(*r, *r, p) == a);
    }
  }
  const std::int64_t big = (std::int64_t{1} << 61) - 1;
  auto r = sqrt_mod_prime(49, big);
  REQUIRE(r);
  CHECK(mul_mod(*r, *r, big) == 49);
}
