#include "polarglue/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "polarglue/error.hpp"

namespace polarglue {

std::int64_t PrimeFactorization::reconstruct() const {
  __int128 v = 1;
  for (auto [p, e] : factors) {
    for (int i = 0; i < e; ++i) v *= p;
  }
  return narrow(v * sign);
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

// Brent's variant; returns a nontrivial factor of composite n or 0.
u64 rho_factor(u64 n, u64 c, std::int64_t max_iter) {
  if (n % 2 == 0) return 2;
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::int64_t r = 1, iter = 0;
  const std::int64_t m = 128;
  auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
  do {
    x = y;
    for (std::int64_t i = 0; i < r; ++i) y = f(y);
    std::int64_t k = 0;
    do {
      ys = y;
      for (std::int64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
      iter += m;
    } while (k < r && g == 1 && iter < max_iter);
    r *= 2;
  } while (g == 1 && iter < max_iter);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return (g == 1 || g == n) ? 0 : g;
}

void split(u64 n, std::map<std::int64_t, int>& out, const FactorOptions& options) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[static_cast<std::int64_t>(n)];
    return;
  }
  for (u64 c = 1; c < 64; ++c) {
    u64 d = rho_factor(n, c, options.rho_iterations);
    if (d != 0) {
      split(d, out, options);
      split(n / d, out, options);
      return;
    }
  }
  throw Error(ErrorCode::FactorizationTimeout, "Pollard rho gave up on " + std::to_string(n));
}

}  // namespace

PrimeFactorization factor_integer(std::int64_t n, const FactorOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
  PrimeFactorization out;
  out.sign = n < 0 ? -1 : 1;
  u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  std::map<std::int64_t, int> found;
  for (u64 d = 2; d <= static_cast<u64>(options.trial_bound) && d * d <= m; d += (d == 2 ? 1 : 2)) {
    while (m % d == 0) {
      ++found[static_cast<std::int64_t>(d)];
      m /= d;
    }
  }
  if (m > 1) split(m, found, options);
  out.factors.assign(found.begin(), found.end());
  if (out.reconstruct() != n) throw Error(ErrorCode::FactorizationTimeout, "factorization failed to reconstruct");
  return out;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "kronecker symbol with n = 0");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    std::int64_t a8 = floor_mod(a, 8);
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a/n) for odd n > 0.
  a = floor_mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

SquarefreeDecomposition squarefree_decompose(std::int64_t n) {
  auto fac = factor_integer(n);
  std::int64_t square = 1, free = fac.sign;
  for (auto [p, e] : fac.factors) {
    for (int i = 0; i < e / 2; ++i) square *= p * p;
    if (e % 2 == 1) free *= p;
  }
  return {square, free};
}

int ell_adic_poly_divisibility(const IntPoly& f_a, const IntPoly& f_b, std::int64_t ell, int n_max) {
  if (!f_b.is_monic()) throw Error(ErrorCode::InvalidArgument, "f_b must be monic");
  if (n_max < 0 || n_max > 12) throw Error(ErrorCode::InvalidArgument, "n_max must lie in [0, 12]");
  int best = 0;
  BigInt modulus = 1;
  for (int n = 1; n <= n_max; ++n) {
    modulus *= static_cast<long>(ell);
    // Schoolbook long division in (Z/ell^n)[t]; f_b is monic so no inverses are needed.
    std::vector<BigInt> r(f_a.coefficients().begin(), f_a.coefficients().end());
    const int db = f_b.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
      BigInt c = r[static_cast<std::size_t>(i)] % modulus;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - db + j)];
        slot = (slot - c * f_b.coefficient(j)) % modulus;
      }
    }
    bool zero = true;
    for (int i = 0; i < db && i < static_cast<int>(r.size()); ++i) {
      if (r[static_cast<std::size_t>(i)] % modulus != 0) zero = false;
    }
    if (!zero) break;
    best = n;
  }
  return best;
}

}  // namespace polarglue
