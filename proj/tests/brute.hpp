#pragma once

// Naive reference implementations for the tests. Nothing here calls the
// modular-polynomial code in the library.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "polarglue/polynomial.hpp"

namespace brute {

using Coeffs = std::vector<std::int64_t>;  // low degree first

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Coeffs reduce(const polarglue::IntPoly& f, std::int64_t m) {
  Coeffs c;
  for (const auto& x : f.coefficients()) {
    polarglue::BigInt r = x % m;
    if (r < 0) r += m;
    c.push_back(r.get_si());
  }
  return trim(c);
}

inline std::int64_t eval(const Coeffs& c, std::int64_t x, std::int64_t m) {
  std::int64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = mod(acc * x + c[i], m);
  return acc;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::int64_t m) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], m);
  return trim(r);
}

/// Division by a monic divisor mod m; returns {quotient, remainder}.
inline std::pair<Coeffs, Coeffs> divide(Coeffs a, const Coeffs& b, std::int64_t m) {
  a = trim(a);
  if (a.size() < b.size()) return {{}, a};
  Coeffs q(a.size() - b.size() + 1, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const std::int64_t c = a[shift + b.size() - 1];
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], m);
  }
  return {trim(q), trim(a)};
}

inline std::vector<std::int64_t> roots(const Coeffs& c, std::int64_t ell) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < ell; ++x)
    if (eval(c, x, ell) == 0) out.push_back(x);
  return out;
}

/// All monic polynomials of degree d mod ell.
inline std::vector<Coeffs> monics(int d, std::int64_t ell) {
  std::vector<Coeffs> out;
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) count *= ell;
  for (std::int64_t code = 0; code < count; ++code) {
    Coeffs c(static_cast<std::size_t>(d) + 1, 0);
    std::int64_t x = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = x % ell;
      x /= ell;
    }
    c[static_cast<std::size_t>(d)] = 1;
    out.push_back(c);
  }
  return out;
}

/// Irreducibility for degree <= 5 by trial division by every monic of degree <= deg/2.
inline bool irreducible(const Coeffs& f, std::int64_t ell) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d)
    for (const auto& g : monics(d, ell))
      if (divide(f, g, ell).second.empty()) return false;
  return true;
}

/// Factorization of a monic polynomial by trial division, sorted as the library sorts.
inline std::vector<std::pair<Coeffs, int>> factor(Coeffs f, std::int64_t ell) {
  std::vector<std::pair<Coeffs, int>> out;
  auto degree = [&] { return static_cast<int>(f.size()) - 1; };
  for (int d = 1; 2 * d <= degree(); ++d) {
    for (const auto& g : monics(d, ell)) {
      if (!irreducible(g, ell)) continue;
      int e = 0;
      for (;;) {
        auto [q, r] = divide(f, g, ell);
        if (!r.empty()) break;
        f = q;
        ++e;
      }
      if (e > 0) out.emplace_back(g, e);
    }
  }
  if (degree() >= 1) out.emplace_back(f, 1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

/// Z[t]/(t^2 + b t + c) is maximal at ell, decided from the discriminant alone:
/// the index is the conductor of b^2 - 4c over its fundamental part.
inline bool quadratic_order_maximal(std::int64_t b, std::int64_t c, std::int64_t ell) {
  const std::int64_t d = b * b - 4 * c;
  if (ell != 2) return d % (ell * ell) != 0;
  if (mod(d, 4) == 1) return true;
  const std::int64_t m = mod(d / 4, 4);
  return mod(d, 4) == 0 && (m == 2 || m == 3);
}

inline bool is_square_mod(std::int64_t r, std::int64_t m) {
  for (std::int64_t x = 0; x < m; ++x)
    if (mod(x * x - r, m) == 0) return true;
  return false;
}

/// Exponent of ell in n; 0 for n = 0.
inline int valuation(std::int64_t n, std::int64_t ell) {
  int v = 0;
  while (n != 0 && n % ell == 0) {
    n /= ell;
    ++v;
  }
  return v;
}

/// Fundamental part of a nonzero non-square discriminant, by stripping square factors.
inline std::int64_t fundamental(std::int64_t d) {
  for (std::int64_t f = 2; f * f <= (d < 0 ? -d : d);) {
    if (d % (f * f) == 0 && mod(d / (f * f), 4) <= 1) {
      d /= f * f;
    } else {
      ++f;
    }
  }
  return d;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace brute
