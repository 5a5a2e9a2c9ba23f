#pragma once

// Integer factorization, quadratic symbols and the brute-force l-adic
// divisibility oracle. These are deliberately independent of the analytic
// shortcuts in local.hpp and gluing.hpp.

#include <cstdint>
#include <utility>
#include <vector>

#include "polarglue/arith.hpp"
#include "polarglue/polynomial.hpp"

namespace polarglue {

struct PrimeFactorization {
  int sign = 1;
  /// Strictly increasing primes with positive exponents.
  std::vector<std::pair<std::int64_t, int>> factors;

  std::int64_t reconstruct() const;
};

struct FactorOptions {
  std::int64_t trial_bound = 1'000'000;
  /// Pollard rho iterations per attempt before giving up on a cofactor.
  std::int64_t rho_iterations = 1'000'000;
};

/// Trial division then Pollard rho (Brent); every prime is Miller-Rabin certified.
/// Throws InvalidArgument for n == 0 and FactorizationTimeout past the bound.
PrimeFactorization factor_integer(std::int64_t n, const FactorOptions& options = {});

/// Kronecker symbol (a/n) with the 2-supplement; n != 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// n = square_part * squarefree_part; the sign stays with the squarefree part.
struct SquarefreeDecomposition {
  std::int64_t square_part;
  std::int64_t squarefree_part;
};
SquarefreeDecomposition squarefree_decompose(std::int64_t n);

/// Largest n <= n_max such that f_b divides f_a modulo ell^n, by schoolbook
/// division over Z/ell^n.
int ell_adic_poly_divisibility(const IntPoly& f_a, const IntPoly& f_b, std::int64_t ell, int n_max = 12);

}  // namespace polarglue
