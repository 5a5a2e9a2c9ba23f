#pragma once

// Arithmetic of the order Z[F, V] at a prime l != p, done as polynomial
// algebra: away from p, V = q/F lies in Z_l[F], so the completion is
// Z_l[t]/f_A and its maximal ideals are the irreducible factors of f_A mod l.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "polarglue/polynomial.hpp"
#include "polarglue/weil.hpp"

namespace polarglue {

/// Factorization of a polynomial over F_l into monic irreducibles, sorted by
/// degree and then by coefficients (low degree first).
struct FactorPattern {
  std::int64_t ell = 0;
  int leading = 1;
  std::vector<std::pair<ResiduePoly, int>> factors;

  ResiduePoly product() const;
  bool is_squarefree() const;
};

/// f of degree <= 4 with leading coefficient a unit mod l.
FactorPattern factor_mod_prime(const IntPoly& f, std::int64_t ell);

/// Per-factor Dedekind test: entry i is true iff Z_l[t]/f is regular at the
/// ideal (l, g_i) of the i-th factor of factor_mod_prime(f, ell).
std::vector<bool> dedekind_local(const IntPoly& f, std::int64_t ell);

/// Z_l[t]/f is the maximal order at l. f monic.
bool dedekind_is_maximal(const IntPoly& f, std::int64_t ell);

enum class SplittingType { Split, Inert, Ramified };
std::string_view to_string(SplittingType s) noexcept;

/// Splitting of l in the maximal order of K+ = Q[t]/h. Throws ReducibleField.
SplittingType splitting_in_real_subfield(const RealWeilPolynomial& h, std::int64_t ell);

struct ExceptionalResult {
  bool exceptional = false;
  /// Square root f0 of f_A mod l^2 (monic quadratic, integer coefficients) when exceptional.
  std::optional<IntPoly> square_root;
};

enum class ExceptionalSearch {
  /// Skip everything when l^2 does not divide a1^2 - 4a2 + 8q.
  WithShortcut,
  /// Evaluate both defining conditions directly. This can accept l with
  /// l^2 not dividing the discriminant, where f0 is not of the form t^2 - st + q.
  Full,
};

/// l is exceptional for A: f_A = f0^2 mod l^2 with f0 irreducible mod l, and l inert in K+.
/// Throws CharacteristicPrime when l = p.
ExceptionalResult is_exceptional(const WeilSurface& f, std::int64_t ell,
                                 ExceptionalSearch search = ExceptionalSearch::WithShortcut);

enum class DoubleRoot { NoDoubleRoot, Satisfied, Fails };
std::string_view to_string(DoubleRoot d) noexcept;

struct DoubleRootResult {
  DoubleRoot status = DoubleRoot::NoDoubleRoot;
  /// The double root t1 in [0, l) when f_B = (t - t1)^2 mod l.
  std::optional<std::int64_t> t1;
};

/// If f_B = (t - t1)^2 mod l, report whether l^2 | f_B(t1).
DoubleRootResult double_root_condition(const WeilElliptic& b, std::int64_t ell);

/// q-reciprocal g*(t) = t^deg g * g(q/t) / g(0), monic; g(0) must be a unit mod l.
ResiduePoly q_reciprocal(const ResiduePoly& g, std::int64_t q, std::int64_t ell);

struct IdealRecord {
  ResiduePoly factor;
  int multiplicity = 1;
  /// Irreducible factor of h mod l below this ideal.
  ResiduePoly real_factor;
  bool symmetric = false;
  bool generating = false;
  bool maximal_at = true;
  bool exceptional = false;
  std::optional<ResiduePoly> conjugate_partner;
};

struct LocalPrimeReport {
  std::int64_t ell = 0;
  FactorPattern f_pattern;
  FactorPattern h_pattern;
  std::vector<IdealRecord> ideals;
  std::optional<SplittingType> real_splitting;
  bool maximal = true;
  ExceptionalResult exceptional;
};

/// Throws CharacteristicPrime when l = p.
LocalPrimeReport classify_prime_ideals(const WeilSurface& f, std::int64_t ell);

}  // namespace polarglue
