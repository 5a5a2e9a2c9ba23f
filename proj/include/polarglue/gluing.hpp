#pragma once

// Verdict engine for gluing a surface A with an elliptic curve B: the gluing
// exponent, the prime-by-prime existence test, the obstructions used when B
// is a power of a supersingular curve, and the twisting-prime search.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polarglue/local.hpp"
#include "polarglue/weil.hpp"

namespace polarglue {

struct GluingExponentReport {
  /// |h(b)| with every factor of p removed.
  std::int64_t prime_to_p_part = 1;
  /// v_p(h(b)); an upper bound for the p-part exponent unless exact.
  int p_part_upper_bound = 0;
  /// A ordinary and B supersingular: the exponent is exactly |h(b)|.
  bool exact = false;
};

/// Throws InseparableInput when f_A or f_B has a repeated root or h(b) = 0.
GluingExponentReport gluing_exponent(const WeilSurface& a, const WeilElliptic& b);

/// Largest n with l^{2n} | f_A(s) and l^n | f_A'(s). Needs s^2 = q (NotASquare) and l != p.
int ss_quadratic_gluing_valuation(const WeilSurface& a, std::int64_t s, std::int64_t ell);

enum class Obstruction { Obstructed, NoConclusion };
std::string_view to_string(Obstruction o) noexcept;

/// B = E^n with E supersingular of trace 2s. Obstructed iff |h(2s)| is squarefree.
/// Throws NotASquare unless s^2 = q, NotOrdinary unless A is ordinary.
Obstruction hl_obstruction(const WeilSurface& a, std::int64_t s, int n);

/// h(2s) = u + v*sqrt(q) in Z_l[sqrt q], for q not a square.
struct LambdaDivisibility {
  std::int64_t ell = 0;
  std::int64_t u = 0;
  std::int64_t v = 0;
  bool divides = false;
  bool divides_square = false;
  /// Split or Inert: whether t^2 - q has a root mod l.
  SplittingType splitting = SplittingType::Inert;
};

/// Throws SquareField when q is a square and SmallPrime for l = 2 or l = p.
LambdaDivisibility divides_in_lambda(const WeilSurface& a, std::int64_t ell);

enum class Hl2Reading {
  /// Every prime divisor of h(2s) must be odd with l^2 not dividing.
  OddDivisors,
  /// Conclude only when h(2s) is a unit.
  Strict,
};

struct Hl2Report {
  Obstruction result = Obstruction::NoConclusion;
  /// u^2 - q v^2.
  std::int64_t norm = 0;
  bool even_divisor = false;
  std::vector<LambdaDivisibility> divisors;
};

/// B the supersingular surface with Weil polynomial (t^2 - q)^2.
/// Throws SquareField when q is a square, NotOrdinary unless A is ordinary.
Hl2Report hl2_report(const WeilSurface& a, Hl2Reading reading = Hl2Reading::OddDivisors);
Obstruction hl2_obstruction(const WeilSurface& a, Hl2Reading reading = Hl2Reading::OddDivisors);

inline constexpr std::int64_t kTwistSearchBound = 1'000'000;

/// Smallest prime r not dividing l*disc that splits in Q(sqrt disc) and is not
/// a square mod l^n; nullopt past the bound. Throws HypothesisViolated when
/// disc = -l, or when l = 2 and n < 2.
std::optional<std::int64_t> find_twisting_prime(const FundamentalDiscriminant& disc, std::int64_t ell, int n,
                                                std::int64_t bound = kTwistSearchBound);

enum class Branch { Generic, ReducibleModL, Exceptional, PBranch };
enum class NoPPReason { HBUnit, HLObstruction, HL2Obstruction };
enum class FailedCondition {
  DiscriminantIsMinusEll,
  DoubleRootFails,
  ExceptionalNotOrdinary,
  PBranchSupersingularNotMixed,
};
std::string_view to_string(Branch b) noexcept;
std::string_view to_string(NoPPReason r) noexcept;
std::string_view to_string(FailedCondition c) noexcept;
std::optional<Branch> parse_branch(std::string_view s) noexcept;
std::optional<NoPPReason> parse_reason(std::string_view s) noexcept;
std::optional<FailedCondition> parse_condition(std::string_view s) noexcept;

struct PrimeFailure {
  std::int64_t ell = 0;
  std::vector<FailedCondition> conditions;
  friend bool operator==(const PrimeFailure&, const PrimeFailure&) = default;
};

struct IrreduciblePPExists {
  std::int64_t witness_ell = 0;
  Branch branch = Branch::Generic;
  friend bool operator==(const IrreduciblePPExists&, const IrreduciblePPExists&) = default;
};

struct NoIrreduciblePP {
  NoPPReason reason = NoPPReason::HBUnit;
  friend bool operator==(const NoIrreduciblePP&, const NoIrreduciblePP&) = default;
};

struct Inconclusive {
  std::vector<PrimeFailure> per_prime_failures;
  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

struct GluingVerdict {
  std::variant<IrreduciblePPExists, NoIrreduciblePP, Inconclusive> outcome;
  /// Empty unless outcome is IrreduciblePPExists.
  std::string jacobian_text;

  bool exists() const noexcept { return std::holds_alternative<IrreduciblePPExists>(outcome); }
  std::string_view kind() const noexcept;
  friend bool operator==(const GluingVerdict&, const GluingVerdict&) = default;
};

/// Statement attached to an existence verdict.
std::string jacobian_statement(std::int64_t q, std::int64_t witness_ell);

struct DecideOptions {
  /// Reject A unless it is geometrically simple. Turning this off runs the
  /// per-prime test on inputs outside its hypotheses.
  bool require_geometric_simplicity = true;
};

/// Throws NotGeometricallySimple unless A is geometrically simple and
/// ReducibleEllipticInput when b^2 = 4q.
GluingVerdict decide(const WeilSurface& a, const WeilElliptic& b, const DecideOptions& options = {});

}  // namespace polarglue
