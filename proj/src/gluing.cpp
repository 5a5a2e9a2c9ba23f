#include "polarglue/gluing.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <utility>

#include "polarglue/error.hpp"
#include "polarglue/oracle.hpp"

namespace polarglue {

namespace {

void require_prime(std::int64_t ell) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(ell) + " is not prime");
  }
}

std::int64_t h_at(const WeilSurface& a, std::int64_t x) { return eval_real(real_weil(a), x); }

void require_square_root(const WeilSurface& a, std::int64_t s) {
  if (!a.field().is_square() || s * s != a.q()) {
    throw Error(ErrorCode::NotASquare, std::to_string(s) + " is not a square root of q = " + std::to_string(a.q()));
  }
}

void require_ordinary(const WeilSurface& a) {
  if (classify_p_rank(a) != PRank::Ordinary) throw Error(ErrorCode::NotOrdinary, "surface is not ordinary");
}

template <class Enum, std::size_t N>
std::optional<Enum> parse_enum(std::string_view s, const std::array<Enum, N>& values) {
  for (Enum v : values) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

}  // namespace

GluingExponentReport gluing_exponent(const WeilSurface& a, const WeilElliptic& b) {
  if (!is_separable(a)) throw Error(ErrorCode::InseparableInput, "f_A has a repeated root");
  if (!b.irreducible()) throw Error(ErrorCode::InseparableInput, "f_B has a repeated root");
  const std::int64_t hb = h_at(a, b.b());
  if (hb == 0) throw Error(ErrorCode::InseparableInput, "h(b) = 0: f_B divides f_A");
  const std::int64_t p = a.field().p();
  GluingExponentReport report;
  report.p_part_upper_bound = valuation(hb, p);
  report.prime_to_p_part = std::llabs(hb);
  for (int i = 0; i < report.p_part_upper_bound; ++i) report.prime_to_p_part /= p;
  report.exact = classify_p_rank(a) == PRank::Ordinary && classify_p_rank(b) == PRank::Supersingular;
  return report;
}

int ss_quadratic_gluing_valuation(const WeilSurface& a, std::int64_t s, std::int64_t ell) {
  require_square_root(a, s);
  require_prime(ell);
  if (ell == a.field().p()) throw Error(ErrorCode::CharacteristicPrime, "l equals the characteristic");
  const IntPoly f = a.polynomial();
  const BigInt value = f(BigInt(static_cast<long>(s)));
  const BigInt slope = f.derivative()(BigInt(static_cast<long>(s)));
  if (value == 0) throw Error(ErrorCode::InseparableInput, "f_A(s) = 0");
  const BigInt l(static_cast<long>(ell));
  int n = 0;
  BigInt ln = l;
  while (value % (ln * ln) == 0 && slope % ln == 0) {
    ++n;
    ln *= l;
  }
  return n;
}

std::string_view to_string(Obstruction o) noexcept {
  return o == Obstruction::Obstructed ? "Obstructed" : "NoConclusion";
}

Obstruction hl_obstruction(const WeilSurface& a, std::int64_t s, int n) {
  require_square_root(a, s);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  require_ordinary(a);
  const std::int64_t value = h_at(a, 2 * s);
  if (value == 0) return Obstruction::NoConclusion;
  return squarefree_decompose(value).square_part == 1 ? Obstruction::Obstructed : Obstruction::NoConclusion;
}

LambdaDivisibility divides_in_lambda(const WeilSurface& a, std::int64_t ell) {
  if (a.field().is_square()) throw Error(ErrorCode::SquareField, "q is a square");
  require_prime(ell);
  if (ell == 2 || ell == a.field().p()) throw Error(ErrorCode::SmallPrime, "l must differ from 2 and p");
  LambdaDivisibility out;
  out.ell = ell;
  out.u = a.a2() + 2 * a.q();
  out.v = 2 * a.a1();
  const auto root = sqrt_mod_prime(a.q(), ell);
  if (!root) {
    out.splitting = SplittingType::Inert;
    out.divides = out.u % ell == 0 && out.v % ell == 0;
    const BigInt l2 = BigInt(static_cast<long>(ell)) * static_cast<long>(ell);
    out.divides_square = BigInt(static_cast<long>(out.u)) % l2 == 0 && BigInt(static_cast<long>(out.v)) % l2 == 0;
    return out;
  }
  out.splitting = SplittingType::Split;
  const BigInt l(static_cast<long>(ell));
  const BigInt l2 = l * l;
  const BigInt q(static_cast<long>(a.q()));
  const BigInt u(static_cast<long>(out.u));
  const BigInt v(static_cast<long>(out.v));
  for (std::int64_t r : {*root, ell - *root}) {
    if ((u + v * static_cast<long>(r)) % l != 0) continue;
    out.divides = true;
    // Newton step r -> r - (r^2 - q) / (2r) lifts the root to Z/l^2.
    BigInt lifted(static_cast<long>(r));
    BigInt inv, twice = 2 * lifted;
    mpz_invert(inv.get_mpz_t(), twice.get_mpz_t(), l2.get_mpz_t());
    lifted = lifted - (lifted * lifted - q) * inv;
    BigInt residue = u + v * lifted;
    residue %= l2;
    if (residue == 0) out.divides_square = true;
  }
  return out;
}

Hl2Report hl2_report(const WeilSurface& a, Hl2Reading reading) {
  if (a.field().is_square()) throw Error(ErrorCode::SquareField, "q is a square");
  require_ordinary(a);
  Hl2Report report;
  const std::int64_t u = a.a2() + 2 * a.q();
  const std::int64_t v = 2 * a.a1();
  report.norm = narrow(static_cast<__int128>(u) * u - static_cast<__int128>(a.q()) * v * v);
  if (report.norm == 0) return report;
  // v is even, so 2 divides u + v sqrt(q) exactly when 2 | u.
  report.even_divisor = u % 2 == 0;
  bool square_divisor = false;
  for (const auto& [ell, e] : factor_integer(report.norm).factors) {
    if (ell == 2 || ell == a.field().p()) continue;
    LambdaDivisibility d = divides_in_lambda(a, ell);
    if (!d.divides) continue;
    square_divisor = square_divisor || d.divides_square;
    report.divisors.push_back(d);
  }
  if (reading == Hl2Reading::Strict) {
    report.result = std::llabs(report.norm) == 1 ? Obstruction::Obstructed : Obstruction::NoConclusion;
  } else {
    report.result = report.even_divisor || square_divisor ? Obstruction::NoConclusion : Obstruction::Obstructed;
  }
  return report;
}

Obstruction hl2_obstruction(const WeilSurface& a, Hl2Reading reading) { return hl2_report(a, reading).result; }

namespace {

bool is_square_mod_power(std::int64_t r, std::int64_t ell, int n) {
  if (ell != 2) return kronecker_symbol(r, ell) == 1;
  if (n == 2) return r % 4 == 1;
  return r % 8 == 1;
}

}  // namespace

std::optional<std::int64_t> find_twisting_prime(const FundamentalDiscriminant& disc, std::int64_t ell, int n,
                                                std::int64_t bound) {
  require_prime(ell);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const std::int64_t d = disc.value();
  if (d == -ell) throw Error(ErrorCode::HypothesisViolated, "discriminant equals -l");
  if (ell == 2 && n < 2) throw Error(ErrorCode::HypothesisViolated, "l = 2 needs n > 1");
  for (std::int64_t r = 2; r <= bound; ++r) {
    if (!is_prime(static_cast<std::uint64_t>(r)) || r == ell || d % r == 0) continue;
    if (kronecker_symbol(d, r) == 1 && !is_square_mod_power(r, ell, n)) return r;
  }
  return std::nullopt;
}

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::Generic: return "Generic";
    case Branch::ReducibleModL: return "ReducibleModL";
    case Branch::Exceptional: return "Exceptional";
    case Branch::PBranch: return "PBranch";
  }
  return "unknown";
}

std::string_view to_string(NoPPReason r) noexcept {
  switch (r) {
    case NoPPReason::HBUnit: return "HBUnit";
    case NoPPReason::HLObstruction: return "HLObstruction";
    case NoPPReason::HL2Obstruction: return "HL2Obstruction";
  }
  return "unknown";
}

std::string_view to_string(FailedCondition c) noexcept {
  switch (c) {
    case FailedCondition::DiscriminantIsMinusEll: return "DiscriminantIsMinusEll";
    case FailedCondition::DoubleRootFails: return "DoubleRootFails";
    case FailedCondition::ExceptionalNotOrdinary: return "ExceptionalNotOrdinary";
    case FailedCondition::PBranchSupersingularNotMixed: return "PBranchSupersingularNotMixed";
  }
  return "unknown";
}

std::optional<Branch> parse_branch(std::string_view s) noexcept {
  return parse_enum(s, std::array{Branch::Generic, Branch::ReducibleModL, Branch::Exceptional, Branch::PBranch});
}

std::optional<NoPPReason> parse_reason(std::string_view s) noexcept {
  return parse_enum(s, std::array{NoPPReason::HBUnit, NoPPReason::HLObstruction, NoPPReason::HL2Obstruction});
}

std::optional<FailedCondition> parse_condition(std::string_view s) noexcept {
  return parse_enum(s, std::array{FailedCondition::DiscriminantIsMinusEll, FailedCondition::DoubleRootFails,
                                  FailedCondition::ExceptionalNotOrdinary,
                                  FailedCondition::PBranchSupersingularNotMixed});
}

std::string_view GluingVerdict::kind() const noexcept {
  switch (outcome.index()) {
    case 0: return "IrreduciblePPExists";
    case 1: return "NoIrreduciblePP";
    default: return "Inconclusive";
  }
}

std::string jacobian_statement(std::int64_t q, std::int64_t witness_ell) {
  return "A x B is isogenous to an abelian threefold over F_" + std::to_string(q) +
         " with an irreducible principal polarization (witness prime " + std::to_string(witness_ell) +
         "); that threefold is the Jacobian of a smooth genus-3 curve, or its quadratic twist.";
}

GluingVerdict decide(const WeilSurface& a, const WeilElliptic& b, const DecideOptions& options) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::InvalidArgument, "A and B live over different fields");
  if (!b.irreducible()) throw Error(ErrorCode::ReducibleEllipticInput, "b^2 = 4q: f_B is reducible");
  if (options.require_geometric_simplicity && !is_geometrically_simple(a).simple) throw Error(ErrorCode::NotGeometricallySimple, "A is not geometrically simple");

  const std::int64_t hb = h_at(a, b.b());
  if (hb == 0) throw Error(ErrorCode::InseparableInput, "h(b) = 0");
  if (std::llabs(hb) == 1) return {NoIrreduciblePP{NoPPReason::HBUnit}, ""};

  const std::int64_t p = a.field().p();
  const std::int64_t delta = fundamental_discriminant(b).value();
  const PRank rank_a = classify_p_rank(a);
  const PRank rank_b = classify_p_rank(b);

  Inconclusive log;
  for (const auto& [ell, e] : factor_integer(hb).factors) {
    PrimeFailure failure{ell, {}};
    if (delta == -ell) failure.conditions.push_back(FailedCondition::DiscriminantIsMinusEll);
    Branch branch = Branch::Generic;
    if (ell == p) {
      if (rank_b == PRank::Supersingular && rank_a != PRank::Mixed) {
        failure.conditions.push_back(FailedCondition::PBranchSupersingularNotMixed);
      }
      branch = Branch::PBranch;
    } else {
      const DoubleRootResult dr = double_root_condition(b, ell);
      if (dr.status == DoubleRoot::Fails) failure.conditions.push_back(FailedCondition::DoubleRootFails);
      const bool exceptional = is_exceptional(a, ell).exceptional;
      if (exceptional && rank_a != PRank::Ordinary) {
        failure.conditions.push_back(FailedCondition::ExceptionalNotOrdinary);
      }
      if (exceptional) {
        branch = Branch::Exceptional;
      } else if (dr.status == DoubleRoot::Satisfied) {
        branch = Branch::ReducibleModL;
      }
    }
    if (failure.conditions.empty()) {
      return {IrreduciblePPExists{ell, branch}, jacobian_statement(a.q(), ell)};
    }
    log.per_prime_failures.push_back(std::move(failure));
  }
  return {std::move(log), ""};
}

}  // namespace polarglue
