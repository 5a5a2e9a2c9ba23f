#include "polarglue/local.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "polarglue/error.hpp"
#include "polarglue/oracle.hpp"

namespace polarglue {

using namespace modular;

namespace {

void require_prime(std::int64_t ell) {
  if (ell < 2 || ell >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(ell))) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(ell) + " is not a prime below 2^31");
  }
}

const ResiduePoly kT{0, 1};

ResiduePoly linear(std::int64_t root, std::int64_t ell) { return ResiduePoly{floor_mod(-root, ell), 1}; }

// Cantor-Zassenhaus split of a squarefree g whose irreducible factors all
// have degree d; l odd. The generator is seeded so results are reproducible.
void equal_degree_split(const ResiduePoly& g, int d, std::int64_t ell, std::mt19937_64& rng,
                        std::vector<ResiduePoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t ell_d = d == 1 ? static_cast<std::uint64_t>(ell) : static_cast<std::uint64_t>(ell) * ell;
  const std::uint64_t exponent = (ell_d - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coeff(0, ell - 1);
  for (int attempt = 0; attempt < 512; ++attempt) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(g.degree()));
    for (auto& c : a) c = coeff(rng);
    ResiduePoly probe(std::move(a));
    if (probe.degree() < 1) continue;
    ResiduePoly b = sub(powmod(probe, exponent, g, ell), ResiduePoly::constant(1), ell);
    ResiduePoly h = gcd(g, b, ell);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, ell, rng, out);
      equal_degree_split(divrem(g, h, ell).first, d, ell, rng, out);
      return;
    }
  }
  throw Error(ErrorCode::FactorizationTimeout, "equal-degree splitting did not converge");
}

std::vector<std::int64_t> distinct_roots(const ResiduePoly& f, std::int64_t ell, std::mt19937_64& rng) {
  std::vector<std::int64_t> roots;
  if (f.degree() < 1) return roots;
  if (ell == 2) {
    for (std::int64_t x = 0; x < 2; ++x) {
      if (eval(f, x, ell) == 0) roots.push_back(x);
    }
    return roots;
  }
  ResiduePoly frob = sub(powmod(kT, static_cast<std::uint64_t>(ell), f, ell), kT, ell);
  ResiduePoly split = gcd(f, frob, ell);
  if (split.degree() < 1) return roots;
  std::vector<ResiduePoly> linears;
  equal_degree_split(split, 1, ell, rng, linears);
  for (const auto& l : linears) roots.push_back(floor_mod(-l.coefficient(0), ell));
  return roots;
}

bool factor_less(const std::pair<ResiduePoly, int>& x, const std::pair<ResiduePoly, int>& y) {
  if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
  auto a = x.first.coefficients();
  auto b = y.first.coefficients();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ResiduePoly FactorPattern::product() const {
  ResiduePoly acc = ResiduePoly::constant(leading);
  for (const auto& [g, e] : factors) {
    for (int i = 0; i < e; ++i) acc = mul(acc, g, ell);
  }
  return acc;
}

bool FactorPattern::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& fe) { return fe.second == 1; });
}

FactorPattern factor_mod_prime(const IntPoly& f, std::int64_t ell) {
  require_prime(ell);
  ResiduePoly g = reduce(f, ell);
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial vanishes mod l");
  if (g.degree() > 4) throw Error(ErrorCode::InvalidArgument, "factor_mod_prime supports degree <= 4");
  FactorPattern out;
  out.ell = ell;
  out.leading = static_cast<int>(g.leading());
  g = make_monic(g, ell);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(ell));

  for (std::int64_t root : distinct_roots(g, ell, rng)) {
    ResiduePoly lin = linear(root, ell);
    int mult = 0;
    while (g.degree() >= 1) {
      auto [quot, r] = divrem(g, lin, ell);
      if (!r.is_zero()) break;
      g = quot;
      ++mult;
    }
    out.factors.emplace_back(lin, mult);
  }

  if (g.degree() == 2 || g.degree() == 3) {
    out.factors.emplace_back(g, 1);
  } else if (g.degree() == 4) {
    // No roots left: irreducible, a square of a quadratic, or two distinct quadratics.
    const std::uint64_t ell2 = static_cast<std::uint64_t>(ell) * static_cast<std::uint64_t>(ell);
    ResiduePoly quad = gcd(g, sub(powmod(kT, ell2, g, ell), kT, ell), ell);
    if (quad.degree() == 0) {
      out.factors.emplace_back(g, 1);
    } else if (quad.degree() == 2) {
      ResiduePoly other = divrem(g, quad, ell).first;
      if (other == quad) {
        out.factors.emplace_back(quad, 2);
      } else {
        out.factors.emplace_back(quad, 1);
        out.factors.emplace_back(other, 1);
      }
    } else {
      if (ell == 2) throw Error(ErrorCode::InvalidArgument, "impossible quadratic split over F_2");
      std::vector<ResiduePoly> parts;
      equal_degree_split(quad, 2, ell, rng, parts);
      for (auto& part : parts) out.factors.emplace_back(std::move(part), 1);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

std::vector<bool> dedekind_local(const IntPoly& f, std::int64_t ell) {
  if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "Dedekind test needs a monic polynomial");
  FactorPattern pattern = factor_mod_prime(f, ell);
  // f = G*H - l*F with G the radical of f mod l and H = (f mod l) / G.
  ResiduePoly radical = ResiduePoly::constant(1);
  ResiduePoly cofactor = ResiduePoly::constant(1);
  for (const auto& [g, e] : pattern.factors) {
    radical = mul(radical, g, ell);
    for (int i = 1; i < e; ++i) cofactor = mul(cofactor, g, ell);
  }
  IntPoly diff = lift(radical) * lift(cofactor) - f;
  std::vector<BigInt> quotient;
  for (const auto& c : diff.coefficients()) quotient.emplace_back(c / static_cast<long>(ell));
  ResiduePoly defect = reduce(IntPoly(std::move(quotient)), ell);

  std::vector<bool> regular;
  for (const auto& [g, e] : pattern.factors) {
    regular.push_back(e == 1 || !rem(defect, g, ell).is_zero());
  }
  return regular;
}

bool dedekind_is_maximal(const IntPoly& f, std::int64_t ell) {
  auto local = dedekind_local(f, ell);
  return std::all_of(local.begin(), local.end(), [](bool b) { return b; });
}

std::string_view to_string(SplittingType s) noexcept {
  switch (s) {
    case SplittingType::Split: return "split";
    case SplittingType::Inert: return "inert";
    case SplittingType::Ramified: return "ramified";
  }
  return "unknown";
}

SplittingType splitting_in_real_subfield(const RealWeilPolynomial& h, std::int64_t ell) {
  require_prime(ell);
  const std::int64_t disc = h.discriminant();
  if (is_perfect_square(disc)) throw Error(ErrorCode::ReducibleField, "h is reducible; K+ is not a field");
  switch (kronecker_symbol(split_discriminant(disc).fundamental, ell)) {
    case 1: return SplittingType::Split;
    case -1: return SplittingType::Inert;
    default: return SplittingType::Ramified;
  }
}

ExceptionalResult is_exceptional(const WeilSurface& f, std::int64_t ell, ExceptionalSearch search) {
  require_prime(ell);
  if (ell == f.field().p()) throw Error(ErrorCode::CharacteristicPrime, "l equals the characteristic");
  const std::int64_t disc = f.real_discriminant();
  const std::int64_t ell2 = ell * ell;
  if (search == ExceptionalSearch::WithShortcut && disc % ell2 != 0) return {};
  if (is_perfect_square(disc)) return {};
  if (splitting_in_real_subfield(real_weil(f), ell) != SplittingType::Inert) return {};

  const IntPoly poly = f.polynomial();
  FactorPattern pattern = factor_mod_prime(poly, ell);
  if (pattern.factors.size() != 1 || pattern.factors[0].second != 2 || pattern.factors[0].first.degree() != 2) {
    return {};
  }
  const ResiduePoly& g = pattern.factors[0].first;
  IntPoly g_lift = lift(g);
  IntPoly diff = poly - g_lift * g_lift;
  std::vector<BigInt> quotient;
  for (const auto& c : diff.coefficients()) quotient.emplace_back(c / static_cast<long>(ell));
  ResiduePoly defect = reduce(IntPoly(std::move(quotient)), ell);

  // f = G^2 + l*F. For odd l a lift G + l*k squares to f mod l^2 iff g | F;
  // for l = 2 every lift has the same square mod 4, so F must vanish.
  bool square_mod_ell2 = ell == 2 ? defect.is_zero() : rem(defect, g, ell).is_zero();
  if (!square_mod_ell2) return {};

  auto squares_to_f = [&](const IntPoly& root) { return reduce(poly - root * root, ell2).is_zero(); };
  const BigInt q(f.q());

  std::vector<std::int64_t> s_candidates;
  if (ell == 2) {
    s_candidates = {0, 1, -1, 2};
  } else {
    s_candidates = {symmetric_mod(mul_mod(-f.a1(), *inverse_mod(2, ell2), ell2), ell2)};
  }
  for (std::int64_t s : s_candidates) {
    IntPoly root({q, BigInt(-s), BigInt(1)});
    if (floor_mod(s * s - 4 * f.q(), ell) == 0 && ell != 2) continue;
    if (squares_to_f(root) && reduce(root, ell) == g) return {true, root};
  }
  // Hensel step: (G + l*k)^2 = G^2 + 2 l G k, so k = F / (2g) mod l.
  IntPoly root = g_lift;
  if (ell != 2) {
    ResiduePoly k = scale(divrem(defect, g, ell).first, *inverse_mod(2, ell), ell);
    root = g_lift + lift(k) * BigInt(static_cast<long>(ell));
  }
  if (!squares_to_f(root)) throw Error(ErrorCode::InvalidArgument, "square-root lift failed to verify");
  return {true, root};
}

std::string_view to_string(DoubleRoot d) noexcept {
  switch (d) {
    case DoubleRoot::NoDoubleRoot: return "NoDoubleRoot";
    case DoubleRoot::Satisfied: return "Satisfied";
    case DoubleRoot::Fails: return "Fails";
  }
  return "unknown";
}

DoubleRootResult double_root_condition(const WeilElliptic& b, std::int64_t ell) {
  require_prime(ell);
  if (ell == b.field().p()) throw Error(ErrorCode::CharacteristicPrime, "l equals the characteristic");
  const IntPoly fb = b.polynomial();
  FactorPattern pattern = factor_mod_prime(fb, ell);
  if (pattern.factors.size() != 1 || pattern.factors[0].second != 2) return {};
  const std::int64_t t1 = floor_mod(-pattern.factors[0].first.coefficient(0), ell);
  BigInt value = fb(BigInt(static_cast<long>(t1)));
  bool divisible = value % (BigInt(static_cast<long>(ell)) * static_cast<long>(ell)) == 0;
  return {divisible ? DoubleRoot::Satisfied : DoubleRoot::Fails, t1};
}

ResiduePoly q_reciprocal(const ResiduePoly& g, std::int64_t q, std::int64_t ell) {
  const int d = g.degree();
  std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1);
  std::int64_t qpow = 1;
  for (int i = 0; i <= d; ++i) {
    v[static_cast<std::size_t>(d - i)] = mul_mod(g.coefficient(i), qpow, ell);
    qpow = mul_mod(qpow, q, ell);
  }
  ResiduePoly r(std::move(v));
  if (r.degree() != d) throw Error(ErrorCode::InvalidArgument, "g(0) must be a unit mod l");
  return make_monic(r, ell);
}

namespace {

// t^{deg u} * u(t + q/t) mod l: the polynomial in F whose roots lie over the roots of u.
ResiduePoly pull_back_real_factor(const ResiduePoly& u, std::int64_t q, std::int64_t ell) {
  const int d = u.degree();
  const ResiduePoly shift{floor_mod(q, ell), 0, 1};  // t^2 + q
  ResiduePoly acc;
  ResiduePoly shift_pow = ResiduePoly::constant(1);
  for (int j = 0; j <= d; ++j) {
    ResiduePoly term = mul(scale(shift_pow, u.coefficient(j), ell), ResiduePoly::monomial(d - j, 1), ell);
    acc = add(acc, term, ell);
    shift_pow = mul(shift_pow, shift, ell);
  }
  return acc;
}

}  // namespace

LocalPrimeReport classify_prime_ideals(const WeilSurface& f, std::int64_t ell) {
  require_prime(ell);
  if (ell == f.field().p()) throw Error(ErrorCode::CharacteristicPrime, "l equals the characteristic");
  LocalPrimeReport report;
  report.ell = ell;
  const IntPoly poly = f.polynomial();
  const RealWeilPolynomial h = real_weil(f);
  report.f_pattern = factor_mod_prime(poly, ell);
  report.h_pattern = factor_mod_prime(h.polynomial(), ell);
  if (!is_perfect_square(h.discriminant())) report.real_splitting = splitting_in_real_subfield(h, ell);
  report.exceptional = is_exceptional(f, ell);
  const std::vector<bool> regular = dedekind_local(poly, ell);

  std::optional<ResiduePoly> exceptional_factor;
  if (report.exceptional.exceptional) exceptional_factor = reduce(*report.exceptional.square_root, ell);

  for (std::size_t i = 0; i < report.f_pattern.factors.size(); ++i) {
    const auto& [g, e] = report.f_pattern.factors[i];
    IdealRecord rec;
    rec.factor = g;
    rec.multiplicity = e;
    ResiduePoly partner = q_reciprocal(g, f.q(), ell);
    rec.symmetric = partner == g;
    if (!rec.symmetric) rec.conjugate_partner = partner;
    for (const auto& [u, ue] : report.h_pattern.factors) {
      if (rem(pull_back_real_factor(u, f.q(), ell), g, ell).is_zero()) {
        rec.real_factor = u;
        break;
      }
    }
    rec.generating = rec.symmetric && g.degree() == 2 * rec.real_factor.degree();
    rec.maximal_at = regular[i];
    rec.exceptional = exceptional_factor && *exceptional_factor == g;
    report.maximal = report.maximal && rec.maximal_at;
    report.ideals.push_back(std::move(rec));
  }
  return report;
}

}  // namespace polarglue
