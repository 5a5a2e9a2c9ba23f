#include "polarglue/weil.hpp"

#include <string>

#include "polarglue/error.hpp"
#include "polarglue/oracle.hpp"

namespace polarglue {

FieldParam FieldParam::from_q(std::int64_t q) {
  if (q < 2 || q > kMaxQ) {
    throw Error(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " outside [2, 2^24]");
  }
  auto fac = factor_integer(q);
  if (fac.factors.size() != 1) throw Error(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
  return FieldParam(q, fac.factors[0].first, fac.factors[0].second);
}

std::optional<std::int64_t> FieldParam::sqrt_q() const noexcept {
  if (!is_square()) return std::nullopt;
  return isqrt(q_);
}

IntPoly WeilSurface::polynomial() const {
  const long q = field_.q();
  return IntPoly({BigInt(q) * q, BigInt(q) * a1_, BigInt(a2_), BigInt(a1_), BigInt(1)});
}

IntPoly WeilElliptic::polynomial() const { return IntPoly({BigInt(field_.q()), BigInt(-b_), BigInt(1)}); }

RealWeilPolynomial::RealWeilPolynomial(FieldParam field, std::vector<std::int64_t> coeffs_low_first)
    : field_(field), coeffs_(std::move(coeffs_low_first)) {
  if (coeffs_.size() < 2 || coeffs_.back() != 1) {
    throw Error(ErrorCode::InvalidArgument, "real Weil polynomial must be monic of positive degree");
  }
}

IntPoly RealWeilPolynomial::polynomial() const {
  std::vector<BigInt> v;
  for (auto c : coeffs_) v.emplace_back(static_cast<long>(c));
  return IntPoly(std::move(v));
}

std::int64_t RealWeilPolynomial::discriminant() const {
  if (degree() != 2) throw Error(ErrorCode::InvalidArgument, "discriminant needs a quadratic");
  return narrow(static_cast<__int128>(coeffs_[1]) * coeffs_[1] - static_cast<__int128>(4) * coeffs_[0]);
}

std::string_view to_string(PRank r) noexcept {
  switch (r) {
    case PRank::Ordinary: return "ordinary";
    case PRank::Mixed: return "mixed";
    case PRank::Supersingular: return "supersingular";
  }
  return "unknown";
}

DiscriminantSplit split_discriminant(std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero discriminant");
  std::int64_t r = floor_mod(d, 4);
  if (r != 0 && r != 1) throw Error(ErrorCode::InvalidArgument, "discriminant must be 0 or 1 mod 4");
  auto [square, free] = squarefree_decompose(d);
  std::int64_t s = isqrt(square);
  if (floor_mod(free, 4) == 1) return {free, s};
  return {4 * free, s / 2};
}

FundamentalDiscriminant::FundamentalDiscriminant(std::int64_t d) : value_(d) {
  if (d >= 0 || split_discriminant(d).conductor != 1) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(d) + " is not a negative fundamental discriminant");
  }
}

WeilSurface make_surface(const FieldParam& field, std::int64_t a1, std::int64_t a2) {
  const __int128 q = field.q();
  const __int128 A1 = a1, A2 = a2;
  std::vector<std::string> violations;
  // |a1| <= 4 sqrt q: the vertex of h lies inside [-2 sqrt q, 2 sqrt q].
  if (A1 * A1 > 16 * q) violations.push_back("a1^2 > 16q");
  // h(+-2 sqrt q) >= 0  <=>  a2 + 2q >= 2|a1| sqrt q.
  const __int128 shifted = A2 + 2 * q;
  if (shifted < 0 || shifted * shifted < 4 * A1 * A1 * q) violations.push_back("a2 + 2q < 2|a1|sqrt(q)");
  // Real roots.
  if (A1 * A1 - 4 * A2 + 8 * q < 0) violations.push_back("a1^2 - 4a2 + 8q < 0");
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return WeilSurface(field, a1, a2);
}

WeilElliptic make_elliptic(const FieldParam& field, std::int64_t b) {
  if (static_cast<__int128>(b) * b > 4 * static_cast<__int128>(field.q())) throw ValidationError({"b^2 > 4q"});
  return WeilElliptic(field, b);
}

RealWeilPolynomial real_weil(const WeilSurface& f) { return {f.field(), {f.a2() - 2 * f.q(), f.a1(), 1}}; }

RealWeilPolynomial real_weil(const WeilElliptic& f) { return {f.field(), {-f.b(), 1}}; }

std::int64_t eval_real(const RealWeilPolynomial& h, std::int64_t r) {
  __int128 acc = 0;
  for (int i = h.degree(); i >= 0; --i) acc = narrow(acc * r + h.coefficient(i));
  return static_cast<std::int64_t>(acc);
}

namespace {

// Elementary symmetric functions e_1..e_n of the roots of monic f.
std::vector<BigInt> elementary(const IntPoly& f) {
  const int n = f.degree();
  std::vector<BigInt> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) e[static_cast<std::size_t>(k)] = (k % 2 == 0 ? 1 : -1) * f.coefficient(n - k);
  return e;
}

// Power sums p_1..p_count from elementary symmetric functions (Newton).
std::vector<BigInt> power_sums(const std::vector<BigInt>& e, int count) {
  const int n = static_cast<int>(e.size()) - 1;
  std::vector<BigInt> p(static_cast<std::size_t>(count) + 1);
  for (int k = 1; k <= count; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= std::min(k - 1, n); ++i) {
      BigInt term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    if (k <= n) {
      BigInt term = BigInt(k) * e[static_cast<std::size_t>(k)];
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p;
}

// Monic polynomial of degree n from power sums P_1..P_n (Newton, exact division).
IntPoly from_power_sums(const std::vector<BigInt>& sums, int n) {
  std::vector<BigInt> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      BigInt term = e[static_cast<std::size_t>(k - i)] * sums[static_cast<std::size_t>(i)];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    if (acc % k != 0) throw Error(ErrorCode::InvalidArgument, "power sums are not integral");
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = (k % 2 == 0 ? 1 : -1) * e[static_cast<std::size_t>(k)];
  return IntPoly(std::move(c));
}

IntPoly base_change_from_sums(const std::vector<BigInt>& p, int n, int m) {
  std::vector<BigInt> sums(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) sums[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j * m)];
  return from_power_sums(sums, n);
}

}  // namespace

IntPoly base_change(const IntPoly& f, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "base change degree must be positive");
  if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "base change needs a monic polynomial");
  if (m == 1) return f;
  const int n = f.degree();
  return base_change_from_sums(power_sums(elementary(f), n * m), n, m);
}

PRank classify_p_rank(const WeilSurface& f) {
  const std::int64_t p = f.field().p();
  const int a = f.field().exponent();
  if (f.a2() % p != 0) return PRank::Ordinary;
  // Newton polygon is the straight line of slope 1/2 iff v(a1) >= a/2 and v(a2) >= a.
  bool a1_ok = f.a1() == 0 || 2 * valuation(f.a1(), p) >= a;
  bool a2_ok = f.a2() == 0 || valuation(f.a2(), p) >= a;
  return (a1_ok && a2_ok) ? PRank::Supersingular : PRank::Mixed;
}

PRank classify_p_rank(const WeilElliptic& f) {
  return f.b() % f.field().p() == 0 ? PRank::Supersingular : PRank::Ordinary;
}

FundamentalDiscriminant fundamental_discriminant(const WeilElliptic& b) {
  if (!b.irreducible()) throw Error(ErrorCode::ReducibleInput, "b^2 = 4q has no quadratic endomorphism field");
  return FundamentalDiscriminant(split_discriminant(b.b() * b.b() - 4 * b.q()).fundamental);
}

bool weil_quartic_reducible(const IntPoly& g, const BigInt& big_q) {
  if (g.degree() != 4 || !g.is_monic()) throw Error(ErrorCode::InvalidArgument, "expected a monic quartic");
  const BigInt c1 = g.coefficient(3);
  const BigInt c2 = g.coefficient(2);
  // Rational quadratic factors are t^2 - s t + Q with s an integer root of the
  // real polynomial x^2 + c1 x + (c2 - 2Q), or the square (t^2 - Q)^2.
  BigInt disc = c1 * c1 - 4 * c2 + 8 * big_q;
  if (is_perfect_square(disc)) return true;
  return c1 == 0 && c2 == -2 * big_q;
}

bool is_irreducible(const WeilSurface& f) { return !weil_quartic_reducible(f.polynomial(), BigInt(f.q())); }

bool is_separable(const WeilSurface& f) {
  const __int128 q = f.q();
  const __int128 shifted = static_cast<__int128>(f.a2()) + 2 * q;
  const __int128 a1 = f.a1();
  return f.real_discriminant() != 0 && shifted * shifted != 4 * a1 * a1 * q;
}

SimplicityResult is_geometrically_simple(const WeilSurface& f, int max_m) {
  const IntPoly poly = f.polynomial();
  const BigInt q(f.q());
  if (weil_quartic_reducible(poly, q)) return {false, 1};
  // The base change to F_{q^m} has c1 = -P_m and c2 = (P_m^2 - P_2m) / 2, so
  // its real discriminant is 2 P_2m - P_m^2 + 8 q^m.
  const auto sums = power_sums(elementary(poly), 2 * max_m);
  BigInt big_q = q;
  for (int m = 2; m <= max_m; ++m) {
    big_q *= q;
    const BigInt& pm = sums[static_cast<std::size_t>(m)];
    const BigInt& p2m = sums[static_cast<std::size_t>(2 * m)];
    BigInt disc = 2 * p2m - pm * pm + 8 * big_q;
    if (is_perfect_square(disc)) return {false, m};
    if (pm == 0 && p2m == 4 * big_q) return {false, m};
  }
  return {true, std::nullopt};
}

}  // namespace polarglue
