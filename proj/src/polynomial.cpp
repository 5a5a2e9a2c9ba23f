#include "polarglue/polynomial.hpp"

namespace polarglue {

IntPoly to_int_poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

IntPoly lift(const ResiduePoly& p) {
  std::vector<BigInt> v;
  for (auto c : p.coefficients()) v.emplace_back(static_cast<long>(c));
  return IntPoly(std::move(v));
}

namespace modular {

ResiduePoly reduce(const IntPoly& f, std::int64_t m) {
  std::vector<std::int64_t> v;
  BigInt mod = static_cast<long>(m);
  BigInt r;
  for (const auto& c : f.coefficients()) {
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
    v.push_back(r.get_si());
  }
  return ResiduePoly(std::move(v));
}

ResiduePoly reduce(const ResiduePoly& f, std::int64_t m) {
  std::vector<std::int64_t> v;
  for (auto c : f.coefficients()) v.push_back(floor_mod(c, m));
  return ResiduePoly(std::move(v));
}

ResiduePoly add(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m) {
  int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = floor_mod(a.coefficient(i) + b.coefficient(i), m);
  return ResiduePoly(std::move(v));
}

ResiduePoly sub(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m) {
  int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = floor_mod(a.coefficient(i) - b.coefficient(i), m);
  return ResiduePoly(std::move(v));
}

ResiduePoly mul(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<__int128> acc(static_cast<std::size_t>(a.degree() + b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      acc[static_cast<std::size_t>(i + j)] =
          (acc[static_cast<std::size_t>(i + j)] + static_cast<__int128>(floor_mod(a.coefficient(i), m)) *
                                                      floor_mod(b.coefficient(j), m)) % m;
    }
  }
  std::vector<std::int64_t> v;
  v.reserve(acc.size());
  for (auto x : acc) v.push_back(static_cast<std::int64_t>(x));
  return ResiduePoly(std::move(v));
}

ResiduePoly scale(const ResiduePoly& a, std::int64_t c, std::int64_t m) {
  std::vector<std::int64_t> v;
  for (auto x : a.coefficients()) v.push_back(mul_mod(x, c, m));
  return ResiduePoly(std::move(v));
}

std::int64_t eval(const ResiduePoly& a, std::int64_t x, std::int64_t m) {
  std::int64_t acc = 0;
  for (int i = a.degree(); i >= 0; --i) acc = floor_mod(mul_mod(acc, x, m) + a.coefficient(i), m);
  return acc;
}

std::pair<ResiduePoly, ResiduePoly> divrem(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  auto inv = inverse_mod(b.leading(), m);
  if (!inv) throw Error(ErrorCode::InvalidArgument, "leading coefficient is not a unit");
  std::vector<std::int64_t> r;
  for (auto c : a.coefficients()) r.push_back(floor_mod(c, m));
  const int db = b.degree();
  if (a.degree() < db) return {ResiduePoly(), ResiduePoly(std::move(r))};
  std::vector<std::int64_t> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    std::int64_t c = mul_mod(r[static_cast<std::size_t>(i)], *inv, m);
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = floor_mod(slot - mul_mod(c, b.coefficient(j), m), m);
    }
  }
  return {ResiduePoly(std::move(quot)), ResiduePoly(std::move(r))};
}

ResiduePoly rem(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m) { return divrem(a, b, m).second; }

ResiduePoly make_monic(const ResiduePoly& a, std::int64_t m) {
  if (a.is_zero()) return a;
  auto inv = inverse_mod(a.leading(), m);
  if (!inv) throw Error(ErrorCode::InvalidArgument, "leading coefficient is not a unit");
  return scale(a, *inv, m);
}

ResiduePoly gcd(ResiduePoly a, ResiduePoly b, std::int64_t ell) {
  a = reduce(a, ell);
  b = reduce(b, ell);
  while (!b.is_zero()) {
    ResiduePoly r = rem(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, ell);
}

ResiduePoly powmod(const ResiduePoly& base, std::uint64_t e, const ResiduePoly& modulus, std::int64_t m) {
  ResiduePoly result = rem(ResiduePoly::constant(1), modulus, m);
  ResiduePoly b = rem(base, modulus, m);
  while (e > 0) {
    if (e & 1U) result = rem(mul(result, b, m), modulus, m);
    b = rem(mul(b, b, m), modulus, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace modular

}  // namespace polarglue
