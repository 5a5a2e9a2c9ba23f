#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polarglue/arith.hpp"
#include "polarglue/error.hpp"

namespace polarglue {

/// Dense univariate polynomial over an exact scalar ring. Coefficients are
/// stored low degree first; the representation is always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

  static Polynomial monomial(int degree, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar(1); }

  /// Coefficient of t^i; zero past the degree.
  Scalar coefficient(int i) const {
    if (i < 0 || i > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = Scalar(acc * x + *it);
    return acc;
  }

  Polynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<Scalar> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Scalar(coeffs_[i] * Scalar(static_cast<long>(i))));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<BigInt>;
/// Polynomial whose coefficients are residues in [0, m) for an implied modulus m.
using ResiduePoly = Polynomial<std::int64_t>;

/// Quotient and remainder of a by a monic divisor, exact over any ring.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divrem_monic(const Polynomial<Scalar>& a,
                                                               const Polynomial<Scalar>& divisor) {
  if (!divisor.is_monic()) throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
  std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = divisor.degree();
  if (a.degree() < db) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db) + 1, Scalar(0));
  for (int i = a.degree(); i >= db; --i) {
    Scalar c = rem[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c == Scalar(0)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * divisor.coefficient(j);
  }
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

IntPoly to_int_poly(std::initializer_list<long> coeffs);
IntPoly lift(const ResiduePoly& p);

/// Human-readable form, highest degree first: "t^4 + t^3 - 2*t + 4".
template <class Scalar>
std::string to_string(const Polynomial<Scalar>& p, char var = 't') {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Scalar c = p.coefficient(i);
    if (c == Scalar(0)) continue;
    bool negative = c < Scalar(0);
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Scalar(1);
    if (!unit || i == 0) os << mag;
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << to_string(p);
}

/// Arithmetic on ResiduePoly modulo m (m prime or a prime power, m < 2^62).
namespace modular {

ResiduePoly reduce(const IntPoly& f, std::int64_t m);
ResiduePoly reduce(const ResiduePoly& f, std::int64_t m);
ResiduePoly add(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m);
ResiduePoly sub(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m);
ResiduePoly mul(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m);
ResiduePoly scale(const ResiduePoly& a, std::int64_t c, std::int64_t m);
std::int64_t eval(const ResiduePoly& a, std::int64_t x, std::int64_t m);

/// Division by b whose leading coefficient is a unit mod m.
std::pair<ResiduePoly, ResiduePoly> divrem(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m);
ResiduePoly rem(const ResiduePoly& a, const ResiduePoly& b, std::int64_t m);

/// Scale to leading coefficient 1; requires an invertible leading coefficient.
ResiduePoly make_monic(const ResiduePoly& a, std::int64_t m);

/// Monic gcd over the field F_ell.
ResiduePoly gcd(ResiduePoly a, ResiduePoly b, std::int64_t ell);

/// base^e mod (modulus, m).
ResiduePoly powmod(const ResiduePoly& base, std::uint64_t e, const ResiduePoly& modulus, std::int64_t m);

}  // namespace modular

}  // namespace polarglue
