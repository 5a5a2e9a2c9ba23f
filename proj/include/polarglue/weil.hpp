#pragma once

// Weil polynomials of abelian surfaces and elliptic curves over F_q: exact
// validation, real Weil polynomials, base change and the p-rank.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "polarglue/polynomial.hpp"

namespace polarglue {

/// Cardinality q = p^a of the base field.
class FieldParam {
 public:
  /// Largest supported cardinality; keeps every l^2 residue product in 128 bits.
  static constexpr std::int64_t kMaxQ = std::int64_t{1} << 24;

  /// Throws InvalidArgument unless q is a prime power in [2, kMaxQ].
  static FieldParam from_q(std::int64_t q);

  std::int64_t q() const noexcept { return q_; }
  std::int64_t p() const noexcept { return p_; }
  int exponent() const noexcept { return a_; }
  bool is_square() const noexcept { return a_ % 2 == 0; }
  /// sqrt(q) when q is a square.
  std::optional<std::int64_t> sqrt_q() const noexcept;

  friend bool operator==(const FieldParam&, const FieldParam&) = default;

 private:
  FieldParam(std::int64_t q, std::int64_t p, int a) : q_(q), p_(p), a_(a) {}
  std::int64_t q_, p_;
  int a_;
};

/// t^4 + a1 t^3 + a2 t^2 + q a1 t + q^2 with every root of absolute value sqrt(q).
class WeilSurface {
 public:
  const FieldParam& field() const noexcept { return field_; }
  std::int64_t q() const noexcept { return field_.q(); }
  std::int64_t a1() const noexcept { return a1_; }
  std::int64_t a2() const noexcept { return a2_; }
  IntPoly polynomial() const;
  /// Discriminant a1^2 - 4 a2 + 8 q of the real Weil polynomial.
  std::int64_t real_discriminant() const noexcept { return a1_ * a1_ - 4 * a2_ + 8 * field_.q(); }

  friend bool operator==(const WeilSurface&, const WeilSurface&) = default;

 private:
  friend WeilSurface make_surface(const FieldParam&, std::int64_t, std::int64_t);
  WeilSurface(FieldParam f, std::int64_t a1, std::int64_t a2) : field_(f), a1_(a1), a2_(a2) {}
  FieldParam field_;
  std::int64_t a1_, a2_;
};

/// t^2 - b t + q with b^2 <= 4q.
class WeilElliptic {
 public:
  const FieldParam& field() const noexcept { return field_; }
  std::int64_t q() const noexcept { return field_.q(); }
  std::int64_t b() const noexcept { return b_; }
  /// False exactly on the boundary b^2 = 4q, where f = (t -+ sqrt q)^2.
  bool irreducible() const noexcept { return b_ * b_ < 4 * field_.q(); }
  IntPoly polynomial() const;

  friend bool operator==(const WeilElliptic&, const WeilElliptic&) = default;

 private:
  friend WeilElliptic make_elliptic(const FieldParam&, std::int64_t);
  WeilElliptic(FieldParam f, std::int64_t b) : field_(f), b_(b) {}
  FieldParam field_;
  std::int64_t b_;
};

/// Monic totally real companion h, of degree 2 for surfaces and 1 for curves.
class RealWeilPolynomial {
 public:
  RealWeilPolynomial(FieldParam field, std::vector<std::int64_t> coeffs_low_first);

  const FieldParam& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  IntPoly polynomial() const;
  /// b^2 - 4c for degree 2; throws for degree 1.
  std::int64_t discriminant() const;

  friend bool operator==(const RealWeilPolynomial&, const RealWeilPolynomial&) = default;

 private:
  FieldParam field_;
  std::vector<std::int64_t> coeffs_;
};

enum class PRank { Ordinary, Mixed, Supersingular };
std::string_view to_string(PRank r) noexcept;

/// Discriminant of an imaginary quadratic field.
class FundamentalDiscriminant {
 public:
  /// Throws InvalidArgument unless d is a negative fundamental discriminant.
  explicit FundamentalDiscriminant(std::int64_t d);
  std::int64_t value() const noexcept { return value_; }
  friend bool operator==(const FundamentalDiscriminant&, const FundamentalDiscriminant&) = default;

 private:
  std::int64_t value_;
};

/// D = fundamental * conductor^2 for a nonzero discriminant D (D = 0 or 1 mod 4).
/// A perfect square D yields fundamental = 1.
struct DiscriminantSplit {
  std::int64_t fundamental;
  std::int64_t conductor;
};
DiscriminantSplit split_discriminant(std::int64_t d);

WeilSurface make_surface(const FieldParam& field, std::int64_t a1, std::int64_t a2);
WeilElliptic make_elliptic(const FieldParam& field, std::int64_t b);

RealWeilPolynomial real_weil(const WeilSurface& f);
RealWeilPolynomial real_weil(const WeilElliptic& f);

/// Exact h(r); throws Overflow past 64 bits.
std::int64_t eval_real(const RealWeilPolynomial& h, std::int64_t r);

/// Polynomial whose roots are the m-th powers of the roots of f (Newton identities).
IntPoly base_change(const IntPoly& f, int m);

PRank classify_p_rank(const WeilSurface& f);
PRank classify_p_rank(const WeilElliptic& f);

/// Throws ReducibleInput when b^2 = 4q.
FundamentalDiscriminant fundamental_discriminant(const WeilElliptic& b);

/// Reducibility over Q of a monic quartic t^4 + c1 t^3 + c2 t^2 + Q c1 t + Q^2
/// whose roots all have absolute value sqrt(Q).
bool weil_quartic_reducible(const IntPoly& g, const BigInt& big_q);

bool is_irreducible(const WeilSurface& f);
/// Squarefree over Q: real discriminant nonzero and h(+-2 sqrt q) nonzero.
bool is_separable(const WeilSurface& f);

struct SimplicityResult {
  bool simple;
  /// Smallest m with a reducible base change; 1 when f_A itself is reducible.
  std::optional<int> witness;
};

inline constexpr int kSimplicityScanBound = 60;

SimplicityResult is_geometrically_simple(const WeilSurface& f, int max_m = kSimplicityScanBound);

}  // namespace polarglue
