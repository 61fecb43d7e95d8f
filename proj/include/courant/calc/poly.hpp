#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "courant/exact/rational.hpp"

namespace courant {

/// Exponent vector of a monomial. Charts are limited to kMaxVars coordinates
/// and each exponent to 255.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Monomial() = default;
  static Monomial variable(std::size_t var, unsigned power = 1);

  unsigned exponent(std::size_t var) const { return exps_[var]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// One past the highest variable index with a nonzero exponent.
  std::size_t support_size() const;

  Monomial operator*(const Monomial& rhs) const;
  /// Exponent of `var` lowered by one; requires exponent(var) > 0.
  Monomial lowered(std::size_t var) const;

  /// Graded lexicographic: total degree first, then exponents compared from
  /// the first variable on.
  std::strong_ordering operator<=>(const Monomial& rhs) const;
  bool operator==(const Monomial& rhs) const = default;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

/// All monomials in `nvars` variables of total degree <= max_degree, in
/// increasing graded order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Multivariate polynomial over Q. Terms are kept strictly decreasing in
/// graded lex order with no zero coefficients, so the representation is
/// canonical and equality is structural.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);             // NOLINT(google-explicit-constructor)

  static Poly variable(std::size_t var);
  static Poly monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const;  // coefficient of the unit monomial
  unsigned degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  std::size_t support_size() const;
  const std::vector<Term>& terms() const { return terms_; }

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, long c) { return a *= Rational(c); }
  friend Poly operator*(long c, Poly a) { return a *= Rational(c); }
  Poly operator-() const;

  bool operator==(const Poly& rhs) const;

  Poly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes x_i -> substitutions[i].
  Poly compose(std::span<const Poly> substitutions) const;

 private:
  void add_scaled(const Poly& rhs, int sign);
  std::vector<Term> terms_;
};

using PolyVector = std::vector<Poly>;

std::vector<Rational> evaluate(std::span<const Poly> v, std::span<const Rational> point);
bool is_zero(std::span<const Poly> v);
unsigned max_degree(std::span<const Poly> v);

}  // namespace courant
