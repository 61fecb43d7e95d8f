#include "courant/calc/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "courant/errors.hpp"

namespace courant {

Monomial Monomial::variable(std::size_t var, unsigned power) {
  if (var >= kMaxVars) throw DimensionMismatch("variable index exceeds the chart limit");
  if (power > 255) throw std::overflow_error("monomial exponent exceeds 255");
  Monomial m;
  m.exps_[var] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

std::size_t Monomial::support_size() const {
  for (std::size_t i = kMaxVars; i > 0; --i)
    if (exps_[i - 1] != 0) return i;
  return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(exps_[i]) + rhs.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + rhs.degree_);
  return m;
}

Monomial Monomial::lowered(std::size_t var) const {
  Monomial m = *this;
  --m.exps_[var];
  --m.degree_;
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const {
  if (degree_ != rhs.degree_) return degree_ <=> rhs.degree_;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != rhs.exps_[i]) return exps_[i] <=> rhs.exps_[i];
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out{Monomial()};
  // Grow by multiplying with variables; dedupe by sorting.
  std::vector<Monomial> frontier{Monomial()};
  for (unsigned d = 1; d <= max_degree && nvars > 0; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t v = 0; v < nvars; ++v) next.push_back(m * Monomial::variable(v));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::variable(std::size_t var) { return monomial(Monomial::variable(var), Rational(1)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Rational Poly::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

std::size_t Poly::support_size() const {
  std::size_t s = 0;
  for (const auto& t : terms_) s = std::max(s, t.mono.support_size());
  return s;
}

void Poly::add_scaled(const Poly& rhs, int sign) {
  if (rhs.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].mono > rhs.terms_[j].mono)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || rhs.terms_[j].mono > terms_[i].mono) {
      out.push_back(rhs.terms_[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Term t = std::move(terms_[i++]);
      if (sign > 0)
        t.coeff += rhs.terms_[j++].coeff;
      else
        t.coeff -= rhs.terms_[j++].coeff;
      if (sgn(t.coeff) != 0) out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) raw.push_back({s.mono * t.mono, s.coeff * t.coeff});
  std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool Poly::operator==(const Poly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff) return false;
  return true;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> raw;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    if (e == 0) continue;
    raw.push_back({t.mono.lowered(var), t.coeff * e});
  }
  // Differentiating by one variable preserves the relative graded order.
  Poly p;
  p.terms_ = std::move(raw);
  return p;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.mono.support_size(); ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (i >= point.size()) throw DimensionMismatch("evaluation point too short for polynomial");
      for (unsigned k = 0; k < e; ++k) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

Poly Poly::compose(std::span<const Poly> substitutions) const {
  Poly out;
  for (const auto& t : terms_) {
    Poly v(t.coeff);
    for (std::size_t i = 0; i < t.mono.support_size(); ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (i >= substitutions.size()) throw DimensionMismatch("too few substitutions for polynomial");
      for (unsigned k = 0; k < e; ++k) v *= substitutions[i];
    }
    out += v;
  }
  return out;
}

std::vector<Rational> evaluate(std::span<const Poly> v, std::span<const Rational> point) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.evaluate(point));
  return out;
}

bool is_zero(std::span<const Poly> v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

unsigned max_degree(std::span<const Poly> v) {
  unsigned d = 0;
  for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

}  // namespace courant
