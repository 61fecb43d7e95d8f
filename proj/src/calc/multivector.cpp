#include "courant/calc/multivector.hpp"

#include "courant/errors.hpp"

namespace courant {

MultiVector function_mv(const ChartPtr& chart, const Poly& f) {
  return MultiVector(chart, AltTensor::scalar(chart->dim(), f));
}

DiffForm function_form(const ChartPtr& chart, const Poly& f) {
  return DiffForm(chart, AltTensor::scalar(chart->dim(), f));
}

MultiVector vector_field(const ChartPtr& chart, std::span<const Poly> components) {
  if (components.size() != chart->dim()) throw DimensionMismatch("vector field length differs from chart dimension");
  return MultiVector(chart, AltTensor::from_vector(components));
}

DiffForm one_form(const ChartPtr& chart, std::span<const Poly> components) {
  if (components.size() != chart->dim()) throw DimensionMismatch("one-form length differs from chart dimension");
  return DiffForm(chart, AltTensor::from_vector(components));
}

MultiVector coordinate_vector(const ChartPtr& chart, std::size_t i) {
  return MultiVector(chart, AltTensor::basis(chart->dim(), IndexMask(1) << i, Poly(1)));
}

DiffForm coordinate_form(const ChartPtr& chart, std::size_t i) {
  return DiffForm(chart, AltTensor::basis(chart->dim(), IndexMask(1) << i, Poly(1)));
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  require_same_chart(*a.chart(), *b.chart(), "wedge");
  return MultiVector(a.chart(), wedge(a.tensor(), b.tensor()));
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_chart(*a.chart(), *b.chart(), "wedge");
  return DiffForm(a.chart(), wedge(a.tensor(), b.tensor()));
}

Poly apply(const MultiVector& x, const Poly& f) {
  if (x.degree() != 1) throw DimensionMismatch("only vector fields act on functions");
  Poly out;
  for (const auto& [m, c] : x.tensor().components()) out += c * f.derivative(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

MultiVector schouten(const MultiVector& p, const MultiVector& q) {
  require_same_chart(*p.chart(), *q.chart(), "schouten");
  const std::size_t n = p.chart()->dim();
  const std::size_t a = p.degree();
  const std::size_t b = q.degree();
  if (a + b == 0) return MultiVector(p.chart(), 0);
  const bool odd_shift = ((a + 1) * (b + 1)) % 2 == 1;  // (a-1)(b-1) odd
  AltTensor out(n, a + b - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a > 0) out += wedge(right_derivative(p.tensor(), i), partial(q.tensor(), i));
    if (b > 0) {
      AltTensor t = wedge(right_derivative(q.tensor(), i), partial(p.tensor(), i));
      if (odd_shift)
        out += t;
      else
        out -= t;
    }
  }
  return MultiVector(p.chart(), std::move(out));
}

DiffForm de_rham(const DiffForm& w) {
  const std::size_t n = w.chart()->dim();
  AltTensor out(n, w.degree() + 1);
  for (const auto& [m, f] : w.tensor().components())
    for (std::size_t i = 0; i < n; ++i) {
      const IndexMask bit = IndexMask(1) << i;
      if (m & bit) continue;
      Poly df = f.derivative(i);
      if (df.is_zero()) continue;
      out.add(m | bit, wedge_sign(bit, m) > 0 ? df : -df);
    }
  return DiffForm(w.chart(), std::move(out));
}

DiffForm differential(const ChartPtr& chart, const Poly& f) { return de_rham(function_form(chart, f)); }

MultiVector interior(const DiffForm& xi, const MultiVector& p) {
  require_same_chart(*xi.chart(), *p.chart(), "interior");
  return MultiVector(p.chart(), contract(xi.tensor(), p.tensor()));
}

DiffForm interior(const MultiVector& x, const DiffForm& w) {
  require_same_chart(*x.chart(), *w.chart(), "interior");
  return DiffForm(w.chart(), contract(x.tensor(), w.tensor()));
}

DiffForm lie_derivative(const MultiVector& x, const DiffForm& w) {
  require_same_chart(*x.chart(), *w.chart(), "lie derivative");
  if (x.degree() != 1) throw DimensionMismatch("Lie derivative needs a vector field");
  if (w.degree() == 0) return function_form(w.chart(), apply(x, w.tensor()[0]));
  DiffForm out = interior(x, de_rham(w));
  out += de_rham(interior(x, w));
  return out;
}

Poly evaluate_bivector(const MultiVector& pi, const DiffForm& xi, const DiffForm& eta) {
  if (pi.degree() != 2) throw DimensionMismatch("expected a bivector");
  return interior(eta, interior(xi, pi)).tensor()[0];
}

}  // namespace courant
