#pragma once

#include <cstddef>
#include <span>

#include "courant/calc/alt_tensor.hpp"
#include "courant/calc/chart.hpp"
#include "courant/errors.hpp"
#include "courant/calc/poly.hpp"

namespace courant {

namespace detail {

// Shared storage for chart-bound tensors; Tag distinguishes vectors from forms.
template <class Tag>
class ChartTensor {
 public:
  ChartTensor(ChartPtr chart, AltTensor t) : chart_(std::move(chart)), t_(std::move(t)) {
    if (t_.dim() != chart_->dim()) throw DimensionMismatch("tensor rank differs from chart dimension");
  }
  ChartTensor(ChartPtr chart, std::size_t degree) : ChartTensor(chart, AltTensor(chart->dim(), degree)) {}

  const ChartPtr& chart() const { return chart_; }
  const AltTensor& tensor() const { return t_; }
  std::size_t degree() const { return t_.degree(); }
  bool is_zero() const { return t_.is_zero(); }
  const Poly& operator[](IndexMask m) const { return t_[m]; }
  void add(IndexMask m, const Poly& v) { t_.add(m, v); }

  ChartTensor& operator+=(const ChartTensor& rhs) {
    require_same_chart(*chart_, *rhs.chart_, "sum");
    t_ += rhs.t_;
    return *this;
  }
  ChartTensor& operator-=(const ChartTensor& rhs) {
    require_same_chart(*chart_, *rhs.chart_, "difference");
    t_ -= rhs.t_;
    return *this;
  }
  friend ChartTensor operator+(ChartTensor a, const ChartTensor& b) { return a += b; }
  friend ChartTensor operator-(ChartTensor a, const ChartTensor& b) { return a -= b; }
  friend ChartTensor operator*(const Poly& f, ChartTensor a) {
    a.t_ *= f;
    return a;
  }
  ChartTensor operator-() const { return ChartTensor(chart_, -t_); }
  bool operator==(const ChartTensor& rhs) const { return *chart_ == *rhs.chart_ && t_ == rhs.t_; }

 private:
  ChartPtr chart_;
  AltTensor t_;
};

struct VectorTag {};
struct FormTag {};

}  // namespace detail

/// Multivector field sum f_I d/dx_{i1}^...^d/dx_{ik}.
using MultiVector = detail::ChartTensor<detail::VectorTag>;
/// Differential form sum f_I dx_{i1}^...^dx_{ik}.
using DiffForm = detail::ChartTensor<detail::FormTag>;

MultiVector function_mv(const ChartPtr& chart, const Poly& f);
DiffForm function_form(const ChartPtr& chart, const Poly& f);
MultiVector vector_field(const ChartPtr& chart, std::span<const Poly> components);
DiffForm one_form(const ChartPtr& chart, std::span<const Poly> components);
MultiVector coordinate_vector(const ChartPtr& chart, std::size_t i);  // d/dx_i
DiffForm coordinate_form(const ChartPtr& chart, std::size_t i);       // dx_i

MultiVector wedge(const MultiVector& a, const MultiVector& b);
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// X(f) for a vector field X.
Poly apply(const MultiVector& x, const Poly& f);

/// Schouten-Nijenhuis bracket. On vector fields it is the Lie bracket and
/// [X, f] = X(f); [pi, pi] = 0 exactly when pi is Poisson.
MultiVector schouten(const MultiVector& p, const MultiVector& q);

DiffForm de_rham(const DiffForm& w);
DiffForm differential(const ChartPtr& chart, const Poly& f);

MultiVector interior(const DiffForm& xi, const MultiVector& p);
DiffForm interior(const MultiVector& x, const DiffForm& w);

/// Cartan formula i_X d + d i_X.
DiffForm lie_derivative(const MultiVector& x, const DiffForm& w);

/// pi(xi, eta) = i_eta i_xi pi for a bivector.
Poly evaluate_bivector(const MultiVector& pi, const DiffForm& xi, const DiffForm& eta);

/// Component-wise Poisson test residual [pi, pi].
inline MultiVector poisson_residual(const MultiVector& pi) { return schouten(pi, pi); }

}  // namespace courant
