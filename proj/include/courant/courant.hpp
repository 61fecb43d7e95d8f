#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "courant/algebroid.hpp"
#include "courant/parallel.hpp"
#include "courant/report.hpp"

namespace courant {

/// e = X + xi with X in Gamma(A) and xi in Gamma(A*), both degree-1 tensors
/// over the rank-r frame.
struct DoubleSection {
  AltTensor x;
  AltTensor xi;

  bool is_zero() const { return x.is_zero() && xi.is_zero(); }
  DoubleSection& operator+=(const DoubleSection& o) {
    x += o.x;
    xi += o.xi;
    return *this;
  }
  DoubleSection& operator-=(const DoubleSection& o) {
    x -= o.x;
    xi -= o.xi;
    return *this;
  }
  friend DoubleSection operator+(DoubleSection a, const DoubleSection& b) { return a += b; }
  friend DoubleSection operator-(DoubleSection a, const DoubleSection& b) { return a -= b; }
  friend DoubleSection operator*(const Poly& f, DoubleSection a) {
    a.x *= f;
    a.xi *= f;
    return a;
  }
  DoubleSection operator-() const { return {-x, -xi}; }
  bool operator==(const DoubleSection& o) const { return x == o.x && xi == o.xi; }
};

enum class PairingSign { Plus, Minus };

/// Options for the bracket; `flip_minus_term` reverses the sign of the
/// d(e1,e2)_- term and exists to show the verifier catches it.
struct BracketOptions {
  bool flip_minus_term = false;
};

/// The double E = A + A* of a Lie bialgebroid.
class CourantDouble {
 public:
  explicit CourantDouble(Bialgebroid b, BracketOptions opts = {});

  const Bialgebroid& bialgebroid() const { return b_; }
  const ChartPtr& chart() const { return b_.chart(); }
  std::size_t rank() const { return b_.rank(); }

  DoubleSection zero() const;
  DoubleSection from_a(const AltTensor& x) const;
  DoubleSection from_astar(const AltTensor& xi) const;
  /// e_i for i < rank, e^{i-rank} after.
  DoubleSection basis(std::size_t i, const Poly& coeff = Poly(1)) const;

  /// 1/2 (<xi1, X2> +- <xi2, X1>).
  Poly pairing(const DoubleSection& e1, const DoubleSection& e2, PairingSign s) const;
  MultiVector rho(const DoubleSection& e) const;
  Poly act(const DoubleSection& e, const Poly& f) const;
  /// d_* f + d f.
  DoubleSection d_script(const Poly& f) const;
  DoubleSection bracket(const DoubleSection& e1, const DoubleSection& e2) const;
  /// 1/3 of the cyclic sum of ([e1, e2], e3)_+.
  Poly anomaly_T(const DoubleSection& e1, const DoubleSection& e2, const DoubleSection& e3) const;
  /// {f, g} = <df, d_* g>.
  Poly base_poisson(const Poly& f, const Poly& g) const;

  /// L_X eta = i_X d eta + d<X, eta> and L_xi X = i_xi d_* X + d_*<X, xi>.
  AltTensor lie_on_dual(const AltTensor& x, const AltTensor& eta) const;
  AltTensor lie_on_primal(const AltTensor& xi, const AltTensor& x) const;

  std::string render(const DoubleSection& e) const;
  std::string render(const Poly& f) const;

 private:
  Bialgebroid b_;
  BracketOptions opts_;
};

struct CourantSamples {
  std::vector<DoubleSection> sections;
  std::vector<Poly> functions;
};

/// Frame elements e_i, e^i and their x_j multiples; functions x_j and x_j^2.
CourantSamples default_samples(const CourantDouble& e);

/// Properties (i)-(v) of a Courant algebroid on every sample tuple; one report
/// line per property per tuple, in tuple order regardless of `mode`.
Report verify_courant_axioms(const CourantDouble& e, const CourantSamples& samples,
                             Execution mode = Execution::Parallel);

}  // namespace courant
