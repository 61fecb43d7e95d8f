#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "courant/calc/alt_tensor.hpp"
#include "courant/calc/chart.hpp"
#include "courant/calc/multivector.hpp"
#include "courant/report.hpp"

namespace courant {

/// Sections, multisections (Gamma(^A)) and cochains (Gamma(^A*)) of a rank-r
/// algebroid are all AltTensors over the rank-r frame; the algebroid decides
/// how they are read.
using Section = AltTensor;

/// Lie algebroid over a chart presented by a global frame e_1..e_r, the anchor
/// images a(e_i) and structure functions [e_i, e_j] = sum_k c^k_ij e_k.
class Algebroid {
 public:
  /// anchor[i] holds the n components of a(e_i); brackets[i][j] the r
  /// components of [e_i, e_j] (only i < j is read; the rest follows by
  /// antisymmetry). Missing brackets are zero.
  Algebroid(ChartPtr chart, std::vector<std::string> frame_names, std::vector<std::string> dual_names,
            std::vector<PolyVector> anchor, std::vector<std::vector<PolyVector>> brackets);

  static Algebroid tangent(const ChartPtr& chart);
  /// T*P with anchor pi# (<eta, pi# xi> = pi(xi, eta)) and the Koszul bracket
  /// [dx_i, dx_j] = d pi^{ij}. Throws ValidationError unless [pi, pi] = 0.
  static Algebroid cotangent(const MultiVector& pi);
  /// Zero anchor and zero bracket.
  static Algebroid trivial(const ChartPtr& chart, std::vector<std::string> frame_names,
                           std::vector<std::string> dual_names);

  const ChartPtr& chart() const { return chart_; }
  std::size_t rank() const { return rank_; }
  std::size_t base_dim() const { return chart_->dim(); }
  const std::vector<std::string>& frame_names() const { return frame_names_; }
  const std::vector<std::string>& dual_names() const { return dual_names_; }
  const PolyVector& anchor_of(std::size_t i) const { return anchor_[i]; }
  /// Components of [e_i, e_j].
  PolyVector structure(std::size_t i, std::size_t j) const;

  Section section(std::span<const Poly> coeffs) const;
  Section frame(std::size_t i, const Poly& coeff = Poly(1)) const;
  AltTensor scalar(const Poly& f) const { return AltTensor::scalar(rank_, f); }

  /// Anchor image of a section as a vector field.
  MultiVector anchor(const Section& x) const;
  /// a(X) f.
  Poly act(const Section& x, const Poly& f) const;
  Poly act_frame(std::size_t i, const Poly& f) const;

  Section bracket(const Section& x, const Section& y) const;

  /// Chevalley-Eilenberg differential on cochains (Gamma(^A*)).
  AltTensor differential(const AltTensor& cochain) const;

  /// Schouten extension of the bracket to Gamma(^A), with [X, f] = a(X) f.
  AltTensor schouten(const AltTensor& p, const AltTensor& q) const;

  /// Multisection rendering (frame names) and cochain rendering (dual names).
  std::string render(const AltTensor& t) const;
  std::string render_dual(const AltTensor& t) const;

 private:
  ChartPtr chart_;
  std::size_t rank_;
  std::vector<std::string> frame_names_;
  std::vector<std::string> dual_names_;
  std::vector<PolyVector> anchor_;
  std::vector<std::vector<PolyVector>> c_;  // full antisymmetric table
  bool zero_bracket_ = true;
};

using AlgebroidPtr = std::shared_ptr<const Algebroid>;

/// Jacobi, anchor homomorphism and Leibniz on frame elements and their
/// monomial multiples of degree <= max_deg.
Report verify_algebroid(const Algebroid& a, unsigned max_deg = 2);

/// A dual pair (A, A*): A* is presented on the dual frame of A.
class Bialgebroid {
 public:
  Bialgebroid(Algebroid a, Algebroid astar);

  /// (TP, T*P) with the cotangent Koszul structure of pi.
  static Bialgebroid from_poisson(const MultiVector& pi);

  const Algebroid& a() const { return a_; }
  const Algebroid& astar() const { return astar_; }
  const ChartPtr& chart() const { return a_.chart(); }
  std::size_t rank() const { return a_.rank(); }

  /// d_* on Gamma(^A) (A*'s differential) and d on Gamma(^A*).
  AltTensor d_star(const AltTensor& multisection) const { return astar_.differential(multisection); }
  AltTensor d(const AltTensor& cochain) const { return a_.differential(cochain); }

  /// The pair with roles exchanged: (A*, A).
  Bialgebroid flipped() const { return Bialgebroid(astar_, a_); }

 private:
  Algebroid a_;
  Algebroid astar_;
};

using BialgebroidPtr = std::shared_ptr<const Bialgebroid>;

/// d_*[X, Y] = [d_*X, Y] + [X, d_*Y] on frame pairs and monomial multiples,
/// and the same derivation rule on (section, function) pairs; the latter is
/// what detects incompatible pairs in rank one.
Report verify_bialgebroid(const Bialgebroid& b, unsigned max_deg = 2);

}  // namespace courant
