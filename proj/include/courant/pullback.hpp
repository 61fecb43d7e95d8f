#pragma once

#include <optional>
#include <vector>

#include "courant/dirac.hpp"

namespace courant {

/// Surjective bundle map Phi: A -> B covering J: P -> Q. Row i of `phi`
/// holds the B-components of Phi(e_i) as functions on P.
class BundleSurjection {
 public:
  /// Throws DimensionMismatch on shape errors and ValidationError when Phi
  /// is not onto at the generic point or has no unit echelon splitting.
  BundleSurjection(CourantDouble source, CourantDouble target, Submersion j, std::vector<PolyVector> phi);

  /// Phi = dJ between tangent doubles, with the given Poisson structures.
  static BundleSurjection tangent_map(const MultiVector& source_pi, const MultiVector& target_pi, Submersion j);

  const CourantDouble& source() const { return source_; }
  const CourantDouble& target() const { return target_; }
  const Submersion& base_map() const { return j_; }
  const std::vector<PolyVector>& phi() const { return phi_; }

  /// Phi X as B-components over P.
  PolyVector push(const AltTensor& x) const;
  /// Phi* (eta o J) for eta in Gamma(B*).
  AltTensor pull_dual(const AltTensor& eta) const;
  /// Some X with Phi X = Y o J.
  AltTensor lift(const AltTensor& y) const;
  /// (Phi*)^{-1} xi over P, or nullopt when xi is not in the image of Phi*.
  std::optional<PolyVector> unpull_dual(const AltTensor& xi) const;
  /// Frame of ker Phi.
  const std::vector<AltTensor>& kernel() const { return kernel_; }

  /// Composes the coefficients of a target section with J.
  DoubleSection compose(const DoubleSection& e) const;
  /// The function g on Q with g o J = f, when f is constant along the fibers.
  /// Needs an affine J; throws Unsupported otherwise.
  std::optional<Poly> descend(const Poly& f) const;

  /// Phi-bar = Phi + (Phi*)^{-1} on A + (ker Phi)^perp, as a section over P.
  std::optional<DoubleSection> phi_bar(const DoubleSection& e) const;

 private:
  CourantDouble source_;
  CourantDouble target_;
  Submersion j_;
  std::vector<PolyVector> phi_;
  std::vector<PolyVector> right_;  // rank(A) x rank(B), Phi^T right = I
  std::vector<AltTensor> kernel_;
};

/// The target section a source section pushes forward to, when the push
/// forward is constant along the fibers; A* sections must lie in the image
/// of Phi*.
std::optional<DoubleSection> is_admissible_section(const BundleSurjection& s, const DoubleSection& e);

/// Anchors and brackets intertwined on lifts of target frame elements and
/// their coordinate multiples, for A and for A*.
Report is_morphism(const BundleSurjection& s);

/// L-bar = Phi-bar^{-1}(L): lifts of L's frame plus ker Phi. Throws
/// ValidationError when L is not isotropic.
DiracCandidate pullback_isotropic(const BundleSurjection& s, const DiracCandidate& l);

/// is_dirac on both sides, their agreement, and Phi-bar [e1, e2] = [Phi-bar e1,
/// Phi-bar e2] o J on the frame of L-bar when both are Dirac.
Report verify_pullback_theorem(const BundleSurjection& s, const DiracCandidate& l, const DiracOptions& opts = {});

}  // namespace courant
