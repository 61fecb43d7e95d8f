#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "courant/calc/poly_module.hpp"
#include "courant/courant.hpp"

namespace courant {

/// A subbundle of E = A + A* presented by a spanning set of sections. The
/// generic point is where pointwise ranks are read off.
struct DiracCandidate {
  std::vector<DoubleSection> frame;
  std::optional<std::vector<Rational>> point;
};

/// Degree cap for polynomial membership; nullopt means the default
/// (degree of the target + highest frame degree + 1).
struct DiracOptions {
  std::optional<unsigned> degree_cap;
};

/// Row form (A components, then A* components) of a section.
PolyVector flatten(const DoubleSection& e);
DoubleSection unflatten(std::span<const Poly> v, std::size_t rank);

/// Base point used for rank checks: the candidate's own point when set,
/// otherwise (1,...,1), moved along (k+1, k+2, ...) until the rank is the
/// largest seen at a few probe points.
std::vector<Rational> generic_point(const CourantDouble& e, const DiracCandidate& l);
std::size_t pointwise_rank(const DiracCandidate& l, std::span<const Rational> point);

Report is_isotropic(const CourantDouble& e, const DiracCandidate& l);
Report is_integrable(const CourantDouble& e, const DiracCandidate& l, const DiracOptions& opts = {});
/// Rank, isotropy, maximality at the generic point, closure under the bracket,
/// and, when all hold, the Lie algebroid axioms on L itself.
Report is_dirac(const CourantDouble& e, const DiracCandidate& l, const DiracOptions& opts = {});

/// `DIRAC: yes`, `DIRAC: no` or `DIRAC: inconclusive(cap=k)`.
std::string dirac_verdict(const Report& r, unsigned cap);
/// Cap reported for an inconclusive run with these options.
unsigned effective_cap(const CourantDouble& e, const DiracCandidate& l, const DiracOptions& opts);

/// The induced algebroid on L, from a unit echelon basis of the frame.
/// Throws Unsupported when the frame has no such basis.
Algebroid induced_algebroid(const CourantDouble& e, const DiracCandidate& l);

/// Anchor images of a spanning set of L cap A.
std::vector<MultiVector> characteristic_distribution(const CourantDouble& e, const DiracCandidate& l);

struct Admissibility {
  Membership verdict = Membership::Unknown;
  DoubleSection e_f;  // Y_f + df when verdict == Yes
};

Admissibility admissible(const CourantDouble& e, const DiracCandidate& l, const Poly& f, const DiracOptions& opts = {});

/// rho(Y_f + df) g. Throws ValidationError when f or g is not admissible.
Poly reduced_bracket(const CourantDouble& e, const DiracCandidate& l, const Poly& f, const Poly& g,
                     const DiracOptions& opts = {});
/// A*-part of [e_f, e_g] minus d{f, g}.
AltTensor astar_component_identity(const CourantDouble& e, const DiracCandidate& l, const Poly& f, const Poly& g,
                                   const DiracOptions& opts = {});

/// Both frames generate the same module.
Membership same_subbundle(const CourantDouble& e, const DiracCandidate& a, const DiracCandidate& b,
                          const DiracOptions& opts = {});

/// {Lambda#(e^i) + e^i} for Lambda in Gamma(^2 A), Lambda#(e^i) = i_{e^i} Lambda.
DiracCandidate graph_of_bivector(const CourantDouble& e, const AltTensor& lambda);
/// {e_i + i_{e_i} theta} for theta in Gamma(^2 A*).
DiracCandidate graph_of_form(const CourantDouble& e, const AltTensor& theta);

/// D + D^perp for D spanned by sections of A. Throws ValidationError when
/// D is not closed under the bracket, Unsupported when D has no unit
/// echelon basis.
DiracCandidate null_dirac(const CourantDouble& e, const std::vector<AltTensor>& d);

/// Polynomial map between charts with constant-rank Jacobian.
struct Submersion {
  ChartPtr source;
  ChartPtr target;
  std::vector<Poly> components;  // in source coordinates, one per target coordinate

  Poly pull(const Poly& g) const { return g.compose(components); }
};

/// Poisson structure on the target of J.
struct QuotientPoisson {
  Submersion j;
  MultiVector bracket;  // bivector on the target chart
};

/// L with a(L cap A) = ker dJ whose reduced bracket is the quotient one:
/// ker dJ plus Y_a + dJ^a, where Y_a(J^b) = J*{u_a, u_b} - pi(dJ^a, dJ^b).
/// Requires a Poisson quotient table and a Jacobian whose unit echelon is
/// complete of full rank (linear J or a coordinate foliation).
DiracCandidate dirac_from_quotient(const CourantDouble& e, const QuotientPoisson& q);

/// Residual dI + 1/2 [I, I] for I in Gamma(^2 B*), with d the differential of
/// B and [,] the Schouten bracket of B*.
AltTensor hamiltonian_residual(const Bialgebroid& b, const AltTensor& i);
/// HAMILTONIAN from the residual and GRAPH_DIRAC from is_dirac on the graph
/// of I in the double of `b`, plus AGREE comparing the two.
Report hamiltonian_check(const Bialgebroid& b, const AltTensor& i, const DiracOptions& opts = {});

}  // namespace courant
