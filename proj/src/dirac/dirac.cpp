#include "courant/dirac.hpp"

#include <algorithm>

#include "courant/calc/text.hpp"
#include "courant/errors.hpp"
#include "courant/exact/subspace.hpp"

namespace courant {

PolyVector flatten(const DoubleSection& e) {
  PolyVector v = e.x.as_vector();
  const PolyVector w = e.xi.as_vector();
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

DoubleSection unflatten(std::span<const Poly> v, std::size_t rank) {
  if (v.size() != 2 * rank) throw DimensionMismatch("row length differs from twice the rank");
  return {AltTensor::from_vector(v.subspan(0, rank)), AltTensor::from_vector(v.subspan(rank))};
}

namespace {

std::vector<PolyVector> frame_rows(const DiracCandidate& l) {
  std::vector<PolyVector> rows;
  for (const auto& s : l.frame) rows.push_back(flatten(s));
  return rows;
}

unsigned frame_degree(const std::vector<PolyVector>& rows) {
  unsigned d = 0;
  for (const auto& r : rows) d = std::max(d, max_degree(r));
  return d;
}

unsigned cap_for(const DiracOptions& opts, unsigned frame_deg, std::span<const Poly> v) {
  return opts.degree_cap ? *opts.degree_cap : max_degree(v) + frame_deg + 1;
}

std::string label(std::size_t i) { return "L[" + std::to_string(i + 1) + "]"; }

RatMatrix evaluate_frame(const DiracCandidate& l, std::span<const Rational> point, std::size_t width) {
  return evaluate_rows(frame_rows(l), width, point);
}

Report prefixed(const Report& r, const std::string& prefix) {
  Report out;
  for (Check c : r.checks()) {
    c.name = prefix + c.name;
    out.add(std::move(c));
  }
  for (const auto& n : r.notes()) out.note(n);
  return out;
}

std::string render_row(const CourantDouble& e, std::span<const Poly> v) { return e.render(unflatten(v, e.rank())); }

}  // namespace

std::size_t pointwise_rank(const DiracCandidate& l, std::span<const Rational> point) {
  if (l.frame.empty()) return 0;
  return rank(evaluate_frame(l, point, 2 * l.frame.front().x.dim()));
}

std::vector<Rational> generic_point(const CourantDouble& e, const DiracCandidate& l) {
  const std::size_t n = e.chart()->dim();
  if (l.point) {
    if (l.point->size() != n) throw DimensionMismatch("generic point has the wrong number of coordinates");
    return *l.point;
  }
  std::vector<Rational> ones(n, Rational(1));
  std::size_t best = pointwise_rank(l, ones);
  for (const auto& p : sample_points(n, 3)) best = std::max(best, pointwise_rank(l, p));
  if (pointwise_rank(l, ones) == best) return ones;
  for (long k = 1; k <= 16; ++k) {
    std::vector<Rational> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(k + 1 + static_cast<long>(i));
    if (pointwise_rank(l, p) == best) return p;
  }
  for (const auto& p : sample_points(n, 3))
    if (pointwise_rank(l, p) == best) return p;
  return ones;
}

Report is_isotropic(const CourantDouble& e, const DiracCandidate& l) {
  Report r;
  for (std::size_t i = 0; i < l.frame.size(); ++i)
    for (std::size_t j = i; j < l.frame.size(); ++j) {
      const Poly p = e.pairing(l.frame[i], l.frame[j], PairingSign::Plus);
      r.add("ISOTROPIC", label(i) + ", " + label(j), p.is_zero() ? Status::Pass : Status::Fail,
            p.is_zero() ? "" : e.render(p));
    }
  return r;
}

unsigned effective_cap(const CourantDouble& e, const DiracCandidate& l, const DiracOptions& opts) {
  if (opts.degree_cap) return *opts.degree_cap;
  unsigned d = 0;
  for (std::size_t i = 0; i < l.frame.size(); ++i)
    for (std::size_t j = i + 1; j < l.frame.size(); ++j) {
      const PolyVector v = flatten(e.bracket(l.frame[i], l.frame[j]));
      d = std::max(d, max_degree(v));
    }
  return d + frame_degree(frame_rows(l)) + 1;
}

Report is_integrable(const CourantDouble& e, const DiracCandidate& l, const DiracOptions& opts) {
  Report r;
  const auto rows = frame_rows(l);
  const std::size_t width = 2 * e.rank();
  const UnitEchelon ech = unit_echelon(rows, width);
  const unsigned fdeg = frame_degree(rows);
  const std::size_t n = e.chart()->dim();
  for (std::size_t i = 0; i < l.frame.size(); ++i)
    for (std::size_t j = i + 1; j < l.frame.size(); ++j) {
      const PolyVector v = flatten(e.bracket(l.frame[i], l.frame[j]));
      const unsigned cap = cap_for(opts, fdeg, v);
      const auto m = module_member(rows, ech, v, n, cap);
      const std::string inputs = label(i) + ", " + label(j);
      switch (m.verdict) {
        case Membership::Yes: r.add("CLOSED", inputs, Status::Pass); break;
        case Membership::No: r.add("CLOSED", inputs, Status::Fail, render_row(e, m.residual)); break;
        case Membership::Unknown:
          r.add("CLOSED", inputs, Status::Inconclusive, "undecided within cap=" + std::to_string(cap));
          break;
      }
    }
  if (!ech.complete()) r.note("frame has no unit echelon basis; membership used pointwise refutation and capped solves");
  return r;
}

Algebroid induced_algebroid(const CourantDouble& e, const DiracCandidate& l) {
  const std::size_t r = e.rank();
  const UnitEchelon ech = unit_echelon(frame_rows(l), 2 * r);
  if (!ech.complete() || ech.rows.size() != r)
    throw Unsupported("frame has no unit echelon basis of rank " + std::to_string(r));
  std::vector<DoubleSection> basis;
  for (const auto& row : ech.rows) basis.push_back(unflatten(row, r));
  std::vector<PolyVector> anchor;
  for (const auto& b : basis) {
    const MultiVector v = e.rho(b);
    PolyVector comp(e.chart()->dim());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = v[IndexMask(1) << i];
    anchor.push_back(std::move(comp));
  }
  std::vector<std::vector<PolyVector>> br(r, std::vector<PolyVector>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const PolyVector v = flatten(e.bracket(basis[i], basis[j]));
      if (!is_zero(ech.residual(v))) throw ValidationError("frame is not closed under the bracket");
      PolyVector c(r);
      for (std::size_t k = 0; k < r; ++k) c[k] = v[ech.pivots[k]];
      br[i][j] = std::move(c);
    }
  std::vector<std::string> names, dual;
  for (std::size_t i = 0; i < r; ++i) {
    names.push_back("l" + std::to_string(i + 1));
    dual.push_back("l*" + std::to_string(i + 1));
  }
  return Algebroid(e.chart(), names, dual, anchor, br);
}

Report is_dirac(const CourantDouble& e, const DiracCandidate& l, const DiracOptions& opts) {
  Report r;
  const std::size_t rk = e.rank();
  const auto point = generic_point(e, l);
  std::string at = "point (";
  for (std::size_t i = 0; i < point.size(); ++i) at += (i ? "," : "") + to_string(point[i]);
  at += ")";
  const std::size_t pr = pointwise_rank(l, point);
  r.add("RANK", at, pr == rk ? Status::Pass : Status::Fail,
        pr == rk ? "" : "rank " + std::to_string(pr) + " expected " + std::to_string(rk));
  r.append(is_isotropic(e, l));

  const Subspace s = Subspace::span(evaluate_frame(l, point, 2 * rk));
  const BilinearForm b = BilinearForm::hyperbolic(rk, Rational(1, 2));
  const bool maximal = is_maximal_isotropic(s, b) && orthogonal_complement(s, b) == s;
  r.add("MAXIMAL", at, maximal ? Status::Pass : Status::Fail, maximal ? "" : "L^perp differs from L");

  r.append(is_integrable(e, l, opts));
  if (r.passed()) {
    try {
      r.append(prefixed(verify_algebroid(induced_algebroid(e, l), 1), "INDUCED_"));
    } catch (const Unsupported& u) {
      r.note(std::string("induced algebroid not checked: ") + u.what());
    }
  }
  return r;
}

std::string dirac_verdict(const Report& r, unsigned cap) {
  switch (r.status()) {
    case Status::Pass: return "DIRAC: yes";
    case Status::Fail: return "DIRAC: no";
    case Status::Inconclusive: return "DIRAC: inconclusive(cap=" + std::to_string(cap) + ")";
  }
  return "";
}

std::vector<MultiVector> characteristic_distribution(const CourantDouble& e, const DiracCandidate& l) {
  const std::size_t r = e.rank();
  std::vector<std::size_t> dual_cols, primal_cols;
  for (std::size_t i = 0; i < r; ++i) {
    primal_cols.push_back(i);
    dual_cols.push_back(r + i);
  }
  const UnitEchelon ech = unit_echelon(frame_rows(l), 2 * r, {dual_cols, primal_cols});
  if (!ech.complete()) throw Unsupported("frame has no unit echelon basis; L cap A not computed");
  std::vector<MultiVector> out;
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    if (ech.group_of[k] != 1) continue;
    const DoubleSection s = unflatten(ech.rows[k], r);
    if (!s.xi.is_zero()) throw Unsupported("L cap A is not spanned by echelon rows in this frame");
    out.push_back(e.rho(s));
  }
  return out;
}

Admissibility admissible(const CourantDouble& e, const DiracCandidate& l, const Poly& f, const DiracOptions& opts) {
  std::vector<PolyVector> proj;
  for (const auto& s : l.frame) proj.push_back(s.xi.as_vector());
  const UnitEchelon ech = unit_echelon(proj, e.rank());
  const PolyVector df = e.d_script(f).xi.as_vector();
  const unsigned cap = cap_for(opts, frame_degree(frame_rows(l)), df);
  const auto m = module_member(proj, ech, df, e.chart()->dim(), cap);
  Admissibility a;
  a.verdict = m.verdict;
  if (m.verdict == Membership::Yes) {
    a.e_f = e.zero();
    for (std::size_t k = 0; k < l.frame.size(); ++k) a.e_f += m.coefficients[k] * l.frame[k];
  }
  return a;
}

namespace {

DoubleSection require_admissible(const CourantDouble& e, const DiracCandidate& l, const Poly& f,
                                 const DiracOptions& opts) {
  const Admissibility a = admissible(e, l, f, opts);
  if (a.verdict == Membership::No) throw ValidationError(e.render(f) + " is not L-admissible");
  if (a.verdict == Membership::Unknown)
    throw ValidationError("admissibility of " + e.render(f) + " undecided within the degree cap");
  return a.e_f;
}

}  // namespace

Poly reduced_bracket(const CourantDouble& e, const DiracCandidate& l, const Poly& f, const Poly& g,
                     const DiracOptions& opts) {
  const DoubleSection ef = require_admissible(e, l, f, opts);
  require_admissible(e, l, g, opts);
  return e.act(ef, g);
}

AltTensor astar_component_identity(const CourantDouble& e, const DiracCandidate& l, const Poly& f, const Poly& g,
                                   const DiracOptions& opts) {
  const DoubleSection ef = require_admissible(e, l, f, opts);
  const DoubleSection eg = require_admissible(e, l, g, opts);
  return e.bracket(ef, eg).xi - e.d_script(e.act(ef, g)).xi;
}

Membership same_subbundle(const CourantDouble& e, const DiracCandidate& a, const DiracCandidate& b,
                          const DiracOptions& opts) {
  Membership out = Membership::Yes;
  auto contains = [&](const DiracCandidate& big, const DiracCandidate& small) {
    const auto rows = frame_rows(big);
    const UnitEchelon ech = unit_echelon(rows, 2 * e.rank());
    for (const auto& s : small.frame) {
      const PolyVector v = flatten(s);
      const auto m = module_member(rows, ech, v, e.chart()->dim(), cap_for(opts, frame_degree(rows), v));
      if (m.verdict == Membership::No) {
        out = Membership::No;
        return;
      }
      if (m.verdict == Membership::Unknown) out = Membership::Unknown;
    }
  };
  contains(a, b);
  if (out != Membership::No) contains(b, a);
  return out;
}

DiracCandidate graph_of_bivector(const CourantDouble& e, const AltTensor& lambda) {
  const std::size_t r = e.rank();
  if (lambda.dim() != r || (lambda.degree() != 2 && !lambda.is_zero()))
    throw DimensionMismatch("graph needs a bivector over the frame of A");
  DiracCandidate l;
  for (std::size_t i = 0; i < r; ++i) {
    const AltTensor ei = AltTensor::basis(r, IndexMask(1) << i, Poly(1));
    DoubleSection s = e.from_astar(ei);
    if (lambda.degree() == 2) s.x += contract(ei, lambda);
    l.frame.push_back(std::move(s));
  }
  return l;
}

DiracCandidate graph_of_form(const CourantDouble& e, const AltTensor& theta) {
  const std::size_t r = e.rank();
  if (theta.dim() != r || (theta.degree() != 2 && !theta.is_zero()))
    throw DimensionMismatch("graph needs a 2-form over the frame of A*");
  DiracCandidate l;
  for (std::size_t i = 0; i < r; ++i) {
    const AltTensor ei = AltTensor::basis(r, IndexMask(1) << i, Poly(1));
    DoubleSection s = e.from_a(ei);
    if (theta.degree() == 2) s.xi += contract(ei, theta);
    l.frame.push_back(std::move(s));
  }
  return l;
}

DiracCandidate null_dirac(const CourantDouble& e, const std::vector<AltTensor>& d) {
  const std::size_t r = e.rank();
  std::vector<PolyVector> rows;
  for (const auto& x : d) {
    if (x.dim() != r || x.degree() != 1) throw DimensionMismatch("distribution generators must be sections of A");
    rows.push_back(x.as_vector());
  }
  const UnitEchelon ech = unit_echelon(rows, r);
  if (!ech.complete()) throw Unsupported("distribution has no unit echelon basis");
  const Algebroid& a = e.bialgebroid().a();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const PolyVector v = a.bracket(d[i], d[j]).as_vector();
      if (!is_zero(ech.residual(v)))
        throw ValidationError("distribution is not involutive: [" + a.render(d[i]) + ", " + a.render(d[j]) +
                              "] = " + a.render(AltTensor::from_vector(v)));
    }
  DiracCandidate l;
  for (const auto& row : ech.rows) l.frame.push_back(e.from_a(AltTensor::from_vector(row)));
  std::vector<bool> is_pivot(r, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < r; ++c) {
    if (is_pivot[c]) continue;
    PolyVector w(r);
    w[c] = Poly(1);
    for (std::size_t k = 0; k < ech.rows.size(); ++k) w[ech.pivots[k]] -= ech.rows[k][c];
    l.frame.push_back(e.from_astar(AltTensor::from_vector(w)));
  }
  return l;
}

DiracCandidate dirac_from_quotient(const CourantDouble& e, const QuotientPoisson& q) {
  const ChartPtr& src = e.chart();
  const std::size_t n = src->dim();
  const std::size_t m = q.j.target->dim();
  require_same_chart(*src, *q.j.source, "quotient construction");
  require_same_chart(*q.j.target, *q.bracket.chart(), "quotient bracket");
  if (q.j.components.size() != m) throw DimensionMismatch("submersion needs one component per target coordinate");
  if (!q.bracket.is_zero() && q.bracket.degree() != 2) throw DimensionMismatch("quotient bracket must be a bivector");
  if (!q.bracket.is_zero()) {
    const MultiVector res = schouten(q.bracket, q.bracket);
    if (!res.is_zero()) throw ValidationError("quotient bracket is not Poisson: [pi,pi] = " + to_string(res));
  }
  const Algebroid& a = e.bialgebroid().a();
  if (a.rank() != n) throw Unsupported("quotient construction needs A = TP");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!(a.anchor_of(i)[k] == Poly(i == k ? 1 : 0))) throw Unsupported("quotient construction needs A = TP");

  std::vector<PolyVector> jac(m, PolyVector(n));
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t i = 0; i < n; ++i) jac[b][i] = q.j.components[b].derivative(i);
  const UnitEchelon ech = unit_echelon(jac, n);
  if (!ech.complete() || ech.rows.size() != m)
    throw Unsupported("Jacobian of J has no unit echelon basis of rank " + std::to_string(m));

  // Right inverse of the Jacobian: R[p_k][b] = T[k][b].
  std::vector<PolyVector> right(n, PolyVector(m));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t b = 0; b < m; ++b) right[ech.pivots[k]][b] = ech.transform[k][b];

  DiracCandidate l;
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    PolyVector v(n);
    v[c] = Poly(1);
    for (std::size_t k = 0; k < m; ++k) v[ech.pivots[k]] = -ech.rows[k][c];
    l.frame.push_back(e.from_a(AltTensor::from_vector(v)));
  }

  std::vector<DoubleSection> dj;
  for (std::size_t b = 0; b < m; ++b) dj.push_back(e.from_astar(e.d_script(q.j.components[b]).xi));
  for (std::size_t b = 0; b < m; ++b) {
    PolyVector y(n);
    for (std::size_t c = 0; c < m; ++c) {
      const Poly table = q.bracket.is_zero()
                             ? Poly()
                             : q.j.pull(q.bracket.tensor().on_sequence(std::vector<std::size_t>{b, c}));
      const Poly omega = table - e.act(dj[b], q.j.components[c]);
      if (omega.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) y[i] += omega * right[i][c];
    }
    l.frame.push_back(dj[b] + e.from_a(AltTensor::from_vector(y)));
  }
  return l;
}

AltTensor hamiltonian_residual(const Bialgebroid& b, const AltTensor& i) {
  if (i.dim() != b.rank() || (i.degree() != 2 && !i.is_zero()))
    throw DimensionMismatch("hamiltonian operator must be a 2-cochain");
  if (i.is_zero()) return AltTensor(b.rank(), 3);
  return b.d(i) + b.astar().schouten(i, i) * Poly(Rational(1, 2));
}

Report hamiltonian_check(const Bialgebroid& b, const AltTensor& i, const DiracOptions& opts) {
  Report r;
  const AltTensor res = hamiltonian_residual(b, i);
  const std::string input = i.is_zero() ? "0" : b.a().render_dual(i);
  r.add("HAMILTONIAN", input, res.is_zero() ? Status::Pass : Status::Fail,
        res.is_zero() ? "" : b.a().render_dual(res));
  const CourantDouble e(b);
  const DiracCandidate g = graph_of_form(e, i.is_zero() ? AltTensor(b.rank(), 2) : i);
  const Report dirac = is_dirac(e, g, opts);
  const Status ds = dirac.status();
  r.add("GRAPH_DIRAC", input, ds, ds == Status::Pass ? "" : dirac_verdict(dirac, effective_cap(e, g, opts)));
  const bool agree = ds != Status::Inconclusive && (ds == Status::Pass) == res.is_zero();
  r.add("AGREE", input, ds == Status::Inconclusive ? Status::Inconclusive : (agree ? Status::Pass : Status::Fail),
        agree ? "" : "hamiltonian test and graph test disagree");
  return r;
}

}  // namespace courant
