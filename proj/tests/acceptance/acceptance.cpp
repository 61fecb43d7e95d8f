// Acceptance run: one line per criterion, exact arithmetic throughout.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "courant/bialgebra.hpp"
#include "courant/calc/text.hpp"
#include "courant/cli/run.hpp"
#include "courant/pullback.hpp"

using namespace courant;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  bool documented = false;  // known-unattainable sub-claim, see README

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

ChartPtr chart_of(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return make_chart(names);
}

MultiVector bivector(const ChartPtr& c, const std::string& text) {
  MultiVector m = parse_multivector(text, c);
  return m.is_zero() ? MultiVector(c, 2) : m;
}

CourantDouble poisson_double(const MultiVector& pi, BracketOptions o = {}) {
  return CourantDouble(Bialgebroid::from_poisson(pi), o);
}

// ---- oracles ---------------------------------------------------------------

// The double of (TP, T*P; pi) in chart form: d_* = [pi, .], Koszul bracket on
// forms, mixed terms by Cartan formulas.
struct ChartCourant {
  MultiVector pi;

  MultiVector dstar(const MultiVector& p) const { return schouten(pi, p); }
  MultiVector lie_form_on_vector(const DiffForm& xi, const MultiVector& x) const {
    return interior(xi, dstar(x)) + dstar(function_mv(pi.chart(), interior(x, xi)[0]));
  }
  DiffForm koszul(const DiffForm& a, const DiffForm& b) const {
    return lie_derivative(interior(a, pi), b) - lie_derivative(interior(b, pi), a) -
           differential(pi.chart(), evaluate_bivector(pi, a, b));
  }
  std::pair<MultiVector, DiffForm> bracket(const std::pair<MultiVector, DiffForm>& e1,
                                           const std::pair<MultiVector, DiffForm>& e2) const {
    const auto& [x1, a1] = e1;
    const auto& [x2, a2] = e2;
    const Poly m = (interior(x2, a1)[0] - interior(x1, a2)[0]) * Poly(Rational(1, 2));
    return {schouten(x1, x2) + lie_form_on_vector(a1, x2) - lie_form_on_vector(a2, x1) -
                dstar(function_mv(pi.chart(), m)),
            koszul(a1, a2) + lie_derivative(x1, a2) - lie_derivative(x2, a1) + differential(pi.chart(), m)};
  }
  Poly pairing(const std::pair<MultiVector, DiffForm>& e1, const std::pair<MultiVector, DiffForm>& e2) const {
    return (interior(e2.first, e1.second)[0] + interior(e1.first, e2.second)[0]) * Poly(Rational(1, 2));
  }
};

// J^{ijk} = sum_l pi^{il} d_l pi^{jk} + cyclic, from coefficients only.
Poly schouten_component(const MultiVector& pi, std::size_t i, std::size_t j, std::size_t k) {
  auto entry = [&](std::size_t a, std::size_t b) -> Poly {
    if (a == b) return Poly();
    const IndexMask m = (IndexMask(1) << a) | (IndexMask(1) << b);
    return a < b ? pi.tensor()[m] : -pi.tensor()[m];
  };
  Poly sum;
  const std::size_t n = pi.chart()->dim();
  for (std::size_t l = 0; l < n; ++l)
    sum += entry(i, l) * entry(j, k).derivative(l) + entry(j, l) * entry(k, i).derivative(l) +
           entry(k, l) * entry(i, j).derivative(l);
  return sum;
}

bool poisson_by_components(const MultiVector& pi) {
  const std::size_t n = pi.chart()->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!schouten_component(pi, i, j, k).is_zero()) return false;
  return true;
}

using Table = std::function<Rational(std::size_t, std::size_t, std::size_t)>;

bool brute_force_jacobi(std::size_t n, const Table& s) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Rational sum = 0;
          for (std::size_t l = 0; l < n; ++l)
            sum += s(i, j, l) * s(l, k, m) + s(j, k, l) * s(l, i, m) + s(k, i, l) * s(l, j, m);
          if (sum != 0) return false;
        }
  return true;
}

// delta[x, y] = ad_x delta y - ad_y delta x on basis pairs, with delta e_k the
// antisymmetric matrix f(., ., k).
bool cocycle(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  auto ad = [&](std::size_t a, std::size_t col) {
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t i = 0; i < n; ++i) out[p][q] += b.c(a, i, p) * b.f(i, q, col) + b.c(a, i, q) * b.f(p, i, col);
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const auto x = ad(a, c), y = ad(c, a);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Rational lhs = 0;
          for (std::size_t k = 0; k < n; ++k) lhs += b.c(a, c, k) * b.f(p, q, k);
          if (lhs != x[p][q] - y[p][q]) return false;
        }
    }
  return true;
}

// ([b_i, b_j], b_k) + (b_j, [b_i, b_k]) = 0 for the split form with 1/2.
bool ad_invariant_oracle(const QuadraticLieAlgebra& d, std::size_t n) {
  auto g = [&](std::size_t a, std::size_t b) { return (a + n == b || b + n == a) ? Rational(1, 2) : Rational(0); };
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j)
      for (std::size_t k = 0; k < 2 * n; ++k) {
        Rational s = 0;
        for (std::size_t l = 0; l < 2 * n; ++l) s += d.constant(i, j, l) * g(l, k) + d.constant(i, k, l) * g(j, l);
        if (s != 0) return false;
      }
  return true;
}

// ---- instances ---------------------------------------------------------------

LieBialgebra affine(bool stated_incompatible) {
  LieBialgebra b(2);
  b.set_c(0, 1, 1, 1);
  if (stated_incompatible) b.set_f(0, 1, 0, 1);
  else b.set_f(0, 1, 1, 1);
  return b;
}

LieBialgebra sl2_standard() {
  LieBialgebra b(3);
  b.set_c(0, 1, 1, 2);
  b.set_c(0, 2, 2, -2);
  b.set_c(1, 2, 0, 1);
  b.set_f(0, 1, 1, -1);
  b.set_f(0, 2, 2, -1);
  return b;
}

LieBialgebra sl2_broken() {
  LieBialgebra b(3);
  b.set_c(0, 1, 1, 2);
  b.set_c(0, 2, 2, -2);
  b.set_c(1, 2, 0, 1);
  b.set_f(1, 2, 0, 1);
  return b;
}

LieBialgebra heisenberg() {
  LieBialgebra b(3);
  b.set_c(0, 1, 2, 1);
  return b;
}

BundleSurjection projection(std::size_t n, std::size_t m) {
  auto p = chart_of(n), q = chart_of(m, "y");
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < m; ++i) comps.push_back(Poly::variable(i));
  return BundleSurjection::tangent_map(MultiVector(p, 2), MultiVector(q, 2), Submersion{p, q, comps});
}

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name == name) return &c;
  return nullptr;
}

// ---- criteria ------------------------------------------------------------------

Outcome courant_axioms() {
  Outcome o;
  std::size_t tuples = 0;
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto c = chart_of(n);
    for (const char* text : {"0", "d/dx1^d/dx2", "x1 d/dx1^d/dx2"}) {
      const auto pi = bivector(c, text);
      const CourantDouble e = poisson_double(pi);
      const auto samples = default_samples(e);
      const Report r = verify_courant_axioms(e, samples);
      tuples += r.checks().size();
      o.require(r.passed(), "axioms fail for pi = " + std::string(text) + " in dim " + std::to_string(n));

      // Chart-form oracle: brackets of samples, then axiom (i) as
      // Jac(e1, e2, e3) = D T(e1, e2, e3) on the first few triples.
      const ChartCourant oracle{pi};
      auto chart_form = [&](const DoubleSection& s) {
        return std::pair<MultiVector, DiffForm>{MultiVector(c, s.x), DiffForm(c, s.xi)};
      };
      const auto& sec = samples.sections;
      const std::size_t m = std::min<std::size_t>(sec.size(), 2 * n + 2);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const auto got = e.bracket(sec[i], sec[j]);
          const auto [v, w] = oracle.bracket(chart_form(sec[i]), chart_form(sec[j]));
          o.require(got.x == v.tensor() && got.xi == w.tensor(), "bracket differs from the chart oracle");
        }
      for (std::size_t i = 0; i + 2 < m; ++i) {
        const auto a = chart_form(sec[i]), b = chart_form(sec[i + 1]), d = chart_form(sec[i + 2]);
        const auto ab = oracle.bracket(a, b), bd = oracle.bracket(b, d), da = oracle.bracket(d, a);
        const auto j1 = oracle.bracket(ab, d), j2 = oracle.bracket(bd, a), j3 = oracle.bracket(da, b);
        const Poly t = (oracle.pairing(ab, d) + oracle.pairing(bd, a) + oracle.pairing(da, b)) * Poly(Rational(1, 3));
        const MultiVector dt_x = oracle.dstar(function_mv(c, t));
        const DiffForm dt_xi = differential(c, t);
        o.require((j1.first + j2.first + j3.first - dt_x).is_zero() &&
                      (j1.second + j2.second + j3.second - dt_xi).is_zero(),
                  "chart oracle: Jacobiator is not D T");
      }
    }
  }
  const auto c = chart_of(2);
  const CourantDouble mutated = poisson_double(bivector(c, "x1 d/dx1^d/dx2"), BracketOptions{true});
  o.require(!verify_courant_axioms(mutated, default_samples(mutated)).passed(), "mutation not detected");
  o.detail = o.pass ? std::to_string(tuples) + " axiom tuples over 9 Poisson doubles; mutation caught" : o.detail;
  return o;
}

Outcome point_jacobi() {
  Outcome o;
  const std::vector<std::pair<std::string, LieBialgebra>> compatible{
      {"abelian n=2", LieBialgebra(2)},
      {"abelian n=3", LieBialgebra(3)},
      {"n=2 nonabelian", affine(false)},
      {"sl(2) standard", sl2_standard()}};
  for (const auto& [name, b] : compatible) {
    o.require(brute_force_jacobi(b.dim(), [&](auto i, auto j, auto k) { return b.c(i, j, k); }) &&
                  brute_force_jacobi(b.dim(), [&](auto i, auto j, auto k) { return b.f(i, j, k); }),
              name + ": factor fails the brute-force Jacobi oracle");
    o.require(cocycle(b), name + ": cocycle oracle rejects");
    const auto d = build_double(b);
    o.require(brute_force_jacobi(d.dim(), [&](auto i, auto j, auto k) { return d.constant(i, j, k); }),
              name + ": double fails Jacobi");
    o.require(ad_invariant_oracle(d, b.dim()), name + ": form not ad-invariant");
    o.require(jacobi_report(d).passed() && ad_invariance_report(d).passed() && verify_bialgebra(b).passed(),
              name + ": engine reports a failure");
  }

  // A genuinely incompatible pair must be caught with a nonzero residual.
  const Report broken = verify_bialgebra(sl2_broken());
  const Check* dj = nullptr;
  for (const auto& c : broken.checks())
    if (c.name == "DOUBLE_JACOBI" && c.status == Status::Fail) dj = &c;
  o.require(!cocycle(sl2_broken()) && dj && dj->status == Status::Fail && dj->residual != "0",
            "incompatible sl(2) pair not detected");

  // The stated n=2 counterexample: [e1,e2] = e2, [e^1,e^2] = e^1.
  const LieBialgebra stated = affine(true);
  const auto ds = build_double(stated);
  const bool double_ok = brute_force_jacobi(ds.dim(), [&](auto i, auto j, auto k) { return ds.constant(i, j, k); });
  if (cocycle(stated) && double_ok && verify_bialgebra(stated).passed()) {
    o.pass = false;
    o.documented = true;
    o.detail += (o.detail.empty() ? "" : "; ") +
                std::string("stated n=2 counterexample is compatible (cocycle oracle and brute-force Jacobi agree; "
                            "every cobracket on this 2-dim g is a cocycle), so it cannot fail; incompatibility "
                            "is caught on an sl(2) pair, residual ") +
                (dj ? dj->residual : "?");
  } else if (!double_ok) {
    o.detail += "; stated n=2 counterexample fails";
  }
  if (o.pass) o.detail = "4 compatible pairs; incompatible pair caught";
  return o;
}

Outcome reduction_roundtrip() {
  Outcome o;
  const auto p = chart_of(3), q = make_chart({"u", "v"});
  const CourantDouble e = poisson_double(MultiVector(p, 2));
  const QuotientPoisson qp{Submersion{p, q, {Poly::variable(0), Poly::variable(1)}}, bivector(q, "d/du^d/dv")};
  const DiracCandidate l = dirac_from_quotient(e, qp);
  o.require(is_dirac(e, l).passed(), "reconstructed L is not Dirac");
  const Poly ju = qp.j.pull(Poly::variable(0)), jv = qp.j.pull(Poly::variable(1));
  o.require(reduced_bracket(e, l, ju, jv) == Poly(1), "{J*u, J*v} != 1");
  o.require(reduced_bracket(e, l, jv, ju) == Poly(-1), "skew-symmetry fails");
  const Poly juv = ju * jv;
  const std::vector<Poly> triple{ju, jv, juv};
  // {u, uv} = u, {v, uv} = -v by Leibniz from {u, v} = 1.
  o.require(reduced_bracket(e, l, ju, juv) == ju && reduced_bracket(e, l, jv, juv) == -jv,
            "bracket with the product differs from the Leibniz value");
  Poly jac;
  for (int k = 0; k < 3; ++k) {
    const Poly& f = triple[k];
    const Poly& g = triple[(k + 1) % 3];
    const Poly& h = triple[(k + 2) % 3];
    jac += reduced_bracket(e, l, reduced_bracket(e, l, f, g), h);
  }
  o.require(jac.is_zero(), "Jacobi of the reduced bracket fails");
  o.require(astar_component_identity(e, l, ju, jv).is_zero(), "A*-component identity has a residual");
  if (o.pass) o.detail = "L Dirac, {J*u, J*v} = 1, skew, Jacobi, A*-identity zero";
  return o;
}

Outcome remarks() {
  Outcome o;
  const auto c = make_chart({"x", "y", "z"});
  const CourantDouble e = poisson_double(bivector(c, "d/dx^d/dy"));
  const DiracCandidate null = null_dirac(e, {parse_multivector("d/dz", c).tensor()});
  o.require(is_dirac(e, null).passed(), "null Dirac structure fails");

  const auto pi = bivector(c, "d/dx^d/dy");
  const auto pi1 = bivector(c, "x d/dy^d/dz");
  const std::vector<Poly> id{Poly::variable(0), Poly::variable(1), Poly::variable(2)};
  const DiracCandidate rebuilt = dirac_from_quotient(e, QuotientPoisson{Submersion{c, c, id}, pi1});
  const DiracCandidate graph = graph_of_bivector(e, (pi1 - pi).tensor());
  o.require(same_subbundle(e, rebuilt, graph) == Membership::Yes, "identity quotient differs from graph of pi1 - pi");
  o.require(is_dirac(e, rebuilt).passed(), "identity reconstruction is not Dirac");
  if (o.pass) o.detail = "null structure Dirac; identity quotient = graph of (pi1 - pi)#";
  return o;
}

Outcome bivector_graphs() {
  Outcome o;
  const auto c2 = chart_of(2), c4 = chart_of(4);
  const auto good = bivector(c2, "x1 d/dx1^d/dx2");
  const auto bad = bivector(c4, "d/dx1^d/dx2 + x1 d/dx3^d/dx4");
  const CourantDouble e2 = poisson_double(MultiVector(c2, 2)), e4 = poisson_double(MultiVector(c4, 2));
  const bool good_dirac = is_dirac(e2, graph_of_bivector(e2, good.tensor())).passed();
  const bool bad_dirac = is_dirac(e4, graph_of_bivector(e4, bad.tensor())).passed();
  o.require(good_dirac && poisson_by_components(good), "positive instance");
  o.require(!bad_dirac && !poisson_by_components(bad), "negative instance");
  const Poly j234 = schouten_component(bad, 1, 2, 3);
  o.require(j234 == Poly(-1), "J^234 = " + to_string(j234));
  // The engine's Schouten bracket against the component formula: [pi, pi] = 2 J.
  const MultiVector s = schouten(bad, bad);
  o.require(s.tensor()[0b1110] == Poly(2) * j234, "engine Schouten component differs");
  if (o.pass) o.detail = "x1 d1^d2 Dirac; d1^d2 + x1 d3^d4 not, J^234 = -1";
  return o;
}

Outcome pullback_theorem() {
  Outcome o;
  const auto s = projection(3, 2);
  const auto& tgt = s.target();
  auto equivalence = [&](const BundleSurjection& bs, const DiracCandidate& l, const std::string& name, bool dirac) {
    const Report r = verify_pullback_theorem(bs, l);
    const Check* t = find_check(r, "TARGET_DIRAC");
    const Check* src = find_check(r, "SOURCE_DIRAC");
    const Check* eq = find_check(r, "EQUIVALENCE");
    o.require(t && src && eq && eq->status == Status::Pass, name + ": equivalence fails");
    o.require(t && (t->status == Status::Pass) == dirac, name + ": unexpected target verdict");
    bool intertwined = true, seen = false;
    for (const auto& c : r.checks())
      if (c.name == "INTERTWINE") {
        seen = true;
        intertwined &= c.status == Status::Pass;
      }
    if (dirac) o.require(seen && intertwined, name + ": intertwining residual");
  };
  const auto theta = parse_form("(y1^2 + y2) dy1^dy2", tgt.chart()).tensor();
  const auto gtheta = graph_of_form(tgt, theta);
  equivalence(s, gtheta, "graph of theta", true);
  equivalence(s, null_dirac(tgt, {parse_multivector("d/dy2", tgt.chart()).tensor()}), "null", true);
  const auto s5 = projection(5, 4);
  const auto& t4 = s5.target();
  equivalence(s5, graph_of_bivector(t4, bivector(t4.chart(), "d/dy1^d/dy2 + y1 d/dy3^d/dy4").tensor()),
              "non-Poisson graph", false);

  const auto& src = s.source();
  const auto direct = graph_of_form(src, parse_form("(x1^2 + x2) dx1^dx2", src.chart()).tensor());
  o.require(same_subbundle(src, pullback_isotropic(s, gtheta), direct) == Membership::Yes,
            "pulled-back graph differs from graph of J*theta");
  if (o.pass) o.detail = "3 instances agree; intertwining residuals zero; L-bar = graph of J*theta";
  return o;
}

Outcome hamiltonian() {
  Outcome o;
  struct Instance {
    std::string name;
    Bialgebroid b;
    AltTensor i;
    bool expected;
  };
  std::vector<Instance> cases;
  auto zero = [](const ChartPtr& c) { return Bialgebroid::from_poisson(MultiVector(c, 2)); };
  const auto c2 = chart_of(2), c3 = chart_of(3), c4 = chart_of(4), q2 = chart_of(2, "y");
  const auto good = bivector(c2, "x1 d/dx1^d/dx2"), bad = bivector(c4, "d/dx1^d/dx2 + x1 d/dx3^d/dx4");
  cases.push_back({"x1 d1^d2", zero(c2).flipped(), good.tensor(), poisson_by_components(good)});
  cases.push_back({"d1^d2 + x1 d3^d4", zero(c4).flipped(), bad.tensor(), poisson_by_components(bad)});
  const auto theta = parse_form("(y1^2 + y2) dy1^dy2", q2);
  cases.push_back({"theta", zero(q2), theta.tensor(), de_rham(theta).is_zero()});
  const auto closed = parse_form("x1 dx1^dx2 + dx2^dx3", c3), open = parse_form("x1 dx2^dx3 + x3 dx1^dx2", c3);
  cases.push_back({"closed 2-form", zero(c3), closed.tensor(), de_rham(closed).is_zero()});
  cases.push_back({"non-closed 2-form", zero(c3), open.tensor(), de_rham(open).is_zero()});
  o.require(cases[3].expected && !cases[4].expected, "closed/non-closed pair mislabelled");
  for (const auto& k : cases) {
    const Report r = hamiltonian_check(k.b, k.i);
    const Check* h = find_check(r, "HAMILTONIAN");
    const Check* agree = find_check(r, "AGREE");
    o.require(agree && agree->status == Status::Pass, k.name + ": HAMILTONIAN and GRAPH_DIRAC disagree");
    o.require(h && (h->status == Status::Pass) == k.expected, k.name + ": verdict differs from the oracle");
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " instances agree with graph tests and oracles";
  return o;
}

Outcome dirac_subalgebras() {
  Outcome o;
  const std::vector<Rational> grid{-1, 0, 1};
  std::size_t found = 0;
  for (const auto& b : {LieBialgebra(2), LieBialgebra(3), affine(false), sl2_standard(), heisenberg()}) {
    const auto d = build_double(b);
    o.require(is_dirac_subalgebra(d, g_factor(b.dim())).passed(), "g + 0 fails");
    o.require(is_dirac_subalgebra(d, gstar_factor(b.dim())).passed(), "0 + g* fails");
    const auto par = search_dirac_graphs(d, b.dim(), grid, Execution::Parallel);
    const auto ser = search_dirac_graphs(d, b.dim(), grid, Execution::Serial);
    o.require(par.r == ser.r, "serial and parallel searches differ");
    for (const auto& l : par.subalgebras) {
      ++found;
      o.require(is_dirac_subalgebra(d, l).passed(), "search result does not re-verify");
      const Regularity reg = regularity_report(d, b.dim(), l);
      o.require(ad_invariance(d, l, ad_generators(d, reg.h)).passed(), "L not invariant under ad h");
    }
  }
  const auto d = build_double(sl2_standard());
  const Regularity reg = regularity_report(d, 3, g_factor(3));
  o.require(reg.dim_h == 3 && ad_invariance(d, g_factor(3), ad_generators(d, reg.h)).passed(), "h = g case");
  if (o.pass) o.detail = std::to_string(found) + " graph subalgebras found and re-verified";
  return o;
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(COURANT_KIT_EXE) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome determinism() {
  Outcome o;
  const std::string data = DATA_DIR;
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"verify-axioms", {}}, {"check-dirac", {"graphPi1"}}, {"bialgebra-search", {"-1,0,1"}}};
  const std::vector<std::string> models{"poisson_x1.json", "zero_q4.json", "bialgebra.json"};
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const auto model = cli::load_model(data + "/" + models[i]);
    const auto a = cli::format_report("x", cli::run(commands[i].first, commands[i].second, model, {}));
    const auto b = cli::format_report("x", cli::run(commands[i].first, commands[i].second, model, {}));
    o.require(a == b, commands[i].first + ": reports differ");
  }
  const std::vector<std::pair<std::string, int>> exits{
      {"verify-axioms --model " + data + "/poisson_x1.json", 0},
      {"check-dirac graphPi1 --model " + data + "/zero_q4.json", 1},
      {"check-dirac capped --model " + data + "/capped.json --degree-cap 0", 2},
      {"no-such-command --model " + data + "/poisson_x1.json", 3},
      {"verify-axioms --model " + data + "/non_poisson.json", 3}};
  for (const auto& [args, code] : exits) {
    const int got = run_tool(args);
    o.require(got == code, "exit " + std::to_string(got) + " for '" + args + "'");
  }
  if (o.pass) o.detail = "identical reports; exit codes 0/1/2/3 as specified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Courant axiom suite", courant_axioms},
      {"point-base Jacobi", point_jacobi},
      {"reduction roundtrip", reduction_roundtrip},
      {"null structures and identity quotient", remarks},
      {"bivector-graph criterion", bivector_graphs},
      {"pullback theorem", pullback_theorem},
      {"hamiltonian operators", hamiltonian},
      {"Dirac subalgebra suite", dirac_subalgebras},
      {"determinism and interfaces", determinism},
  };
  int undocumented = 0, passed = 0;
  std::vector<std::size_t> documented;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60) o.require(false, "over 60 s");
    char t[32];
    std::snprintf(t, sizeof t, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << " ("
              << t << ")\n";
    if (o.pass) ++passed;
    else if (o.documented) documented.push_back(i + 1);
    else ++undocumented;
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass";
  if (!documented.empty()) {
    std::cout << "; documented unattainable:";
    for (auto k : documented) std::cout << " " << k;
  }
  std::cout << "\n";
  return undocumented == 0 ? 0 : 1;
}
