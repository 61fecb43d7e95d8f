#include "courant/cli/run.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "courant/bialgebra.hpp"
#include "courant/calc/text.hpp"
#include "courant/errors.hpp"
#include "courant/pullback.hpp"

namespace courant::cli {

namespace {

struct Context {
  const Model& model;
  const RunOptions& opts;
  const std::vector<std::string>& args;
  RunResult out;

  DiracOptions dirac_options() const {
    DiracOptions d;
    d.degree_cap = opts.degree_cap ? opts.degree_cap : model.degree_cap;
    return d;
  }
};

void arity(const Context& c, std::size_t n, const char* usage) {
  if (c.args.size() != n) throw std::invalid_argument(std::string("usage: courant-kit ") + usage);
}

CourantDouble source_double(const Model& m) { return CourantDouble(Bialgebroid::from_poisson(MultiVector(m.chart, m.poisson))); }

const DiracBlock& dirac_block(const Model& m, const std::string& name) {
  const auto it = m.dirac.find(name);
  if (it == m.dirac.end()) throw std::invalid_argument("no dirac block named '" + name + "'");
  return it->second;
}

DiracCandidate candidate(const CourantDouble& e, const DiracBlock& b) {
  DiracCandidate l;
  if (b.graph_bivector) l = graph_of_bivector(e, *b.graph_bivector);
  else if (b.graph_form) l = graph_of_form(e, *b.graph_form);
  else if (b.null) l = null_dirac(e, *b.null);
  else
    for (const auto& [x, xi] : b.frame) l.frame.push_back({x, xi});
  l.point = b.point;
  return l;
}

// Source-side candidates take the command-line point, then the model's.
DiracCandidate source_candidate(const Context& c, const CourantDouble& e, const std::string& name) {
  const DiracBlock& b = dirac_block(c.model, name);
  if (b.side != Side::Source) throw std::invalid_argument("dirac block '" + name + "' lives on the target chart");
  DiracCandidate l = candidate(e, b);
  if (c.opts.point) {
    if (c.opts.point->size() != e.chart()->dim()) throw std::invalid_argument("--point has the wrong dimension");
    l.point = c.opts.point;
  } else if (!l.point) {
    l.point = c.model.point;
  }
  return l;
}

void frame_lines(Context& c, const CourantDouble& e, const DiracCandidate& l, const std::string& label) {
  for (std::size_t i = 0; i < l.frame.size(); ++i)
    c.out.lines.push_back(label + "[" + std::to_string(i + 1) + "] = " + e.render(l.frame[i]));
}

Check verdict_check(const std::string& name, const std::string& inputs, Membership m, const std::string& why) {
  switch (m) {
    case Membership::Yes: return {name, inputs, Status::Pass, ""};
    case Membership::No: return {name, inputs, Status::Fail, why};
    default: return {name, inputs, Status::Inconclusive, "undecided within the degree cap"};
  }
}

void verify_axioms(Context& c) {
  arity(c, 0, "verify-axioms --model <path>");
  const CourantDouble e = source_double(c.model);
  c.out.report = verify_courant_axioms(e, default_samples(e));
}

void check_dirac(Context& c) {
  arity(c, 1, "check-dirac <name> --model <path>");
  const CourantDouble e = source_double(c.model);
  const DiracBlock& b = dirac_block(c.model, c.args[0]);
  const DiracCandidate l = source_candidate(c, e, c.args[0]);
  const DiracOptions d = c.dirac_options();
  c.out.report = is_dirac(e, l, d);
  // Graphs carry a closed-form criterion: d_* Lambda + 1/2 [Lambda, Lambda] = 0
  // for bivectors, d theta + 1/2 [theta, theta]_* = 0 for 2-forms.
  const auto& bi = e.bialgebroid();
  if (b.graph_bivector) {
    const AltTensor r = hamiltonian_residual(bi.flipped(), *b.graph_bivector);
    c.out.report.add("MAURER_CARTAN", bi.a().render(*b.graph_bivector), r.is_zero() ? Status::Pass : Status::Fail,
                     bi.a().render(r));
  } else if (b.graph_form) {
    const AltTensor r = hamiltonian_residual(bi, *b.graph_form);
    c.out.report.add("MAURER_CARTAN", bi.a().render_dual(*b.graph_form), r.is_zero() ? Status::Pass : Status::Fail,
                     bi.a().render_dual(r));
  }
  c.out.lines.push_back(dirac_verdict(c.out.report, effective_cap(e, l, d)));
}

void reduce(Context& c) {
  arity(c, 3, "reduce <name> <f> <g> --model <path>");
  const CourantDouble e = source_double(c.model);
  const DiracCandidate l = source_candidate(c, e, c.args[0]);
  const DiracOptions d = c.dirac_options();
  const Poly f = parse_poly(c.args[1], *e.chart());
  const Poly g = parse_poly(c.args[2], *e.chart());
  Report& r = c.out.report;
  r.append(is_dirac(e, l, d));
  const auto af = admissible(e, l, f, d);
  const auto ag = admissible(e, l, g, d);
  r.add(verdict_check("ADMISSIBLE", e.render(f), af.verdict, "no Y with Y + df in L"));
  r.add(verdict_check("ADMISSIBLE", e.render(g), ag.verdict, "no Y with Y + dg in L"));
  if (af.verdict != Membership::Yes || ag.verdict != Membership::Yes) return;
  const Poly fg = reduced_bracket(e, l, f, g, d);
  const Poly gf = reduced_bracket(e, l, g, f, d);
  r.add("SKEW", e.render(f) + ", " + e.render(g), fg + gf == Poly() ? Status::Pass : Status::Fail, e.render(fg + gf));
  const AltTensor id = astar_component_identity(e, l, f, g, d);
  r.add("ASTAR_IDENTITY", e.render(f) + ", " + e.render(g), id.is_zero() ? Status::Pass : Status::Fail,
        e.bialgebroid().a().render_dual(id));
  c.out.lines.push_back("{" + e.render(f) + ", " + e.render(g) + "} = " + e.render(fg));
}

void from_quotient(Context& c) {
  arity(c, 0, "from-quotient --model <path>");
  if (!c.model.quotient) throw std::invalid_argument("model has no quotient block");
  const auto& q = *c.model.quotient;
  const CourantDouble e = source_double(c.model);
  const QuotientPoisson qp{Submersion{e.chart(), q.target, q.map}, MultiVector(q.target, q.bracket)};
  DiracCandidate l = dirac_from_quotient(e, qp);
  if (c.opts.point) l.point = c.opts.point;
  else if (c.model.point) l.point = c.model.point;
  const DiracOptions d = c.dirac_options();
  Report& r = c.out.report;
  r.append(is_dirac(e, l, d));
  // The reduced bracket of pulled-back coordinates against the quotient table.
  const auto& names = q.target->names();
  for (std::size_t a = 0; a < q.map.size(); ++a)
    for (std::size_t b = a + 1; b < q.map.size(); ++b) {
      const std::string in = names[a] + ", " + names[b];
      const Poly expected = qp.j.pull(evaluate_bivector(qp.bracket, coordinate_form(q.target, a), coordinate_form(q.target, b)));
      try {
        const Poly got = reduced_bracket(e, l, q.map[a], q.map[b], d);
        r.add("QUOTIENT_BRACKET", in, got == expected ? Status::Pass : Status::Fail, e.render(got - expected));
        const AltTensor id = astar_component_identity(e, l, q.map[a], q.map[b], d);
        r.add("ASTAR_IDENTITY", in, id.is_zero() ? Status::Pass : Status::Fail, e.bialgebroid().a().render_dual(id));
      } catch (const ValidationError& err) {
        r.add("QUOTIENT_BRACKET", in, Status::Fail, err.what());
      }
    }
  frame_lines(c, e, l, "L");
}

BundleSurjection surjection(const Model& m) {
  if (!m.surjection) throw std::invalid_argument("model has no surjection block");
  const auto& s = *m.surjection;
  return BundleSurjection::tangent_map(MultiVector(m.chart, m.poisson), MultiVector(s.target, s.target_poisson), Submersion{m.chart, s.target, s.map});
}

void pullback(Context& c) {
  arity(c, 1, "pullback <name> --model <path>");
  const DiracBlock& b = dirac_block(c.model, c.args[0]);
  if (b.side != Side::Target) throw std::invalid_argument("dirac block '" + c.args[0] + "' must be on the target");
  const BundleSurjection s = surjection(c.model);
  const DiracCandidate l = candidate(s.target(), b);
  c.out.report = verify_pullback_theorem(s, l, c.dirac_options());
  frame_lines(c, s.source(), pullback_isotropic(s, l), "L-bar");
}

void check_hamiltonian(Context& c) {
  arity(c, 1, "check-hamiltonian <name> --model <path>");
  const auto it = c.model.hamiltonian.find(c.args[0]);
  if (it == c.model.hamiltonian.end()) throw std::invalid_argument("no hamiltonian block named '" + c.args[0] + "'");
  Bialgebroid b = Bialgebroid::from_poisson(MultiVector(c.model.chart, c.model.poisson));
  if (it->second.bivector) b = b.flipped();
  c.out.report = hamiltonian_check(b, it->second.i, c.dirac_options());
}

const LieBialgebra& bialgebra(const Model& m) {
  if (!m.bialgebra) throw std::invalid_argument("model has no bialgebra block");
  return *m.bialgebra;
}

void bialgebra_verify(Context& c) {
  arity(c, 0, "bialgebra-verify --model <path>");
  c.out.report = verify_bialgebra(bialgebra(c.model));
}

std::string render_subspace(const QuadraticLieAlgebra& d, const Subspace& l) {
  std::string out;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::vector<Rational> row(d.dim());
    for (std::size_t k = 0; k < d.dim(); ++k) row[k] = l.basis()(i, k);
    out += (i ? ", " : "") + d.render(row);
  }
  return "span{" + out + "}";
}

void bialgebra_check(Context& c) {
  arity(c, 1, "bialgebra-check <name> --model <path>");
  const auto it = c.model.subalgebras.find(c.args[0]);
  if (it == c.model.subalgebras.end()) throw std::invalid_argument("no subalgebra named '" + c.args[0] + "'");
  const auto& b = bialgebra(c.model);
  const auto d = build_double(b);
  const Subspace& l = it->second.l;
  Report& r = c.out.report;
  r.append(is_dirac_subalgebra(d, l));
  if (!r.passed()) return;
  const Regularity reg = regularity_report(d, b.dim(), l);
  r.append(reg.report);
  r.append(ad_invariance(d, l, ad_generators(d, reg.h)));
  c.out.lines.push_back("L = " + render_subspace(d, l));
  c.out.lines.push_back("h = " + render_subspace(d, reg.h) + " (dim " + std::to_string(reg.dim_h) + ")");
}

void bialgebra_search(Context& c) {
  arity(c, 1, "bialgebra-search <c1,c2,...> --model <path>");
  std::vector<Rational> grid;
  const std::string& text = c.args[0];
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto comma = std::min(text.find(',', pos), text.size());
    grid.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  const auto& b = bialgebra(c.model);
  const auto d = build_double(b);
  Report& r = c.out.report;
  r.append(verify_bialgebra(b));
  const auto found = search_dirac_graphs(d, b.dim(), grid);
  for (std::size_t i = 0; i < found.subalgebras.size(); ++i) {
    const Report again = is_dirac_subalgebra(d, found.subalgebras[i]);
    r.add("GRAPH_DIRAC", render_subspace(d, found.subalgebras[i]), again.status(), again.passed() ? "" : "re-check failed");
  }
  c.out.lines.push_back("searched " + std::to_string(found.searched) + ", found " +
                        std::to_string(found.subalgebras.size()));
}

using Handler = std::function<void(Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"verify-axioms", verify_axioms},
      {"check-dirac", check_dirac},
      {"reduce", reduce},
      {"from-quotient", from_quotient},
      {"pullback", pullback},
      {"check-hamiltonian", check_hamiltonian},
      {"bialgebra-verify", bialgebra_verify},
      {"bialgebra-check", bialgebra_check},
      {"bialgebra-search", bialgebra_search},
  };
  return table;
}

}  // namespace

RunResult run(const std::string& command, const std::vector<std::string>& args, const Model& model,
              const RunOptions& opts) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw std::invalid_argument("unknown command '" + command + "'");
  Context c{model, opts, args, {}};
  it->second(c);
  return std::move(c.out);
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return 1;
}

std::string format_report(const std::string& echo, const RunResult& r) {
  std::string out = std::string("courant-kit ") + kVersion + "\ncommand: " + echo + "\n---\n";
  out += r.report.render();
  for (const auto& l : r.lines) out += l + "\n";
  out += "STATUS: " + to_string(r.report.status()) + "\n";
  return out;
}

}  // namespace courant::cli
