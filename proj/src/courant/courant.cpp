#include "courant/courant.hpp"

#include "courant/calc/text.hpp"
#include "courant/errors.hpp"

namespace courant {

namespace {

void require_shape(const DoubleSection& e, std::size_t rank) {
  if (e.x.dim() != rank || e.xi.dim() != rank || e.x.degree() != 1 || e.xi.degree() != 1)
    throw DimensionMismatch("section does not belong to this double");
}

}  // namespace

CourantDouble::CourantDouble(Bialgebroid b, BracketOptions opts) : b_(std::move(b)), opts_(opts) {}

DoubleSection CourantDouble::zero() const { return {AltTensor(rank(), 1), AltTensor(rank(), 1)}; }

DoubleSection CourantDouble::from_a(const AltTensor& x) const {
  DoubleSection e = zero();
  e.x += x;
  return e;
}

DoubleSection CourantDouble::from_astar(const AltTensor& xi) const {
  DoubleSection e = zero();
  e.xi += xi;
  return e;
}

DoubleSection CourantDouble::basis(std::size_t i, const Poly& coeff) const {
  const std::size_t r = rank();
  if (i >= 2 * r) throw DimensionMismatch("basis index exceeds twice the rank");
  DoubleSection e = zero();
  if (i < r)
    e.x.add(IndexMask(1) << i, coeff);
  else
    e.xi.add(IndexMask(1) << (i - r), coeff);
  return e;
}

Poly CourantDouble::pairing(const DoubleSection& e1, const DoubleSection& e2, PairingSign s) const {
  require_shape(e1, rank());
  require_shape(e2, rank());
  const Poly a = pair(e1.xi, e2.x);
  const Poly b = pair(e2.xi, e1.x);
  const Poly sum = s == PairingSign::Plus ? a + b : a - b;
  return sum * Poly(Rational(1, 2));
}

MultiVector CourantDouble::rho(const DoubleSection& e) const {
  require_shape(e, rank());
  return b_.a().anchor(e.x) + b_.astar().anchor(e.xi);
}

Poly CourantDouble::act(const DoubleSection& e, const Poly& f) const { return b_.a().act(e.x, f) + b_.astar().act(e.xi, f); }

DoubleSection CourantDouble::d_script(const Poly& f) const {
  const AltTensor s = AltTensor::scalar(rank(), f);
  return {b_.d_star(s), b_.d(s)};
}

AltTensor CourantDouble::lie_on_dual(const AltTensor& x, const AltTensor& eta) const {
  return contract(x, b_.d(eta)) + b_.d(AltTensor::scalar(rank(), pair(x, eta)));
}

AltTensor CourantDouble::lie_on_primal(const AltTensor& xi, const AltTensor& x) const {
  return contract(xi, b_.d_star(x)) + b_.d_star(AltTensor::scalar(rank(), pair(xi, x)));
}

DoubleSection CourantDouble::bracket(const DoubleSection& e1, const DoubleSection& e2) const {
  require_shape(e1, rank());
  require_shape(e2, rank());
  const AltTensor m = AltTensor::scalar(rank(), pairing(e1, e2, PairingSign::Minus));
  DoubleSection out;
  out.x = b_.a().bracket(e1.x, e2.x) + lie_on_primal(e1.xi, e2.x) - lie_on_primal(e2.xi, e1.x) - b_.d_star(m);
  out.xi = b_.astar().bracket(e1.xi, e2.xi) + lie_on_dual(e1.x, e2.xi) - lie_on_dual(e2.x, e1.xi);
  if (opts_.flip_minus_term)
    out.xi -= b_.d(m);
  else
    out.xi += b_.d(m);
  return out;
}

Poly CourantDouble::anomaly_T(const DoubleSection& e1, const DoubleSection& e2, const DoubleSection& e3) const {
  const auto plus = PairingSign::Plus;
  const Poly sum = pairing(bracket(e1, e2), e3, plus) + pairing(bracket(e2, e3), e1, plus) +
                   pairing(bracket(e3, e1), e2, plus);
  return sum * Poly(Rational(1, 3));
}

Poly CourantDouble::base_poisson(const Poly& f, const Poly& g) const {
  const AltTensor df = b_.d(AltTensor::scalar(rank(), f));
  const AltTensor dsg = b_.d_star(AltTensor::scalar(rank(), g));
  return pair(df, dsg);
}

std::string CourantDouble::render(const DoubleSection& e) const {
  if (e.is_zero()) return "0";
  if (e.xi.is_zero()) return b_.a().render(e.x);
  if (e.x.is_zero()) return b_.a().render_dual(e.xi);
  return b_.a().render(e.x) + " + " + b_.a().render_dual(e.xi);
}

std::string CourantDouble::render(const Poly& f) const { return to_string(f, *chart()); }

CourantSamples default_samples(const CourantDouble& e) {
  CourantSamples s;
  const std::size_t n = e.chart()->dim();
  for (std::size_t i = 0; i < 2 * e.rank(); ++i) s.sections.push_back(e.basis(i));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < 2 * e.rank(); ++i) s.sections.push_back(e.basis(i, Poly::variable(j)));
  for (std::size_t j = 0; j < n; ++j) s.functions.push_back(Poly::variable(j));
  for (std::size_t j = 0; j < n; ++j) s.functions.push_back(Poly::variable(j) * Poly::variable(j));
  return s;
}

namespace {

enum class Axiom { I, II, III, IV, V };

struct Task {
  Axiom axiom;
  std::size_t a, b, c;
};

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::I: return "AXIOM(i)";
    case Axiom::II: return "AXIOM(ii)";
    case Axiom::III: return "AXIOM(iii)";
    case Axiom::IV: return "AXIOM(iv)";
    case Axiom::V: return "AXIOM(v)";
  }
  return "";
}

class AxiomRunner {
 public:
  AxiomRunner(const CourantDouble& e, const CourantSamples& s, Execution mode) : e_(e), s_(s), mode_(mode) {}

  Report run() {
    const std::size_t m = s_.sections.size();
    const std::size_t nf = s_.functions.size();
    cache_.assign(m * m, e_.zero());
    for_each_index(m * m, mode_, [&](std::size_t k) {
      const std::size_t i = k / m, j = k % m;
      cache_[k] = i == j ? e_.zero() : e_.bracket(s_.sections[i], s_.sections[j]);
    });

    std::vector<Task> tasks;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) tasks.push_back({Axiom::I, i, j, k});
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) tasks.push_back({Axiom::II, i, j, 0});
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t f = 0; f < nf; ++f) tasks.push_back({Axiom::III, i, j, f});
    for (std::size_t f = 0; f < nf; ++f)
      for (std::size_t g = f; g < nf; ++g) tasks.push_back({Axiom::IV, f, g, 0});
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j; k < m; ++k) tasks.push_back({Axiom::V, i, j, k});

    std::vector<Check> out(tasks.size());
    for_each_index(tasks.size(), mode_, [&](std::size_t t) { out[t] = check(tasks[t]); });

    Report r;
    r.note("samples: " + std::to_string(m) + " sections, " + std::to_string(nf) + " functions");
    if (nf == 0) r.note("no coordinate functions; properties (iii) and (iv) have no instances");
    for (auto& c : out) r.add(std::move(c));
    return r;
  }

 private:
  const DoubleSection& br(std::size_t i, std::size_t j) const { return cache_[i * s_.sections.size() + j]; }
  const DoubleSection& sec(std::size_t i) const { return s_.sections[i]; }
  const Poly& fn(std::size_t i) const { return s_.functions[i]; }

  std::string names(std::initializer_list<std::string> parts) const {
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += ", ";
      out += p;
    }
    return out;
  }

  Check section_check(Axiom a, std::string inputs, const DoubleSection& residual) const {
    if (residual.is_zero()) return {axiom_name(a), std::move(inputs), Status::Pass, ""};
    return {axiom_name(a), std::move(inputs), Status::Fail, e_.render(residual)};
  }

  Check poly_check(Axiom a, std::string inputs, const Poly& residual) const {
    if (residual.is_zero()) return {axiom_name(a), std::move(inputs), Status::Pass, ""};
    return {axiom_name(a), std::move(inputs), Status::Fail, e_.render(residual)};
  }

  Check check(const Task& t) const {
    const auto plus = PairingSign::Plus;
    switch (t.axiom) {
      case Axiom::I: {
        const auto &e1 = sec(t.a), &e2 = sec(t.b), &e3 = sec(t.c);
        DoubleSection jac = e_.bracket(br(t.a, t.b), e3) + e_.bracket(br(t.b, t.c), e1) + e_.bracket(br(t.c, t.a), e2);
        jac -= e_.d_script(e_.anomaly_T(e1, e2, e3));
        return section_check(t.axiom, names({e_.render(e1), e_.render(e2), e_.render(e3)}), jac);
      }
      case Axiom::II: {
        const auto &e1 = sec(t.a), &e2 = sec(t.b);
        const MultiVector res = e_.rho(br(t.a, t.b)) - schouten(e_.rho(e1), e_.rho(e2));
        std::string inputs = names({e_.render(e1), e_.render(e2)});
        if (res.is_zero()) return {axiom_name(t.axiom), std::move(inputs), Status::Pass, ""};
        return {axiom_name(t.axiom), std::move(inputs), Status::Fail, to_string(res)};
      }
      case Axiom::III: {
        const auto &e1 = sec(t.a), &e2 = sec(t.b);
        const Poly& f = fn(t.c);
        DoubleSection res = e_.bracket(e1, f * e2) - f * br(t.a, t.b) - e_.act(e1, f) * e2;
        res += e_.pairing(e1, e2, plus) * e_.d_script(f);
        return section_check(t.axiom, names({e_.render(e1), e_.render(e2), e_.render(f)}), res);
      }
      case Axiom::IV: {
        const Poly &f = fn(t.a), &g = fn(t.b);
        return poly_check(t.axiom, names({e_.render(f), e_.render(g)}),
                          e_.pairing(e_.d_script(f), e_.d_script(g), plus));
      }
      case Axiom::V: {
        const auto &e = sec(t.a), &h1 = sec(t.b), &h2 = sec(t.c);
        const DoubleSection u1 = br(t.a, t.b) + e_.d_script(e_.pairing(e, h1, plus));
        const DoubleSection u2 = br(t.a, t.c) + e_.d_script(e_.pairing(e, h2, plus));
        const Poly res = e_.act(e, e_.pairing(h1, h2, plus)) - e_.pairing(u1, h2, plus) - e_.pairing(h1, u2, plus);
        return poly_check(t.axiom, names({e_.render(e), e_.render(h1), e_.render(h2)}), res);
      }
    }
    return {};
  }

  const CourantDouble& e_;
  const CourantSamples& s_;
  Execution mode_;
  std::vector<DoubleSection> cache_;
};

}  // namespace

Report verify_courant_axioms(const CourantDouble& e, const CourantSamples& samples, Execution mode) {
  if (samples.sections.empty()) throw std::invalid_argument("axiom verification needs at least one section");
  for (const auto& s : samples.sections) require_shape(s, e.rank());
  return AxiomRunner(e, samples, mode).run();
}

}  // namespace courant
