#include "courant/algebroid.hpp"

#include <functional>
#include <sstream>

#include "courant/calc/text.hpp"
#include "courant/errors.hpp"

namespace courant {

namespace {

std::vector<std::string> prefixed_names(const Chart& chart, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& n : chart.names()) out.push_back(prefix + n);
  return out;
}

// Wedge of a list of degree-1 tensors, skipping index `skip`.
AltTensor wedge_all(const std::vector<AltTensor>& xs, std::size_t skip, std::size_t rank) {
  AltTensor acc = AltTensor::scalar(rank, Poly(1));
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (i != skip) acc = wedge(acc, xs[i]);
  return acc;
}

// Factor f e_{i1} ^ e_{i2} ^ ... into degree-1 sections, the coefficient on the first.
std::vector<AltTensor> factors(IndexMask m, const Poly& f, std::size_t rank) {
  std::vector<AltTensor> out;
  bool first = true;
  for (auto i : mask_indices(m)) {
    out.push_back(AltTensor::basis(rank, IndexMask(1) << i, first ? f : Poly(1)));
    first = false;
  }
  return out;
}

}  // namespace

Algebroid::Algebroid(ChartPtr chart, std::vector<std::string> frame_names, std::vector<std::string> dual_names,
                     std::vector<PolyVector> anchor, std::vector<std::vector<PolyVector>> brackets)
    : chart_(std::move(chart)),
      rank_(frame_names.size()),
      frame_names_(std::move(frame_names)),
      dual_names_(std::move(dual_names)),
      anchor_(std::move(anchor)) {
  if (dual_names_.size() != rank_) throw DimensionMismatch("dual frame names differ in number from frame names");
  if (anchor_.size() != rank_) throw DimensionMismatch("anchor needs one row per frame element");
  for (const auto& row : anchor_)
    if (row.size() != chart_->dim()) throw DimensionMismatch("anchor row length differs from chart dimension");
  c_.assign(rank_, std::vector<PolyVector>(rank_, PolyVector(rank_)));
  for (std::size_t i = 0; i < brackets.size() && i < rank_; ++i)
    for (std::size_t j = i + 1; j < brackets[i].size() && j < rank_; ++j) {
      const auto& v = brackets[i][j];
      if (v.empty()) continue;
      if (v.size() != rank_) throw DimensionMismatch("bracket components must have one entry per frame element");
      c_[i][j] = v;
      for (std::size_t k = 0; k < rank_; ++k) c_[j][i][k] = -v[k];
      if (!is_zero(v)) zero_bracket_ = false;
    }
}

Algebroid Algebroid::tangent(const ChartPtr& chart) {
  const std::size_t n = chart->dim();
  std::vector<PolyVector> anchor(n, PolyVector(n));
  for (std::size_t i = 0; i < n; ++i) anchor[i][i] = Poly(1);
  return Algebroid(chart, prefixed_names(*chart, "d/d"), prefixed_names(*chart, "d"), std::move(anchor), {});
}

Algebroid Algebroid::cotangent(const MultiVector& pi) {
  if (pi.degree() != 2 && !pi.is_zero()) throw DimensionMismatch("cotangent algebroid needs a bivector");
  const auto residual = courant::schouten(pi, pi);
  if (!residual.is_zero()) throw ValidationError("bivector is not Poisson: [pi,pi] = " + to_string(residual));
  const auto& chart = pi.chart();
  const std::size_t n = chart->dim();
  auto p = [&](std::size_t i, std::size_t j) { return pi.tensor().on_sequence(std::vector<std::size_t>{i, j}); };
  std::vector<PolyVector> anchor(n, PolyVector(n));
  std::vector<std::vector<PolyVector>> brackets(n, std::vector<PolyVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      anchor[i][j] = p(i, j);
      if (j > i) {
        PolyVector c(n);
        const Poly pij = p(i, j);
        for (std::size_t k = 0; k < n; ++k) c[k] = pij.derivative(k);
        brackets[i][j] = std::move(c);
      }
    }
  return Algebroid(chart, prefixed_names(*chart, "d"), prefixed_names(*chart, "d/d"), std::move(anchor),
                   std::move(brackets));
}

Algebroid Algebroid::trivial(const ChartPtr& chart, std::vector<std::string> frame_names,
                             std::vector<std::string> dual_names) {
  const std::size_t r = frame_names.size();
  return Algebroid(chart, std::move(frame_names), std::move(dual_names),
                   std::vector<PolyVector>(r, PolyVector(chart->dim())), {});
}

PolyVector Algebroid::structure(std::size_t i, std::size_t j) const { return c_[i][j]; }

Section Algebroid::section(std::span<const Poly> coeffs) const {
  if (coeffs.size() != rank_) throw DimensionMismatch("section length differs from algebroid rank");
  return AltTensor::from_vector(coeffs);
}

Section Algebroid::frame(std::size_t i, const Poly& coeff) const {
  return AltTensor::basis(rank_, IndexMask(1) << i, coeff);
}

MultiVector Algebroid::anchor(const Section& x) const {
  PolyVector v(chart_->dim());
  for (const auto& [m, c] : x.components()) {
    const auto& row = anchor_[static_cast<std::size_t>(std::countr_zero(m))];
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!row[k].is_zero()) v[k] += c * row[k];
  }
  return vector_field(chart_, v);
}

Poly Algebroid::act_frame(std::size_t i, const Poly& f) const {
  Poly out;
  const auto& row = anchor_[i];
  for (std::size_t k = 0; k < row.size(); ++k)
    if (!row[k].is_zero()) out += row[k] * f.derivative(k);
  return out;
}

Poly Algebroid::act(const Section& x, const Poly& f) const {
  if (x.degree() != 1) throw DimensionMismatch("only sections act on functions");
  Poly out;
  if (f.is_constant()) return out;
  for (const auto& [m, c] : x.components()) out += c * act_frame(static_cast<std::size_t>(std::countr_zero(m)), f);
  return out;
}

Section Algebroid::bracket(const Section& x, const Section& y) const {
  if (x.degree() != 1 || y.degree() != 1 || x.dim() != rank_ || y.dim() != rank_)
    throw DimensionMismatch("bracket needs two sections of this algebroid");
  AltTensor out(rank_, 1);
  if (!zero_bracket_) {
    for (const auto& [mi, xi] : x.components())
      for (const auto& [mj, yj] : y.components()) {
        const auto& c = c_[static_cast<std::size_t>(std::countr_zero(mi))][static_cast<std::size_t>(std::countr_zero(mj))];
        const Poly xy = xi * yj;
        for (std::size_t k = 0; k < rank_; ++k)
          if (!c[k].is_zero()) out.add(IndexMask(1) << k, xy * c[k]);
      }
  }
  for (const auto& [m, yj] : y.components()) out.add(m, act(x, yj));
  for (const auto& [m, xi] : x.components()) out.add(m, -act(y, xi));
  return out;
}

AltTensor Algebroid::differential(const AltTensor& w) const {
  if (w.dim() != rank_) throw DimensionMismatch("cochain rank differs from algebroid rank");
  const std::size_t k = w.degree();
  AltTensor out(rank_, k + 1);
  if (k >= rank_) return out;
  const IndexMask full = rank_ == 32 ? ~IndexMask(0) : (IndexMask(1) << rank_) - 1;
  for (IndexMask J = 0; J <= full; ++J) {
    if (mask_degree(J) != k + 1) continue;
    const auto idx = mask_indices(J);
    Poly acc;
    for (std::size_t a = 0; a <= k; ++a) {
      const Poly& v = w[J & ~(IndexMask(1) << idx[a])];
      if (v.is_zero()) continue;
      const Poly t = act_frame(idx[a], v);
      if (a % 2) acc -= t; else acc += t;
    }
    if (!zero_bracket_) {
      for (std::size_t a = 0; a <= k; ++a)
        for (std::size_t b = a + 1; b <= k; ++b) {
          const auto& c = c_[idx[a]][idx[b]];
          // rest = J without a, b, in order
          std::vector<std::size_t> args(1);
          for (std::size_t t = 0; t <= k; ++t)
            if (t != a && t != b) args.push_back(idx[t]);
          for (std::size_t m = 0; m < rank_; ++m) {
            if (c[m].is_zero()) continue;
            args[0] = m;
            const Poly v = w.on_sequence(args);
            if (v.is_zero()) continue;
            const Poly t = c[m] * v;
            if ((a + b) % 2) acc -= t; else acc += t;
          }
        }
    }
    out.add(J, acc);
    if (J == full) break;
  }
  return out;
}

AltTensor Algebroid::schouten(const AltTensor& p, const AltTensor& q) const {
  if (p.dim() != rank_ || q.dim() != rank_) throw DimensionMismatch("multisection rank differs from algebroid rank");
  const std::size_t a = p.degree();
  const std::size_t b = q.degree();
  if (a + b == 0) return AltTensor(rank_, 0);
  AltTensor out(rank_, a + b - 1);
  if (a == 0 || b == 0) {
    // [Q, g] = sum_t (-1)^{q-t} (Y_t g) Y_1..^Y_t..Y_q  (t one-based); [f, Q] = (-1)^q [Q, f].
    const AltTensor& multi = a == 0 ? q : p;
    const AltTensor& fun = a == 0 ? p : q;
    const std::size_t deg = multi.degree();
    const Poly& g = fun[0];
    if (g.is_zero()) return out;
    for (const auto& [m, f] : multi.components()) {
      const auto ys = factors(m, f, rank_);
      for (std::size_t t = 0; t < deg; ++t) {
        AltTensor term = wedge_all(ys, t, rank_) * act(ys[t], g);
        if ((deg - 1 - t) % 2) out -= term; else out += term;
      }
    }
    if (a == 0 && deg % 2) out = -out;
    return out;
  }
  for (const auto& [mp, f] : p.components()) {
    const auto xs = factors(mp, f, rank_);
    for (const auto& [mq, g] : q.components()) {
      const auto ys = factors(mq, g, rank_);
      for (std::size_t s = 0; s < a; ++s) {
        const AltTensor xrest = wedge_all(xs, s, rank_);
        for (std::size_t t = 0; t < b; ++t) {
          AltTensor br = bracket(xs[s], ys[t]);
          if (br.is_zero()) continue;
          AltTensor term = wedge(wedge(br, xrest), wedge_all(ys, t, rank_));
          if ((s + t) % 2) out -= term; else out += term;
        }
      }
    }
  }
  return out;
}

std::string Algebroid::render(const AltTensor& t) const { return render_tensor(t, *chart_, frame_names_); }

std::string Algebroid::render_dual(const AltTensor& t) const { return render_tensor(t, *chart_, dual_names_); }

// ---- verification ----

namespace {

std::string monomial_text(const Monomial& m, const Chart& chart) { return to_string(Poly::monomial(m, Rational(1)), chart); }

struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t count = 0;
  bool failed = false;
  std::string witness;
  std::string witness_inputs;

  void record(bool ok, const std::function<std::string()>& residual, const std::function<std::string()>& inputs) {
    ++count;
    if (ok || failed) return;
    failed = true;
    witness = residual();
    witness_inputs = inputs();
  }
  Check check(const std::string& scope) const {
    Check c;
    c.name = name;
    c.status = failed ? Status::Fail : Status::Pass;
    c.residual = witness;
    c.inputs = failed ? witness_inputs : std::to_string(count) + " " + scope;
    return c;
  }
};

}  // namespace

Report verify_algebroid(const Algebroid& a, unsigned max_deg) {
  Report rep;
  const std::size_t r = a.rank();
  const auto& chart = a.chart();
  const auto monos = monomials_up_to(chart->dim(), max_deg);
  Tally jacobi("JACOBI"), anchor("ANCHOR"), leibniz("LEIBNIZ");
  auto label = [&](const Monomial& m, std::size_t i) {
    return (m.is_one() ? "" : monomial_text(m, *chart) + " ") + a.frame_names()[i];
  };

  for (const auto& m : monos) {
    const Poly mp = Poly::monomial(m, Rational(1));
    for (std::size_t i = 0; i < r; ++i) {
      const Section x = a.frame(i, mp);
      for (std::size_t j = 0; j < r; ++j) {
        if (m.is_one() && j <= i) continue;
        const Section y = a.frame(j);
        const auto xy = a.bracket(x, y);
        const auto lhs = a.anchor(xy);
        const auto rhs = schouten(a.anchor(x), a.anchor(y));
        anchor.record(lhs == rhs, [&] { return to_string(lhs - rhs); },
                      [&] { return label(m, i) + ", " + a.frame_names()[j]; });
        for (std::size_t k = j + 1; k < r; ++k) {
          if (m.is_one() && k <= i) continue;
          const Section z = a.frame(k);
          const auto jac = a.bracket(xy, z) + a.bracket(a.bracket(y, z), x) + a.bracket(a.bracket(z, x), y);
          jacobi.record(jac.is_zero(), [&] { return a.render(jac); },
                        [&] { return label(m, i) + ", " + a.frame_names()[j] + ", " + a.frame_names()[k]; });
        }
      }
    }
  }
  for (const auto& m : monos) {
    if (m.is_one()) continue;
    const Poly f = Poly::monomial(m, Rational(1));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const Section x = a.frame(i), y = a.frame(j);
        const auto lhs = a.bracket(x, a.frame(j, f));
        const auto rhs = a.bracket(x, y) * f + y * a.act(x, f);
        leibniz.record(lhs == rhs, [&] { return a.render(lhs - rhs); },
                       [&] { return a.frame_names()[i] + ", " + label(m, j); });
      }
  }
  const std::string scope = "cases, max_deg=" + std::to_string(max_deg);
  rep.add(jacobi.check(scope));
  rep.add(anchor.check(scope));
  rep.add(leibniz.check(scope));
  return rep;
}

Bialgebroid::Bialgebroid(Algebroid a, Algebroid astar) : a_(std::move(a)), astar_(std::move(astar)) {
  if (a_.rank() != astar_.rank()) throw DimensionMismatch("A and A* must have equal rank");
  require_same_chart(*a_.chart(), *astar_.chart(), "bialgebroid");
}

Bialgebroid Bialgebroid::from_poisson(const MultiVector& pi) {
  return Bialgebroid(Algebroid::tangent(pi.chart()), Algebroid::cotangent(pi));
}

Report verify_bialgebroid(const Bialgebroid& b, unsigned max_deg) {
  Report rep;
  const Algebroid& a = b.a();
  const std::size_t r = a.rank();
  const auto& chart = a.chart();
  const auto monos = monomials_up_to(chart->dim(), max_deg);
  Tally sections("DERIVATION"), functions("DERIVATION_FUNCTIONS");
  auto label = [&](const Monomial& m, std::size_t i) {
    return (m.is_one() ? "" : monomial_text(m, *chart) + " ") + a.frame_names()[i];
  };
  for (const auto& m : monos) {
    const Poly mp = Poly::monomial(m, Rational(1));
    for (std::size_t i = 0; i < r; ++i) {
      const Section x = a.frame(i, mp);
      const auto dx = b.d_star(x);
      for (std::size_t j = 0; j < r; ++j) {
        if (m.is_one() && j <= i) continue;
        const Section y = a.frame(j);
        const auto res = b.d_star(a.bracket(x, y)) - a.schouten(dx, y) - a.schouten(x, b.d_star(y));
        sections.record(res.is_zero(), [&] { return a.render(res); },
                        [&] { return label(m, i) + ", " + a.frame_names()[j]; });
      }
      for (const auto& fm : monos) {
        if (fm.is_one()) continue;
        const AltTensor f = a.scalar(Poly::monomial(fm, Rational(1)));
        const auto res = b.d_star(a.schouten(x, f)) - a.schouten(dx, f) - a.schouten(x, b.d_star(f));
        functions.record(res.is_zero(), [&] { return a.render(res); },
                         [&] { return label(m, i) + ", " + monomial_text(fm, *chart); });
      }
    }
  }
  const std::string scope = "cases, max_deg=" + std::to_string(max_deg);
  rep.add(sections.check(scope));
  if (chart->dim() > 0) rep.add(functions.check(scope));
  return rep;
}

}  // namespace courant
