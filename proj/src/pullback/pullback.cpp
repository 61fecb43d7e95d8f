#include "courant/pullback.hpp"

#include "courant/calc/text.hpp"
#include "courant/errors.hpp"

namespace courant {

namespace {

std::vector<PolyVector> transpose(const std::vector<PolyVector>& m, std::size_t cols) {
  std::vector<PolyVector> t(cols, PolyVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) t[k][i] = m[i][k];
  return t;
}

// Right inverse and kernel frame of a matrix with a complete unit echelon.
struct Splitting {
  std::vector<PolyVector> right;  // cols x rows
  std::vector<PolyVector> kernel;
};

std::optional<Splitting> split(const std::vector<PolyVector>& rows, std::size_t cols) {
  const UnitEchelon ech = unit_echelon(rows, cols);
  if (!ech.complete() || ech.rows.size() != rows.size()) return std::nullopt;
  const std::size_t m = rows.size();
  Splitting s;
  s.right.assign(cols, PolyVector(m));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t b = 0; b < m; ++b) s.right[ech.pivots[k]][b] = ech.transform[k][b];
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    PolyVector v(cols);
    v[c] = Poly(1);
    for (std::size_t k = 0; k < m; ++k) v[ech.pivots[k]] = -ech.rows[k][c];
    s.kernel.push_back(std::move(v));
  }
  return s;
}

PolyVector compose_all(const PolyVector& v, const Submersion& j) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(j.pull(p));
  return out;
}

std::vector<PolyVector> jacobian(const Submersion& j) {
  const std::size_t n = j.source->dim();
  std::vector<PolyVector> jac(j.components.size(), PolyVector(n));
  for (std::size_t c = 0; c < j.components.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) jac[c][i] = j.components[c].derivative(i);
  return jac;
}

// dJ applied to a vector field on P.
PolyVector push_vector(const Submersion& j, const MultiVector& v) {
  PolyVector out(j.components.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = apply(v, j.components[c]);
  return out;
}

PolyVector components(const MultiVector& v) {
  PolyVector out(v.chart()->dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = v[IndexMask(1) << i];
  return out;
}

}  // namespace

BundleSurjection::BundleSurjection(CourantDouble source, CourantDouble target, Submersion j,
                                   std::vector<PolyVector> phi)
    : source_(std::move(source)), target_(std::move(target)), j_(std::move(j)), phi_(std::move(phi)) {
  require_same_chart(*source_.chart(), *j_.source, "surjection source");
  require_same_chart(*target_.chart(), *j_.target, "surjection target");
  if (j_.components.size() != j_.target->dim()) throw DimensionMismatch("base map needs one component per target coordinate");
  const std::size_t a = source_.rank(), b = target_.rank();
  if (phi_.size() != a) throw DimensionMismatch("Phi needs one row per frame element of A");
  for (const auto& row : phi_)
    if (row.size() != b) throw DimensionMismatch("Phi rows need one entry per frame element of B");
  const auto phit = transpose(phi_, b);
  std::size_t best = 0;
  for (const auto& p : sample_points(source_.chart()->dim(), 3)) best = std::max(best, rank(evaluate_rows(phit, a, p)));
  if (best != b) throw ValidationError("Phi is not onto: generic rank " + std::to_string(best) + " below rank(B) = " + std::to_string(b));
  auto s = split(phit, a);
  if (!s) throw ValidationError("Phi has no unit echelon splitting");
  right_ = std::move(s->right);
  for (auto& k : s->kernel) kernel_.push_back(AltTensor::from_vector(k));
}

BundleSurjection BundleSurjection::tangent_map(const MultiVector& source_pi, const MultiVector& target_pi, Submersion j) {
  CourantDouble src(Bialgebroid::from_poisson(source_pi));
  CourantDouble tgt(Bialgebroid::from_poisson(target_pi));
  return BundleSurjection(std::move(src), std::move(tgt), j, transpose(jacobian(j), j.source->dim()));
}

PolyVector BundleSurjection::push(const AltTensor& x) const {
  const PolyVector v = x.as_vector();
  PolyVector out(target_.rank());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += v[i] * phi_[i][k];
  return out;
}

AltTensor BundleSurjection::pull_dual(const AltTensor& eta) const {
  const PolyVector e = compose_all(eta.as_vector(), j_);
  PolyVector out(source_.rank());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k < e.size(); ++k) out[i] += phi_[i][k] * e[k];
  return AltTensor::from_vector(out);
}

AltTensor BundleSurjection::lift(const AltTensor& y) const {
  const PolyVector v = compose_all(y.as_vector(), j_);
  PolyVector out(source_.rank());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += right_[i][k] * v[k];
  return AltTensor::from_vector(out);
}

std::optional<PolyVector> BundleSurjection::unpull_dual(const AltTensor& xi) const {
  const PolyVector v = xi.as_vector();
  PolyVector eta(target_.rank());
  for (std::size_t k = 0; k < eta.size(); ++k)
    for (std::size_t i = 0; i < v.size(); ++i) eta[k] += right_[i][k] * v[i];
  for (std::size_t i = 0; i < v.size(); ++i) {
    Poly back;
    for (std::size_t k = 0; k < eta.size(); ++k) back += phi_[i][k] * eta[k];
    if (!(back == v[i])) return std::nullopt;
  }
  return eta;
}

DoubleSection BundleSurjection::compose(const DoubleSection& e) const {
  return {AltTensor::from_vector(compose_all(e.x.as_vector(), j_)),
          AltTensor::from_vector(compose_all(e.xi.as_vector(), j_))};
}

std::optional<Poly> BundleSurjection::descend(const Poly& f) const {
  for (const auto& c : j_.components)
    if (c.degree() > 1) throw Unsupported("descending functions needs an affine base map");
  const auto s = split(jacobian(j_), j_.source->dim());
  if (!s) throw Unsupported("base map has no unit echelon splitting");
  const std::size_t n = j_.source->dim(), m = j_.target->dim();
  const std::vector<Rational> origin(n, Rational(0));
  std::vector<Poly> section(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) {
      const Poly shifted = Poly::variable(b) - Poly(j_.components[b].evaluate(origin));
      section[i] += s->right[i][b] * shifted;
    }
  Poly g = f.compose(section);
  if (!(j_.pull(g) == f)) return std::nullopt;
  return g;
}

std::optional<DoubleSection> BundleSurjection::phi_bar(const DoubleSection& e) const {
  auto eta = unpull_dual(e.xi);
  if (!eta) return std::nullopt;
  return DoubleSection{AltTensor::from_vector(push(e.x)), AltTensor::from_vector(*eta)};
}

std::optional<DoubleSection> is_admissible_section(const BundleSurjection& s, const DoubleSection& e) {
  const auto img = s.phi_bar(e);
  if (!img) return std::nullopt;
  const PolyVector v = flatten(*img);
  PolyVector down;
  for (const auto& p : v) {
    auto g = s.descend(p);
    if (!g) return std::nullopt;
    down.push_back(std::move(*g));
  }
  return unflatten(down, s.target().rank());
}

Report is_morphism(const BundleSurjection& s) {
  Report r;
  const CourantDouble& tgt = s.target();
  const CourantDouble& src = s.source();
  const Algebroid& a = src.bialgebroid().a();
  const Algebroid& as = src.bialgebroid().astar();
  const Algebroid& b = tgt.bialgebroid().a();
  const Algebroid& bs = tgt.bialgebroid().astar();
  const Chart& pchart = *src.chart();
  const std::size_t rb = tgt.rank();
  const std::size_t m = tgt.chart()->dim();

  std::vector<AltTensor> samples;
  for (std::size_t k = 0; k < rb; ++k) samples.push_back(AltTensor::basis(rb, IndexMask(1) << k, Poly(1)));
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t k = 0; k < rb; ++k) samples.push_back(AltTensor::basis(rb, IndexMask(1) << k, Poly::variable(y)));

  auto vec_text = [&](const PolyVector& v) { return render_tensor(AltTensor::from_vector(v), pchart, b.frame_names()); };
  std::vector<std::string> qfields;
  for (const auto& name : tgt.chart()->names()) qfields.push_back("d/d" + name);
  auto field_text = [&](const PolyVector& v) { return render_tensor(AltTensor::from_vector(v), pchart, qfields); };
  auto add = [&](const std::string& name, const std::string& inputs, const PolyVector& res, const std::string& text) {
    r.add(name, inputs, is_zero(res) ? Status::Pass : Status::Fail, is_zero(res) ? "" : text);
  };
  auto diff = [](PolyVector x, const PolyVector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
  };

  for (const auto& y : samples) {
    const PolyVector lhs = push_vector(s.base_map(), a.anchor(s.lift(y)));
    const PolyVector rhs = compose_all(components(b.anchor(y)), s.base_map());
    const PolyVector res = diff(lhs, rhs);
    add("MORPHISM_ANCHOR_A", b.render(y), res, field_text(res));
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const PolyVector lhs = s.push(a.bracket(s.lift(samples[i]), s.lift(samples[j])));
      const PolyVector rhs = compose_all(b.bracket(samples[i], samples[j]).as_vector(), s.base_map());
      const PolyVector res = diff(lhs, rhs);
      add("MORPHISM_BRACKET_A", b.render(samples[i]) + ", " + b.render(samples[j]), res, vec_text(res));
    }
  for (const auto& eta : samples) {
    const PolyVector lhs = push_vector(s.base_map(), as.anchor(s.pull_dual(eta)));
    const PolyVector rhs = compose_all(components(bs.anchor(eta)), s.base_map());
    const PolyVector res = diff(lhs, rhs);
    add("MORPHISM_ANCHOR_ASTAR", b.render_dual(eta), res, field_text(res));
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const AltTensor lhs = as.bracket(s.pull_dual(samples[i]), s.pull_dual(samples[j]));
      const AltTensor rhs = s.pull_dual(bs.bracket(samples[i], samples[j]));
      const AltTensor res = lhs - rhs;
      r.add("MORPHISM_BRACKET_ASTAR", b.render_dual(samples[i]) + ", " + b.render_dual(samples[j]),
            res.is_zero() ? Status::Pass : Status::Fail, res.is_zero() ? "" : a.render_dual(res));
    }
  return r;
}

DiracCandidate pullback_isotropic(const BundleSurjection& s, const DiracCandidate& l) {
  const Report iso = is_isotropic(s.target(), l);
  if (!iso.passed()) throw ValidationError("pullback needs an isotropic subbundle");
  DiracCandidate out;
  for (const auto& e : l.frame) out.frame.push_back({s.lift(e.x), s.pull_dual(e.xi)});
  for (const auto& k : s.kernel()) out.frame.push_back(s.source().from_a(k));
  return out;
}

Report verify_pullback_theorem(const BundleSurjection& s, const DiracCandidate& l, const DiracOptions& opts) {
  Report r;
  const DiracCandidate lbar = pullback_isotropic(s, l);
  const Report rt = is_dirac(s.target(), l, opts);
  const Report rs = is_dirac(s.source(), lbar, opts);
  auto first_issue = [](const Report& rep) -> std::string {
    for (const auto& c : rep.checks())
      if (c.status != Status::Pass) return render(c);
    return "";
  };
  r.add("TARGET_DIRAC", "L", rt.status(), first_issue(rt));
  r.add("SOURCE_DIRAC", "L-bar", rs.status(), first_issue(rs));
  const bool decided = rt.status() != Status::Inconclusive && rs.status() != Status::Inconclusive;
  const bool same = rt.status() == rs.status();
  r.add("EQUIVALENCE", "L, L-bar", decided ? (same ? Status::Pass : Status::Fail) : Status::Inconclusive,
        decided && !same ? "verdicts differ" : (decided ? "" : "undecided side"));
  if (!(rt.passed() && rs.passed())) return r;

  // Images of the L-bar frame: lifts map to L's frame, ker Phi to zero.
  std::vector<DoubleSection> images;
  for (const auto& e : l.frame) images.push_back(s.compose(e));
  for (std::size_t k = 0; k < s.kernel().size(); ++k) images.push_back(s.compose(s.target().zero()));
  auto label = [](std::size_t i) { return "L-bar[" + std::to_string(i + 1) + "]"; };
  for (std::size_t i = 0; i < lbar.frame.size(); ++i)
    for (std::size_t j = i + 1; j < lbar.frame.size(); ++j) {
      const auto lhs = s.phi_bar(s.source().bracket(lbar.frame[i], lbar.frame[j]));
      const std::string inputs = label(i) + ", " + label(j);
      if (!lhs) {
        r.add("INTERTWINE", inputs, Status::Fail, "bracket leaves A + (ker Phi)^perp");
        continue;
      }
      const std::size_t nl = l.frame.size();
      const DoubleSection rhs = i < nl && j < nl ? s.compose(s.target().bracket(l.frame[i], l.frame[j]))
                                                 : s.compose(s.target().zero());
      const DoubleSection res = *lhs - rhs;
      r.add("INTERTWINE", inputs, res.is_zero() ? Status::Pass : Status::Fail,
            res.is_zero() ? "" : render_tensor(res.x, *s.source().chart(), s.target().bialgebroid().a().frame_names()) +
                                     " + " +
                                     render_tensor(res.xi, *s.source().chart(), s.target().bialgebroid().a().dual_names()));
    }
  return r;
}

}  // namespace courant
