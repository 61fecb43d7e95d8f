#include "courant/bialgebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "courant/errors.hpp"

namespace courant {

namespace {

std::vector<std::string> g_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> gstar_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e^" + std::to_string(i + 1));
  return out;
}

Algebroid point_algebra(std::size_t n, std::vector<std::string> names, std::vector<std::string> dual,
                        const std::function<const Rational&(std::size_t, std::size_t, std::size_t)>& k) {
  std::vector<std::vector<PolyVector>> br(n, std::vector<PolyVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      br[i][j].resize(n);
      for (std::size_t l = 0; l < n; ++l) br[i][j][l] = Poly(k(i, j, l));
    }
  return Algebroid(make_chart({}), std::move(names), std::move(dual), std::vector<PolyVector>(n), br);
}

bool all_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

LieBialgebra::LieBialgebra(std::size_t n) : n_(n), c_(n * n * n), f_(n * n * n) {}

std::size_t LieBialgebra::idx(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= n_ || j >= n_ || k >= n_) throw DimensionMismatch("structure constant index out of range");
  return (i * n_ + j) * n_ + k;
}

void LieBialgebra::set_c(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  if (i == j && v != 0) throw std::invalid_argument("structure constants must be antisymmetric");
  c_[idx(i, j, k)] = v;
  c_[idx(j, i, k)] = -v;
}

void LieBialgebra::set_f(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  if (i == j && v != 0) throw std::invalid_argument("structure constants must be antisymmetric");
  f_[idx(i, j, k)] = v;
  f_[idx(j, i, k)] = -v;
}

Algebroid LieBialgebra::g() const {
  return point_algebra(n_, g_names(n_), gstar_names(n_),
                       [this](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return c(i, j, k); });
}

Algebroid LieBialgebra::gstar() const {
  return point_algebra(n_, gstar_names(n_), g_names(n_),
                       [this](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return f(i, j, k); });
}

QuadraticLieAlgebra::QuadraticLieAlgebra(std::size_t dim, std::vector<Rational> constants, BilinearForm form,
                                         std::vector<std::string> names)
    : dim_(dim), s_(std::move(constants)), form_(std::move(form)), names_(std::move(names)) {
  if (s_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure constants need dim^3 entries");
  if (form_.ambient_dim() != dim_) throw DimensionMismatch("form dimension differs from algebra dimension");
  if (names_.size() != dim_) throw DimensionMismatch("one name per basis vector");
  if (form_.symmetry() != Symmetry::symmetric) throw std::invalid_argument("quadratic Lie algebras need a symmetric form");
}

std::vector<Rational> QuadraticLieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("vector length differs from algebra dimension");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      const Rational w = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& s = constant(i, j, k);
        if (s != 0) out[k] += w * s;
      }
    }
  }
  return out;
}

std::vector<Rational> QuadraticLieAlgebra::basis(std::size_t i) const {
  std::vector<Rational> v(dim_);
  v.at(i) = 1;
  return v;
}

RatMatrix QuadraticLieAlgebra::ad(std::span<const Rational> x) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    const auto col = bracket(x, basis(b));
    for (std::size_t a = 0; a < dim_; ++a) m(a, b) = col[a];
  }
  return m;
}

std::string QuadraticLieAlgebra::render(std::span<const Rational> v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    const Rational mag = abs(v[i]);
    if (mag != 1) os << to_string(mag) << ' ';
    os << names_[i];
    first = false;
  }
  return first ? "0" : os.str();
}

QuadraticLieAlgebra build_double(const LieBialgebra& b) {
  const std::size_t n = b.dim(), N = 2 * n;
  std::vector<Rational> s(N * N * N);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return s[(i * N + j) * N + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        at(i, j, k) = b.c(i, j, k);
        at(n + i, n + j, n + k) = b.f(i, j, k);
        // [e_i, e^j] = f^{jk}_i e_k - c^j_{ik} e^k
        at(i, n + j, k) = b.f(j, k, i);
        at(i, n + j, n + k) = -b.c(i, k, j);
        at(n + j, i, k) = -b.f(j, k, i);
        at(n + j, i, n + k) = b.c(i, k, j);
      }
  std::vector<std::string> names = g_names(n);
  for (auto& nm : gstar_names(n)) names.push_back(nm);
  return QuadraticLieAlgebra(N, std::move(s), BilinearForm::hyperbolic(n, Rational(1, 2)), std::move(names));
}

Report jacobi_report(const QuadraticLieAlgebra& d) {
  Report r;
  const std::size_t N = d.dim();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) {
        const auto a = d.basis(i), b = d.basis(j), c = d.basis(k);
        auto res = d.bracket(d.bracket(a, b), c);
        const auto t2 = d.bracket(d.bracket(b, c), a);
        const auto t3 = d.bracket(d.bracket(c, a), b);
        for (std::size_t l = 0; l < N; ++l) res[l] += t2[l] + t3[l];
        const bool ok = all_zero(res);
        r.add("JACOBI", d.names()[i] + ", " + d.names()[j] + ", " + d.names()[k], ok ? Status::Pass : Status::Fail,
              ok ? "" : d.render(res));
      }
  return r;
}

Report ad_invariance_report(const QuadraticLieAlgebra& d) {
  Report r;
  const std::size_t N = d.dim();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = j; k < N; ++k) {
        const auto x = d.basis(i), y = d.basis(j), z = d.basis(k);
        const Rational res = d.form()(d.bracket(x, y), z) + d.form()(y, d.bracket(x, z));
        r.add("AD_INVARIANT", d.names()[i] + ", " + d.names()[j] + ", " + d.names()[k],
              res == 0 ? Status::Pass : Status::Fail, res == 0 ? "" : to_string(res));
      }
  return r;
}

namespace {

Report prefixed(const Report& r, const std::string& prefix) {
  Report out;
  for (Check c : r.checks()) {
    c.name = prefix + c.name;
    out.add(std::move(c));
  }
  return out;
}

QuadraticLieAlgebra single(const LieBialgebra& b, bool dual) {
  const std::size_t n = b.dim();
  std::vector<Rational> s(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s[(i * n + j) * n + k] = dual ? b.f(i, j, k) : b.c(i, j, k);
  return QuadraticLieAlgebra(n, std::move(s), BilinearForm(RatMatrix(n, n), Symmetry::symmetric),
                             dual ? gstar_names(n) : g_names(n));
}

}  // namespace

Report verify_bialgebra(const LieBialgebra& b) {
  Report r;
  r.append(prefixed(jacobi_report(single(b, false)), "G_"));
  r.append(prefixed(jacobi_report(single(b, true)), "GSTAR_"));
  const auto d = build_double(b);
  r.append(prefixed(jacobi_report(d), "DOUBLE_"));
  r.append(ad_invariance_report(d));
  return r;
}

Report is_dirac_subalgebra(const QuadraticLieAlgebra& d, const Subspace& l) {
  if (l.ambient_dim() != d.dim()) throw DimensionMismatch("subspace lives in a different ambient space");
  Report r;
  const std::size_t half = d.dim() / 2;
  r.add("DIMENSION", "L", l.dim() == half ? Status::Pass : Status::Fail,
        l.dim() == half ? "" : "dim " + std::to_string(l.dim()) + " expected " + std::to_string(half));
  const auto& B = l.basis();
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = i; j < B.rows(); ++j) {
      const Rational v = d.form()(B.row(i), B.row(j));
      r.add("ISOTROPIC", d.render(B.row(i)) + ", " + d.render(B.row(j)), v == 0 ? Status::Pass : Status::Fail,
            v == 0 ? "" : to_string(v));
    }
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = i + 1; j < B.rows(); ++j) {
      const auto br = d.bracket(B.row(i), B.row(j));
      const bool ok = l.contains(br);
      r.add("CLOSED", d.render(B.row(i)) + ", " + d.render(B.row(j)), ok ? Status::Pass : Status::Fail,
            ok ? "" : d.render(br));
    }
  return r;
}

Subspace g_factor(std::size_t n) {
  RatMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return Subspace::span(m);
}

Subspace gstar_factor(std::size_t n) {
  RatMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) m(i, n + i) = 1;
  return Subspace::span(m);
}

Subspace graph_of_r(std::size_t n, const std::vector<std::vector<Rational>>& r) {
  RatMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    for (std::size_t j = 0; j < n; ++j) m(i, j) = r.at(i).at(j);
  }
  return Subspace::span(m);
}

Regularity regularity_report(const QuadraticLieAlgebra& d, std::size_t n, const Subspace& l) {
  Regularity out;
  out.h = intersect(l, g_factor(n));
  out.dim_h = out.h.dim();
  const auto& B = out.h.basis();
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = i + 1; j < B.rows(); ++j) {
      const auto br = d.bracket(B.row(i), B.row(j));
      const bool ok = out.h.contains(br);
      out.report.add("H_SUBALGEBRA", d.render(B.row(i)) + ", " + d.render(B.row(j)), ok ? Status::Pass : Status::Fail,
                     ok ? "" : d.render(br));
    }
  out.report.note("dim h = " + std::to_string(out.dim_h));
  out.report.note("closedness of the subgroup generated by h is not decided from structure constants");
  return out;
}

Report ad_invariance(const QuadraticLieAlgebra& d, const Subspace& l, const std::vector<RatMatrix>& generators) {
  Report r;
  const auto& B = l.basis();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const RatMatrix& m = generators[g];
    if (m.rows() != d.dim() || m.cols() != d.dim()) throw DimensionMismatch("generator must be a square matrix on the double");
    std::string witness;
    for (std::size_t i = 0; i < B.rows() && witness.empty(); ++i) {
      const auto img = m.apply(B.row(i));
      if (!l.contains(img)) witness = d.render(B.row(i)) + " -> " + d.render(img);
    }
    r.add("INVARIANT", "generator " + std::to_string(g + 1), witness.empty() ? Status::Pass : Status::Fail, witness);
  }
  return r;
}

std::vector<RatMatrix> ad_generators(const QuadraticLieAlgebra& d, const Subspace& h) {
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < h.basis().rows(); ++i) out.push_back(d.ad(h.basis().row(i)));
  return out;
}

GraphSearchResult search_dirac_graphs(const QuadraticLieAlgebra& d, std::size_t n, std::vector<Rational> coeffs,
                                      Execution mode) {
  if (d.dim() != 2 * n) throw DimensionMismatch("double dimension differs from 2n");
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
  if (coeffs.empty()) throw std::invalid_argument("coefficient grid is empty");
  const std::size_t slots = n * (n - 1) / 2;
  std::size_t total = 1;
  for (std::size_t s = 0; s < slots; ++s) {
    if (total > kMaxGridPoints / coeffs.size()) throw std::length_error("grid exceeds " + std::to_string(kMaxGridPoints) + " points");
    total *= coeffs.size();
  }

  auto matrix_of = [&](std::size_t index) {
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
    // Most significant digit is the first upper-triangle entry.
    std::vector<std::size_t> digits(slots);
    for (std::size_t s = slots; s-- > 0;) {
      digits[s] = index % coeffs.size();
      index /= coeffs.size();
    }
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++s) {
        r[i][j] = coeffs[digits[s]];
        r[j][i] = -coeffs[digits[s]];
      }
    return r;
  };

  std::vector<char> hit(total, 0);
  for_each_index(total, mode, [&](std::size_t idx) {
    hit[idx] = is_dirac_subalgebra(d, graph_of_r(n, matrix_of(idx))).passed() ? 1 : 0;
  });

  GraphSearchResult out;
  out.searched = total;
  for (std::size_t idx = 0; idx < total; ++idx)
    if (hit[idx]) {
      out.r.push_back(matrix_of(idx));
      out.subalgebras.push_back(graph_of_r(n, out.r.back()));
    }
  return out;
}

}  // namespace courant
