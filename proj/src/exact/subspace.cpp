#include "courant/exact/subspace.hpp"

#include "courant/errors.hpp"

namespace courant {

namespace {

void require_same_ambient(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": ambient dimensions " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
  }
}

RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom) {
  RatMatrix m = top;
  for (std::size_t i = 0; i < bottom.rows(); ++i) m.append_row(bottom.row(i));
  return m;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const RatMatrix& spanning) {
  Subspace s(spanning.cols());
  Echelon e = rref(spanning);
  s.basis_ = std::move(e.form);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
  return span(RatMatrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::whole(std::size_t ambient_dim) { return span(RatMatrix::identity(ambient_dim)); }

bool Subspace::contains(std::span<const Rational> v) const {
  require_same_ambient(ambient_dim_, v.size(), "contains");
  // Reduce v against the echelon basis; v is in the span iff nothing is left.
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) w[j] -= f * basis_(i, j);
  }
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(ambient_dim_, other.ambient_dim_, "contains");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u.ambient_dim(), v.ambient_dim(), "sum");
  return Subspace::span(stack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u.ambient_dim(), v.ambient_dim(), "intersect");
  // u ∩ v = ann(ann(u) + ann(v)) for the standard dot product.
  const RatMatrix ann_u = nullspace(u.basis());
  const RatMatrix ann_v = nullspace(v.basis());
  return Subspace::span(nullspace(stack(ann_u, ann_v)));
}

BilinearForm::BilinearForm(RatMatrix gram, Symmetry symmetry) : gram_(std::move(gram)), symmetry_(symmetry) {
  if (gram_.rows() != gram_.cols()) throw DimensionMismatch("bilinear form gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j) {
      const bool ok = symmetry_ == Symmetry::symmetric ? gram_(i, j) == gram_(j, i) : gram_(i, j) == -gram_(j, i);
      if (!ok) throw std::invalid_argument("gram matrix does not have the declared symmetry");
    }
}

BilinearForm BilinearForm::hyperbolic(std::size_t n, const Rational& scale) {
  RatMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = scale;
    g(n + i, i) = scale;
  }
  return BilinearForm(std::move(g), Symmetry::symmetric);
}

bool BilinearForm::nondegenerate() const { return rank(gram_) == gram_.rows(); }

Rational BilinearForm::operator()(std::span<const Rational> u, std::span<const Rational> v) const {
  require_same_ambient(ambient_dim(), u.size(), "bilinear form");
  require_same_ambient(ambient_dim(), v.size(), "bilinear form");
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) acc += u[i] * gram_(i, j) * v[j];
  }
  return acc;
}

Subspace orthogonal_complement(const Subspace& u, const BilinearForm& b) {
  require_same_ambient(u.ambient_dim(), b.ambient_dim(), "orthogonal_complement");
  // b(w, u_i) = w^T G u_i, so the constraints are the rows (G u_i)^T.
  const RatMatrix constraints = (b.gram() * u.basis().transpose()).transpose();
  if (constraints.rows() == 0) return Subspace::whole(u.ambient_dim());
  return Subspace::span(nullspace(constraints));
}

bool is_maximal_isotropic(const Subspace& u, const BilinearForm& b) {
  require_same_ambient(u.ambient_dim(), b.ambient_dim(), "is_maximal_isotropic");
  if (b.ambient_dim() % 2 != 0) throw DimensionMismatch("maximal isotropy needs an even ambient dimension");
  if (b.symmetry() != Symmetry::symmetric) throw std::invalid_argument("maximal isotropy needs a symmetric form");
  if (2 * u.dim() != u.ambient_dim()) return false;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = i; j < u.dim(); ++j)
      if (sgn(b(u.basis().row(i), u.basis().row(j))) != 0) return false;
  return true;
}

}  // namespace courant
