#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "courant/exact/matrix.hpp"

namespace courant {

/// Linear subspace of Q^n held by its reduced row echelon basis. The basis
/// is the canonical representative, so equality is structural.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  /// Span of the rows of `spanning` (any rank).
  static Subspace span(const RatMatrix& spanning);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& rhs) const {
    return ambient_dim_ == rhs.ambient_dim_ && basis_ == rhs.basis_;
  }

 private:
  std::size_t ambient_dim_;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

enum class Symmetry { symmetric, antisymmetric };

class BilinearForm {
 public:
  /// Throws DimensionMismatch for a non-square gram and std::invalid_argument
  /// when the gram does not have the declared symmetry.
  BilinearForm(RatMatrix gram, Symmetry symmetry);

  /// The split form on Q^n (+) Q^n pairing coordinate i with n + i, scaled by
  /// `scale` in both directions (1/2 gives the (.,.)+ pairing of a double).
  static BilinearForm hyperbolic(std::size_t n, const Rational& scale);

  std::size_t ambient_dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }
  Symmetry symmetry() const { return symmetry_; }
  bool nondegenerate() const;

  Rational operator()(std::span<const Rational> u, std::span<const Rational> v) const;

 private:
  RatMatrix gram_;
  Symmetry symmetry_;
};

/// {w : b(w, u) = 0 for all u in `u`}.
Subspace orthogonal_complement(const Subspace& u, const BilinearForm& b);

/// Requires a symmetric form on an even-dimensional space (throws
/// DimensionMismatch otherwise). True iff b vanishes on u and dim u = n/2.
bool is_maximal_isotropic(const Subspace& u, const BilinearForm& b);

}  // namespace courant
