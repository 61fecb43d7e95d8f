#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "courant/algebroid.hpp"
#include "courant/exact/subspace.hpp"
#include "courant/parallel.hpp"
#include "courant/report.hpp"

namespace courant {

/// Structure constants of g ([e_i, e_j] = c^k_ij e_k) and of g*
/// ([e^i, e^j] = f^ij_k e^k).
class LieBialgebra {
 public:
  explicit LieBialgebra(std::size_t n);

  std::size_t dim() const { return n_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }
  const Rational& f(std::size_t i, std::size_t j, std::size_t k) const { return f_[idx(i, j, k)]; }
  /// Sets the constant and its antisymmetric partner.
  void set_c(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
  void set_f(std::size_t i, std::size_t j, std::size_t k, const Rational& v);

  /// g and g* as algebroids over a point, names e1.. and e^1...
  Algebroid g() const;
  Algebroid gstar() const;
  Bialgebroid as_bialgebroid() const { return Bialgebroid(g(), gstar()); }

 private:
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t n_;
  std::vector<Rational> c_;
  std::vector<Rational> f_;
};

/// Lie algebra on Q^N given by structure constants, with a symmetric form.
class QuadraticLieAlgebra {
 public:
  QuadraticLieAlgebra(std::size_t dim, std::vector<Rational> constants, BilinearForm form,
                      std::vector<std::string> names);

  std::size_t dim() const { return dim_; }
  const BilinearForm& form() const { return form_; }
  const std::vector<std::string>& names() const { return names_; }
  /// Component k of [b_i, b_j].
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return s_[(i * dim_ + j) * dim_ + k];
  }

  std::vector<Rational> bracket(std::span<const Rational> u, std::span<const Rational> v) const;
  std::vector<Rational> basis(std::size_t i) const;
  /// Matrix of ad_x acting on column vectors.
  RatMatrix ad(std::span<const Rational> x) const;
  std::string render(std::span<const Rational> v) const;

 private:
  std::size_t dim_;
  std::vector<Rational> s_;
  BilinearForm form_;
  std::vector<std::string> names_;
};

/// The double g + g* with (.,.)_+ (coordinates: g first, then g*).
QuadraticLieAlgebra build_double(const LieBialgebra& b);

/// JACOBI on every basis triple i < j < k.
Report jacobi_report(const QuadraticLieAlgebra& d);
/// AD_INVARIANT: ([x, y], z) + (y, [x, z]) = 0 on every basis triple.
Report ad_invariance_report(const QuadraticLieAlgebra& d);
/// Jacobi of g, of g*, of the double (the compatibility test) and
/// ad-invariance of the form.
Report verify_bialgebra(const LieBialgebra& b);

/// DIMENSION, ISOTROPIC and CLOSED (on pairs of canonical basis vectors).
Report is_dirac_subalgebra(const QuadraticLieAlgebra& d, const Subspace& l);

struct Regularity {
  Subspace h;  // L cap (g + 0)
  std::size_t dim_h = 0;
  Report report;
};

/// h = L cap g with a closure check; closedness of the subgroup is not decided.
Regularity regularity_report(const QuadraticLieAlgebra& d, std::size_t n, const Subspace& l);

/// INVARIANT: every generator maps L into L.
Report ad_invariance(const QuadraticLieAlgebra& d, const Subspace& l, const std::vector<RatMatrix>& generators);
/// ad_x for x running over the canonical basis of h.
std::vector<RatMatrix> ad_generators(const QuadraticLieAlgebra& d, const Subspace& h);

Subspace g_factor(std::size_t n);
Subspace gstar_factor(std::size_t n);
/// span{e^i + sum_j r^ij e_j} for skew r.
Subspace graph_of_r(std::size_t n, const std::vector<std::vector<Rational>>& r);

/// Upper limit on grid points searched.
constexpr std::size_t kMaxGridPoints = 1u << 20;

struct GraphSearchResult {
  std::vector<std::vector<std::vector<Rational>>> r;  // lexicographic on the upper-triangle entries
  std::vector<Subspace> subalgebras;
  std::size_t searched = 0;
};

/// Graphs of skew r: g* -> g with upper-triangle entries from `coeffs`
/// (sorted, duplicates dropped) that are Dirac subalgebras. Throws
/// std::length_error beyond kMaxGridPoints.
GraphSearchResult search_dirac_graphs(const QuadraticLieAlgebra& d, std::size_t n, std::vector<Rational> coeffs,
                                      Execution mode = Execution::Parallel);

}  // namespace courant
