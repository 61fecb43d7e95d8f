#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "courant/calc/poly.hpp"

namespace courant {

/// Strictly increasing index tuple stored as a bit set.
using IndexMask = std::uint32_t;

inline std::size_t mask_degree(IndexMask m) { return static_cast<std::size_t>(std::popcount(m)); }
std::vector<std::size_t> mask_indices(IndexMask m);
IndexMask mask_of(std::span<const std::size_t> indices);  // indices must be distinct

/// Orders masks by degree, then lexicographically by their index tuples.
struct MaskOrder {
  bool operator()(IndexMask a, IndexMask b) const {
    if (a == b) return false;
    const auto da = std::popcount(a);
    const auto db = std::popcount(b);
    if (da != db) return da < db;
    const IndexMask d = a ^ b;
    const IndexMask low = d & (~d + 1);
    return (a & low) != 0;
  }
};

/// Homogeneous element of an exterior power with polynomial coefficients:
/// degree-k alternating tensor over a rank-`dim` frame. Serves both the
/// multivector and form sides of a chart and of any Lie algebroid frame.
/// Degrees above the rank are allowed and hold only zero.
class AltTensor {
 public:
  using Components = std::map<IndexMask, Poly, MaskOrder>;

  explicit AltTensor(std::size_t dim = 0, std::size_t degree = 0);

  static AltTensor scalar(std::size_t dim, const Poly& f);
  static AltTensor from_vector(std::span<const Poly> coeffs);  // degree 1
  static AltTensor basis(std::size_t dim, IndexMask mask, const Poly& coeff);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }

  const Poly& operator[](IndexMask mask) const;
  /// Value on an ordered index sequence (sign of the sorting permutation;
  /// zero on repeated indices).
  Poly on_sequence(std::span<const std::size_t> indices) const;

  void add(IndexMask mask, const Poly& value);
  void add_sequence(std::span<const std::size_t> indices, const Poly& value);

  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  std::vector<Poly> as_vector() const;  // degree 1 only
  unsigned max_coeff_degree() const;

  AltTensor& operator+=(const AltTensor& rhs);
  AltTensor& operator-=(const AltTensor& rhs);
  AltTensor& operator*=(const Poly& f);
  friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
  friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
  friend AltTensor operator*(AltTensor a, const Poly& f) { return a *= f; }
  friend AltTensor operator*(const Poly& f, AltTensor a) { return a *= f; }
  AltTensor operator-() const;

  bool operator==(const AltTensor& rhs) const;

 private:
  void require_compatible(const AltTensor& rhs, const char* what) const;

  std::size_t dim_;
  std::size_t degree_;
  Components comps_;
};

/// Sign of theta_a ^ theta_b relative to theta_{a|b}; 0 when they overlap.
int wedge_sign(IndexMask a, IndexMask b);

AltTensor wedge(const AltTensor& a, const AltTensor& b);

/// Interior product by a degree-1 element of the dual frame, contracting the
/// first slot: i_{e^j}(e_I) = (-1)^{position of j in I} e_{I \ j}.
AltTensor contract(const AltTensor& covector, const AltTensor& t);

/// Full pairing of equal-degree tensors with <e^I, e_I> = 1.
Poly pair(const AltTensor& a, const AltTensor& b);

/// Right superderivative in the odd generator theta_i.
AltTensor right_derivative(const AltTensor& t, std::size_t i);

/// Coefficient-wise partial derivative in chart variable `var`.
AltTensor partial(const AltTensor& t, std::size_t var);

}  // namespace courant
