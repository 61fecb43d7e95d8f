#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "courant/calc/poly.hpp"
#include "courant/exact/matrix.hpp"

namespace courant {

/// Gauss-Jordan elimination over Q[x] that only divides by nonzero constant
/// pivots. Every step is invertible over the polynomial ring, so the reduced
/// rows span the same module as the input. When no leftover rows remain the
/// reduced rows are a free basis and membership is decided exactly.
struct UnitEchelon {
  std::vector<PolyVector> rows;       // one per pivot; 1 at the pivot, 0 in other rows' pivots
  std::vector<std::size_t> pivots;    // pivot column of each row
  std::vector<std::size_t> group_of;  // index of the column group each pivot came from
  std::vector<PolyVector> transform;  // rows[k] = sum_j transform[k][j] * input[j]
  std::vector<PolyVector> leftover;   // nonzero rows no constant pivot could reduce
  std::vector<PolyVector> leftover_transform;
  std::size_t inputs = 0;             // number of input rows

  bool complete() const { return leftover.empty(); }
  /// v - sum_k v[pivot_k] rows[k]; zero iff v lies in the span (when complete).
  PolyVector residual(std::span<const Poly> v) const;
  /// Coefficients on the input rows expressing v, assuming residual(v) = 0.
  std::vector<Poly> input_coefficients(std::span<const Poly> v) const;
};

/// Pivots are sought group by group (in order); within a group the smallest
/// column with a constant entry wins. Empty `groups` means all columns at once.
UnitEchelon unit_echelon(const std::vector<PolyVector>& rows, std::size_t ncols,
                         const std::vector<std::vector<std::size_t>>& groups = {});

RatMatrix evaluate_rows(const std::vector<PolyVector>& rows, std::size_t ncols, std::span<const Rational> point);

/// Deterministic pseudo-random rational points used for generic-rank tests.
std::vector<std::vector<Rational>> sample_points(std::size_t nvars, std::size_t count, unsigned seed = 7);

/// Finds polynomial c_k of degree <= cap with sum_k c_k rows[k] = target by
/// matching coefficients; nullopt when no such solution exists within cap.
std::optional<std::vector<Poly>> solve_capped(const std::vector<PolyVector>& rows, std::span<const Poly> target,
                                              std::size_t nvars, unsigned cap);

enum class Membership { Yes, No, Unknown };

struct MembershipResult {
  Membership verdict = Membership::Unknown;
  std::vector<Poly> coefficients;  // on the input rows when verdict == Yes
  PolyVector residual;             // witness when verdict == No and exact
};

/// Module membership of `v` in the Q[x]-span of `rows`: exact when the unit
/// echelon is complete, otherwise a pointwise refutation followed by a
/// degree-capped solve.
MembershipResult module_member(const std::vector<PolyVector>& rows, const UnitEchelon& echelon,
                               std::span<const Poly> v, std::size_t nvars, unsigned cap);

}  // namespace courant
