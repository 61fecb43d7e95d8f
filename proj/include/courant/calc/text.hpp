#pragma once

#include <span>
#include <string>
#include <string_view>

#include "courant/calc/chart.hpp"
#include "courant/calc/multivector.hpp"
#include "courant/calc/poly.hpp"

namespace courant {

// Plain-text grammar shared by reports and model files:
//   3/2 x1^2 x2 - z + 1          polynomial
//   x dx^dy - (y + 1) dz^dx      form; basis names dX for coordinate X
//   x d/dy^d/dz                  multivector; basis names d/dX
// Juxtaposition or '*' multiplies, '^' followed by an integer is a power and
// followed by a basis element is a wedge. Printing is canonical, and parsing
// a printed value returns the same value.

std::string to_string(const Poly& p, const Chart& chart);
std::string to_string(const MultiVector& v);
std::string to_string(const DiffForm& w);

/// Tensor over any frame; basis elements named by `basis_names`, coefficients
/// in chart coordinates.
std::string render_tensor(const AltTensor& t, const Chart& chart, std::span<const std::string> basis_names);

/// Generic names x1..xn, used where no chart is at hand.
std::string to_string(const Poly& p);

Poly parse_poly(std::string_view text, const Chart& chart);
MultiVector parse_multivector(std::string_view text, const ChartPtr& chart);
DiffForm parse_form(std::string_view text, const ChartPtr& chart);

}  // namespace courant
