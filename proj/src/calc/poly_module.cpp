#include "courant/calc/poly_module.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "courant/errors.hpp"

namespace courant {

namespace {

void axpy(PolyVector& y, const Poly& a, const PolyVector& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] -= a * x[i];
}

void scale(PolyVector& v, const Rational& c) {
  for (auto& p : v) p *= c;
}

}  // namespace

PolyVector UnitEchelon::residual(std::span<const Poly> v) const {
  PolyVector r(v.begin(), v.end());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Poly c = r[pivots[k]];
    axpy(r, c, rows[k]);
  }
  return r;
}

std::vector<Poly> UnitEchelon::input_coefficients(std::span<const Poly> v) const {
  const std::size_t n = inputs;
  std::vector<Poly> out(n);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Poly& c = v[pivots[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!transform[k][j].is_zero()) out[j] += c * transform[k][j];
  }
  return out;
}

UnitEchelon unit_echelon(const std::vector<PolyVector>& input, std::size_t ncols,
                         const std::vector<std::vector<std::size_t>>& groups) {
  const std::size_t m = input.size();
  std::vector<PolyVector> w = input;
  std::vector<PolyVector> t(m, PolyVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (w[i].size() != ncols) throw DimensionMismatch("row length differs from column count");
    t[i][i] = Poly(1);
  }
  std::vector<std::vector<std::size_t>> order = groups;
  if (order.empty()) {
    order.emplace_back();
    for (std::size_t c = 0; c < ncols; ++c) order.back().push_back(c);
  }

  std::vector<bool> row_used(m, false);
  std::vector<bool> col_used(ncols, false);
  std::vector<std::size_t> pivot_rows;
  UnitEchelon out;
  out.inputs = m;
  for (std::size_t g = 0; g < order.size(); ++g) {
    std::vector<std::size_t> cols = order[g];
    std::sort(cols.begin(), cols.end());
    for (;;) {
      std::size_t pr = m;
      std::size_t pc = ncols;
      for (auto c : cols) {
        if (col_used[c]) continue;
        for (std::size_t r = 0; r < m && pr == m; ++r)
          if (!row_used[r] && !w[r][c].is_zero() && w[r][c].is_constant()) pr = r;
        if (pr != m) {
          pc = c;
          break;
        }
      }
      if (pr == m) break;
      const Rational inv = 1 / w[pr][pc].constant_value();
      scale(w[pr], inv);
      scale(t[pr], inv);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == pr || w[r][pc].is_zero()) continue;
        const Poly c = w[r][pc];
        axpy(w[r], c, w[pr]);
        axpy(t[r], c, t[pr]);
      }
      row_used[pr] = true;
      col_used[pc] = true;
      pivot_rows.push_back(pr);
      out.pivots.push_back(pc);
      out.group_of.push_back(g);
    }
  }
  for (auto r : pivot_rows) {
    out.rows.push_back(w[r]);
    out.transform.push_back(t[r]);
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (row_used[r] || is_zero(w[r])) continue;
    out.leftover.push_back(w[r]);
    out.leftover_transform.push_back(t[r]);
  }
  return out;
}

RatMatrix evaluate_rows(const std::vector<PolyVector>& rows, std::size_t ncols, std::span<const Rational> point) {
  RatMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c].evaluate(point);
  return m;
}

std::vector<std::vector<Rational>> sample_points(std::size_t nvars, std::size_t count, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> num(-97, 97);
  std::uniform_int_distribution<int> den(1, 13);
  std::vector<std::vector<Rational>> out(count, std::vector<Rational>(nvars));
  for (auto& p : out)
    for (auto& x : p) {
      x = Rational(num(gen), den(gen));
      x.canonicalize();
    }
  return out;
}

std::optional<std::vector<Poly>> solve_capped(const std::vector<PolyVector>& rows, std::span<const Poly> target,
                                              std::size_t nvars, unsigned cap) {
  const std::size_t k = rows.size();
  const std::size_t len = target.size();
  const auto monos = monomials_up_to(nvars, cap);
  const std::size_t unknowns = k * monos.size();
  // Equation index per (component, monomial) on demand.
  std::vector<std::map<Monomial, std::size_t>> eq_index(len);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> eqs;
  auto equation = [&](std::size_t comp, const Monomial& mono) -> std::size_t {
    auto [it, inserted] = eq_index[comp].try_emplace(mono, eqs.size());
    if (inserted) eqs.emplace_back();
    return it->second;
  };
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t comp = 0; comp < len; ++comp)
      for (const auto& term : rows[r][comp].terms())
        for (std::size_t u = 0; u < monos.size(); ++u)
          eqs[equation(comp, monos[u] * term.mono)].push_back({r * monos.size() + u, term.coeff});
  std::vector<Rational> rhs(eqs.size());
  for (std::size_t comp = 0; comp < len; ++comp)
    for (const auto& term : target[comp].terms()) {
      const std::size_t e = equation(comp, term.mono);
      if (rhs.size() < eqs.size()) rhs.resize(eqs.size());
      rhs[e] = term.coeff;
    }
  rhs.resize(eqs.size());
  RatMatrix a(eqs.size(), unknowns);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (const auto& [col, v] : eqs[e]) a(e, col) += v;
  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  std::vector<Poly> out(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t u = 0; u < monos.size(); ++u) {
      const Rational& v = (*sol)[r * monos.size() + u];
      if (sgn(v) != 0) out[r] += Poly::monomial(monos[u], v);
    }
  return out;
}

MembershipResult module_member(const std::vector<PolyVector>& rows, const UnitEchelon& echelon,
                               std::span<const Poly> v, std::size_t nvars, unsigned cap) {
  MembershipResult res;
  PolyVector r = echelon.residual(v);
  if (echelon.complete()) {
    if (is_zero(r)) {
      res.verdict = Membership::Yes;
      res.coefficients = echelon.input_coefficients(v);
    } else {
      res.verdict = Membership::No;
      res.residual = std::move(r);
    }
    return res;
  }
  // The leftover rows have no unit pivot; refute pointwise, then try a capped solve.
  const std::size_t ncols = v.size();
  for (const auto& p : sample_points(nvars, 3)) {
    RatMatrix m = evaluate_rows(echelon.leftover, ncols, p);
    const std::size_t base = rank(m);
    m.append_row(evaluate(r, p));
    if (rank(m) > base) {
      res.verdict = Membership::No;
      res.residual = std::move(r);
      return res;
    }
  }
  if (auto c = solve_capped(echelon.leftover, r, nvars, cap)) {
    res.verdict = Membership::Yes;
    res.coefficients = echelon.input_coefficients(v);
    const std::size_t n = rows.size();
    for (std::size_t l = 0; l < echelon.leftover.size(); ++l)
      for (std::size_t j = 0; j < n; ++j) res.coefficients[j] += (*c)[l] * echelon.leftover_transform[l][j];
    return res;
  }
  return res;
}

}  // namespace courant
