#include <doctest.h>

#include <random>

#include "courant/algebroid.hpp"
#include "courant/calc/text.hpp"
#include "courant/errors.hpp"

using namespace courant;

namespace {

Poly random_poly(std::mt19937& gen, std::size_t nvars, unsigned deg) {
  std::uniform_int_distribution<int> c(-2, 2);
  Poly p;
  for (const auto& m : monomials_up_to(nvars, deg))
    if (int v = c(gen); v != 0 && c(gen) > 0) p += Poly::monomial(m, Rational(v));
  return p;
}

AltTensor random_tensor(std::mt19937& gen, std::size_t n, std::size_t nvars, std::size_t degree, unsigned deg) {
  AltTensor t(n, degree);
  for (IndexMask m = 0; m < (IndexMask(1) << n); ++m)
    if (mask_degree(m) == degree) t.add(m, random_poly(gen, nvars, deg));
  return t;
}

// Point algebroid from a table {i, j, k, value}: [e_i, e_j] has e_k-component value.
Algebroid point_algebra(std::size_t r, const std::vector<std::tuple<int, int, int, long>>& table) {
  auto point = make_chart({});
  std::vector<std::vector<PolyVector>> br(r, std::vector<PolyVector>(r, PolyVector(r)));
  for (auto [i, j, k, v] : table) br[i][j][k] += Poly(v);
  std::vector<std::string> names, dual;
  for (std::size_t i = 0; i < r; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    dual.push_back("e*" + std::to_string(i + 1));
  }
  return Algebroid(point, names, dual, std::vector<PolyVector>(r), br);
}

MultiVector so3_dual() {
  auto c = make_chart({"x1", "x2", "x3"});
  return parse_multivector("x3 d/dx1^d/dx2 + x1 d/dx2^d/dx3 + x2 d/dx3^d/dx1", c);
}

}  // namespace

TEST_CASE("verify_algebroid examples") {
  CHECK(verify_algebroid(Algebroid::tangent(make_chart({"x", "y"}))).passed());
  CHECK(verify_algebroid(point_algebra(2, {})).passed());
  CHECK(verify_algebroid(point_algebra(2, {{0, 1, 0, 1}})).passed());

  // Brute-force Jacobi over basis triples: [[e1,e2],e3] + c.p. = -e3 for this table.
  auto fake = point_algebra(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 0, 1}});
  auto rep = verify_algebroid(fake);
  CHECK(rep.status() == Status::Fail);
  CHECK(rep.checks()[0].name == "JACOBI");
  CHECK(rep.checks()[0].residual == "-e3");
}

TEST_CASE("chevalley-eilenberg differential") {
  auto c = make_chart({"x", "y", "z"});
  auto t = Algebroid::tangent(c);
  std::mt19937 gen(41);
  for (int trial = 0; trial < 8; ++trial) {
    Poly f = random_poly(gen, 3, 3);
    CHECK(t.differential(t.scalar(f)) == differential(c, f).tensor());
    AltTensor w = random_tensor(gen, 3, 3, trial % 2 + 1, 2);
    CHECK(t.differential(w) == de_rham(DiffForm(c, w)).tensor());
  }
  auto zero = Algebroid::trivial(c, {"a", "b"}, {"a*", "b*"});
  CHECK(zero.differential(zero.scalar(Poly::variable(0))).is_zero());

  for (const auto& pi : {so3_dual(), parse_multivector("x1 x2 d/dx1^d/dx3", make_chart({"x1", "x2", "x3"}))}) {
    auto cot = Algebroid::cotangent(pi);
    CHECK(verify_algebroid(cot).passed());
    for (int trial = 0; trial < 6; ++trial) {
      AltTensor w = random_tensor(gen, 3, 3, trial % 2, 2);
      CHECK(cot.differential(cot.differential(w)).is_zero());
    }
  }
  auto heis = point_algebra(3, {{0, 1, 2, 1}});
  CHECK(heis.differential(heis.differential(random_tensor(gen, 3, 0, 1, 0))).is_zero());
}

TEST_CASE("cotangent algebroid") {
  auto c2 = make_chart({"x1", "x2"});
  Poly x1 = Poly::variable(0), x2 = Poly::variable(1);
  auto zero = Algebroid::cotangent(MultiVector(c2, 2));
  CHECK(zero.anchor(zero.frame(0)).is_zero());
  CHECK(zero.bracket(zero.frame(0), zero.frame(1)).is_zero());

  auto sympl = Algebroid::cotangent(parse_multivector("d/dx1^d/dx2", c2));
  CHECK(sympl.bracket(sympl.frame(0), sympl.frame(1)).is_zero());
  CHECK(sympl.anchor(sympl.frame(0)) == coordinate_vector(c2, 1));

  auto pi = parse_multivector("x1 d/dx1^d/dx2", c2);
  auto cot = Algebroid::cotangent(pi);
  CHECK(cot.bracket(cot.frame(0), cot.frame(1)) == cot.frame(0));
  // <df, d_* g> = pi(df, dg) and [df, dg] = d{f, g}.
  const auto monos = monomials_up_to(2, 2);
  for (const auto& mf : monos)
    for (const auto& mg : monos) {
      Poly f = Poly::monomial(mf, Rational(1)), g = Poly::monomial(mg, Rational(1));
      const Poly bracket = evaluate_bivector(pi, differential(c2, f), differential(c2, g));
      CHECK(pair(differential(c2, f).tensor(), cot.differential(cot.scalar(g))) == bracket);
      CHECK(cot.bracket(differential(c2, f).tensor(), differential(c2, g).tensor()) == differential(c2, bracket).tensor());
    }
  CHECK(pair(cot.frame(0), cot.differential(cot.scalar(x2))) == x1);

  // Koszul formula through chart calculus on random one-forms.
  auto pi3 = so3_dual();
  auto c3 = pi3.chart();
  auto k3 = Algebroid::cotangent(pi3);
  std::mt19937 gen(43);
  for (int trial = 0; trial < 6; ++trial) {
    DiffForm xi(c3, random_tensor(gen, 3, 3, 1, 2)), eta(c3, random_tensor(gen, 3, 3, 1, 2));
    auto sharp = [&](const DiffForm& a) { return interior(a, pi3); };
    DiffForm koszul = lie_derivative(sharp(xi), eta) - lie_derivative(sharp(eta), xi) -
                      differential(c3, evaluate_bivector(pi3, xi, eta));
    CHECK(k3.bracket(xi.tensor(), eta.tensor()) == koszul.tensor());
    CHECK(k3.anchor(xi.tensor()) == sharp(xi));
  }

  auto c4 = make_chart({"x1", "x2", "x3", "x4"});
  CHECK_THROWS_AS(Algebroid::cotangent(parse_multivector("d/dx1^d/dx2 + x1 d/dx3^d/dx4", c4)), ValidationError);
}

TEST_CASE("algebroid schouten agrees with chart schouten on the tangent algebroid") {
  auto c = make_chart({"x", "y", "z"});
  auto t = Algebroid::tangent(c);
  std::mt19937 gen(47);
  for (int trial = 0; trial < 16; ++trial) {
    const std::size_t a = trial % 3, b = (trial / 3) % 3;
    if (a + b == 0 || a + b > 4) continue;
    AltTensor p = random_tensor(gen, 3, 3, a, 2), q = random_tensor(gen, 3, 3, b, 2);
    CHECK(t.schouten(p, q) == schouten(MultiVector(c, p), MultiVector(c, q)).tensor());
  }
}

TEST_CASE("verify_bialgebroid") {
  auto c2 = make_chart({"x1", "x2"});
  CHECK(verify_bialgebroid(Bialgebroid::from_poisson(parse_multivector("x1 d/dx1^d/dx2", c2))).passed());
  CHECK(verify_bialgebroid(Bialgebroid::from_poisson(MultiVector(c2, 2))).passed());
  CHECK(verify_bialgebroid(Bialgebroid::from_poisson(so3_dual())).passed());

  // A = TQ, A* with anchor d/dx and zero bracket. In rank one the section
  // identity is vacuous; the function rule gives 2 d/dx for X = x d/dx, f = x.
  auto line = make_chart({"x"});
  Algebroid astar(line, {"dx"}, {"d/dx"}, {PolyVector{Poly(1)}}, {});
  auto rep = verify_bialgebroid(Bialgebroid(Algebroid::tangent(line), astar));
  CHECK(rep.status() == Status::Fail);
  CHECK(rep.checks()[0].status == Status::Pass);
  CHECK(rep.checks()[1].status == Status::Fail);
  CHECK(rep.checks()[1].residual == "2 d/dx");
  CHECK(rep.checks()[1].inputs == "x d/dx, x");
}
