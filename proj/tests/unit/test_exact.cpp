#include <doctest.h>

#include <random>

#include "courant/errors.hpp"
#include "courant/exact/matrix.hpp"
#include "courant/exact/rational.hpp"
#include "courant/exact/subspace.hpp"

using namespace courant;

namespace {

RatMatrix m(std::vector<std::vector<long>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::vector<Rational>> q;
  for (auto& r : rows) {
    q.emplace_back();
    for (auto v : r) q.back().push_back(Rational(v));
  }
  return RatMatrix::from_rows(q, cols);
}

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

RatMatrix random_matrix(std::mt19937& gen, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-2, 2);
  RatMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(gen);
  return a;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("123456789012345678901234567890/3") * 3 == parse_rational("123456789012345678901234567890"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("rref examples") {
  auto e = rref(m({{2, 4}, {1, 2}}));
  CHECK(e.form == m({{1, 2}}));
  CHECK(e.pivots == std::vector<std::size_t>{0});

  auto id = rref(RatMatrix::identity(3));
  CHECK(id.form == RatMatrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  CHECK(rref(m({{0, 1}, {1, 0}})).form == RatMatrix::identity(2));
}

TEST_CASE("rref is idempotent and nullspace is annihilated") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix a = random_matrix(gen, 3 + trial % 3, 5);
    auto e = rref(a);
    CHECK(rref(e.form).form == e.form);
    RatMatrix k = nullspace(a);
    CHECK(k.rows() + rank(a) == a.cols());
    for (std::size_t i = 0; i < k.rows(); ++i)
      for (const auto& x : a.apply(k.row(i))) CHECK(x == 0);
  }
}

TEST_CASE("intersections") {
  auto u = Subspace::span(3, {unit(3, 0), unit(3, 1)});
  auto v = Subspace::span(3, {unit(3, 1), unit(3, 2)});
  CHECK(intersect(u, v) == Subspace::span(3, {unit(3, 1)}));
  CHECK(intersect(u, u) == u);
  CHECK(intersect(Subspace::span(3, {unit(3, 0)}), Subspace::span(3, {unit(3, 1)})).dim() == 0);
  CHECK_THROWS_AS(intersect(u, Subspace(4)), DimensionMismatch);
}

TEST_CASE("dimension formula on random subspaces") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto u = Subspace::span(random_matrix(gen, 1 + trial % 4, 5));
    auto v = Subspace::span(random_matrix(gen, 1 + (trial / 4) % 4, 5));
    CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
  }
}

TEST_CASE("orthogonal complements") {
  BilinearForm std2(RatMatrix::identity(2), Symmetry::symmetric);
  CHECK(orthogonal_complement(Subspace::span(2, {unit(2, 0)}), std2) == Subspace::span(2, {unit(2, 1)}));
  CHECK(orthogonal_complement(Subspace::whole(2), std2).dim() == 0);

  // Hyperbolic pairing of coordinates (1,3) and (2,4); hand solution of
  // b(w, e1) = w3 = 0 leaves e1, e2, e4.
  auto h = BilinearForm::hyperbolic(2, Rational(1));
  auto c = orthogonal_complement(Subspace::span(4, {unit(4, 0)}), h);
  CHECK(c == Subspace::span(4, {unit(4, 0), unit(4, 1), unit(4, 3)}));

  std::mt19937 gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = Subspace::span(random_matrix(gen, 1 + trial % 3, 4));
    CHECK(orthogonal_complement(orthogonal_complement(u, h), h) == u);
  }
}

TEST_CASE("maximal isotropy") {
  auto plus = BilinearForm::hyperbolic(2, Rational(1, 2));
  auto a_factor = Subspace::span(4, {unit(4, 0), unit(4, 1)});
  CHECK(is_maximal_isotropic(a_factor, plus));
  CHECK(!is_maximal_isotropic(Subspace::span(4, {unit(4, 0), unit(4, 2)}), plus));
  CHECK(plus(unit(4, 0), unit(4, 2)) == Rational(1, 2));

  // Graph of a skew map r: rows r(e^j) + e^j.
  for (long r01 : {-3L, 0L, 2L}) {
    auto graph = Subspace::span(m({{0, r01, 1, 0}, {-r01, 0, 0, 1}}));
    CHECK(is_maximal_isotropic(graph, plus));
    CHECK(orthogonal_complement(graph, plus) == graph);
  }
  CHECK_THROWS_AS(is_maximal_isotropic(Subspace(3), BilinearForm(RatMatrix::identity(3), Symmetry::symmetric)),
                  DimensionMismatch);
}
