#include <doctest.h>

#include "courant/calc/text.hpp"
#include "courant/errors.hpp"
#include "courant/pullback.hpp"

using namespace courant;

namespace {

ChartPtr chart_of(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return make_chart(names);
}

MultiVector bivector(const ChartPtr& c, const std::string& text) {
  MultiVector m = parse_multivector(text, c);
  return m.is_zero() ? MultiVector(c, 2) : m;
}

// Coordinate projection Q^n -> Q^m onto the first m coordinates.
BundleSurjection projection(std::size_t n, std::size_t m, const std::string& src_pi = "0",
                            const std::string& tgt_pi = "0") {
  auto p = chart_of(n), q = chart_of(m, "y");
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < m; ++i) comps.push_back(Poly::variable(i));
  return BundleSurjection::tangent_map(bivector(p, src_pi), bivector(q, tgt_pi), Submersion{p, q, comps});
}

DiracCandidate frame_of(const CourantDouble& e, std::vector<std::pair<std::string, std::string>> parts) {
  DiracCandidate l;
  for (const auto& [v, f] : parts) {
    DoubleSection s = e.zero();
    if (!v.empty()) s.x += parse_multivector(v, e.chart()).tensor();
    if (!f.empty()) s.xi += parse_form(f, e.chart()).tensor();
    l.frame.push_back(s);
  }
  return l;
}

}  // namespace

TEST_CASE("admissible sections") {
  const auto s = projection(3, 2);
  const auto& src = s.source();
  auto pushed = is_admissible_section(s, frame_of(src, {{"d/dx1", ""}}).frame[0]);
  REQUIRE(pushed);
  CHECK(s.target().render(*pushed) == "d/dy1");
  CHECK_FALSE(is_admissible_section(s, frame_of(src, {{"x3 d/dx1", ""}}).frame[0]));
  pushed = is_admissible_section(s, frame_of(src, {{"", "x2 dx1"}}).frame[0]);
  REQUIRE(pushed);
  CHECK(s.target().render(*pushed) == "y2 dy1");
  CHECK_FALSE(is_admissible_section(s, frame_of(src, {{"", "dx3"}}).frame[0]));
}

TEST_CASE("morphism checks") {
  CHECK(is_morphism(projection(3, 2)).passed());
  CHECK(is_morphism(projection(3, 3, "x1 d/dx1^d/dx2", "y1 d/dy1^d/dy2")).passed());
  // pi does not project to the target structure along this map.
  CHECK_FALSE(is_morphism(projection(3, 2, "x3 d/dx1^d/dx2", "0")).passed());
  CHECK_FALSE(is_morphism(projection(3, 2, "d/dx1^d/dx2", "0")).passed());
}

TEST_CASE("surjectivity is enforced") {
  auto p = chart_of(2), q = chart_of(2, "y");
  const CourantDouble src(Bialgebroid::from_poisson(MultiVector(p, 2)));
  const CourantDouble tgt(Bialgebroid::from_poisson(MultiVector(q, 2)));
  const Submersion j{p, q, {Poly::variable(0), Poly::variable(1)}};
  std::vector<PolyVector> phi{{Poly(1), Poly(1)}, {Poly(1), Poly(1)}};
  CHECK_THROWS_AS(BundleSurjection(src, tgt, j, phi), ValidationError);
}

TEST_CASE("pullbacks of factors and graphs") {
  const auto s = projection(3, 2);
  const auto& src = s.source();
  const auto& tgt = s.target();
  const auto bfactor = frame_of(tgt, {{"d/dy1", ""}, {"d/dy2", ""}});
  CHECK(same_subbundle(src, pullback_isotropic(s, bfactor), frame_of(src, {{"d/dx1", ""}, {"d/dx2", ""}, {"d/dx3", ""}})) ==
        Membership::Yes);
  const auto bstar = frame_of(tgt, {{"", "dy1"}, {"", "dy2"}});
  CHECK(same_subbundle(src, pullback_isotropic(s, bstar), frame_of(src, {{"d/dx3", ""}, {"", "dx1"}, {"", "dx2"}})) ==
        Membership::Yes);

  const auto theta = parse_form("(y1^2 + y2) dy1^dy2", tgt.chart()).tensor();
  const auto pulled = pullback_isotropic(s, graph_of_form(tgt, theta));
  const auto direct = graph_of_form(src, parse_form("(x1^2 + x2) dx1^dx2", src.chart()).tensor());
  CHECK(same_subbundle(src, pulled, direct) == Membership::Yes);
  CHECK(verify_pullback_theorem(s, graph_of_form(tgt, theta)).passed());
}

TEST_CASE("pullback theorem instances") {
  const auto s = projection(3, 2);
  const auto& tgt = s.target();
  const Report poisson = verify_pullback_theorem(s, graph_of_bivector(tgt, bivector(tgt.chart(), "y1 d/dy1^d/dy2").tensor()));
  CHECK(poisson.passed());
  bool intertwined = false;
  for (const auto& c : poisson.checks()) intertwined |= c.name == "INTERTWINE";
  CHECK(intertwined);

  const auto null = null_dirac(tgt, {parse_multivector("d/dy2", tgt.chart()).tensor()});
  CHECK(verify_pullback_theorem(s, null).passed());
  const auto& src = s.source();
  const auto expected =
      null_dirac(src, {parse_multivector("d/dx2", src.chart()).tensor(), parse_multivector("d/dx3", src.chart()).tensor()});
  CHECK(same_subbundle(src, pullback_isotropic(s, null), expected) == Membership::Yes);

  const auto s5 = projection(5, 4);
  const auto& t4 = s5.target();
  const auto bad = graph_of_bivector(t4, bivector(t4.chart(), "d/dy1^d/dy2 + y1 d/dy3^d/dy4").tensor());
  const Report r = verify_pullback_theorem(s5, bad);
  CHECK(r.status() == Status::Fail);
  for (const auto& c : r.checks()) {
    if (c.name == "TARGET_DIRAC" || c.name == "SOURCE_DIRAC") CHECK(c.status == Status::Fail);
    if (c.name == "EQUIVALENCE") CHECK(c.status == Status::Pass);
  }
}

TEST_CASE("pullback along the identity") {
  const auto s = projection(3, 3, "x1 d/dx1^d/dx2", "y1 d/dy1^d/dy2");
  const auto& tgt = s.target();
  const auto l = graph_of_bivector(tgt, bivector(tgt.chart(), "y3 d/dy2^d/dy3").tensor());
  const auto lbar = pullback_isotropic(s, l);
  const auto direct = graph_of_bivector(s.source(), bivector(s.source().chart(), "x3 d/dx2^d/dx3").tensor());
  CHECK(same_subbundle(s.source(), lbar, direct) == Membership::Yes);
  CHECK(s.kernel().empty());
}

TEST_CASE("descending functions") {
  const auto s = projection(3, 2);
  auto g = s.descend(parse_poly("x1^2 x2 + 3", *s.source().chart()));
  REQUIRE(g);
  CHECK(to_string(*g, *s.target().chart()) == "y1^2 y2 + 3");
  CHECK_FALSE(s.descend(parse_poly("x3", *s.source().chart())));
}
