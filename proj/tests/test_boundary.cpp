#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "logcy/sampling.hpp"

using namespace logcy;
using fixtures::q;

namespace {

LogCY3Pair point_pair(const GaussianRational& z) {
  PairData d = fixtures::p3();
  d.program.push_back(PointBlowup{{0, 1}, z});
  return LogCY3Pair(d);
}

PicVector random_class(const LooijengaComponent& c, std::mt19937_64& rng) {
  return PicVector(fixtures::random_vector(c.rank(), rng), c.tag());
}

}  // namespace

TEST_CASE("restrict_to_cycle examples") {
  LogCY3Pair p3(fixtures::p3());
  const auto& c = p3.component(3);
  REQUIRE(c.rank() == 1);
  CycleDivisor h = restrict_to_cycle(c, c.unit(0));
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(h.points[i].size() == 1);
    CHECK(h.points[i][0].first == marker_point());
    CHECK(h.points[i][0].second == 1);
  }
  CHECK(restrict_to_cycle(c, c.zero()).empty());

  // Edge {0,1} is oriented 0 -> 1, so the written coordinate is D_1's view.
  LogCY3Pair b = point_pair(q("2"));
  const auto& d1 = b.component(1);
  const auto& d0 = b.component(0);
  REQUIRE(d1.rank() == 2);
  REQUIRE(d0.rank() == 2);
  CycleDivisor e1 = restrict_to_cycle(d1, d1.unit(1));
  std::size_t pos1 = d1.base().position_of(0);
  REQUIRE(e1.points[pos1].size() == 1);
  CHECK(e1.points[pos1][0].first == q("2"));
  CHECK(e1.points[pos1][0].second == 1);
  CycleDivisor e0 = restrict_to_cycle(d0, d0.unit(1));
  CHECK(e0.points[d0.base().position_of(1)][0].first == q("1/2"));
}

TEST_CASE("lambda_factor examples") {
  using D = std::vector<std::pair<GaussianRational, BigInt>>;
  const auto qq = q("3+i"), r = q("-2/7");
  for (const auto& p : {q("5"), q("1-i"), marker_point()}) {
    CHECK(lambda_factor(D{{qq, 1}, {r, -1}}, p) == qq / r);
    CHECK(lambda_factor(D{{p, 3}}, p) == GaussianRational(1));
  }
  CHECK(lambda_factor(D{{marker_point(), 1}}, marker_point()) == GaussianRational(1));
  CHECK_THROWS_AS(lambda_factor(D{{GaussianRational(0), 1}}, q("2")), DomainError);
}

TEST_CASE("component_marked_period examples") {
  LogCY3Pair p3(fixtures::p3());
  const auto& c = p3.component(0);
  Marking markers = marker_marking(p3.complex());
  CHECK(component_marked_period(c, markers, c.unit(0)) == GaussianRational(1));
  CHECK(component_marked_period(c, markers, c.zero()) == GaussianRational(1));

  const auto qq = q("2"), p = q("3/5");
  LogCY3Pair b = point_pair(qq);
  Marking m = markers;
  const int e = b.complex().edge_index(0, 1);
  m[e] = p;
  // D_1 reads the edge chart directly, D_0 reads it inverted.
  CHECK(component_marked_period(b.component(1), m, b.component(1).unit(1)) == qq / p);
  CHECK(component_marked_period(b.component(0), m, b.component(0).unit(1)) == p / qq);
}

TEST_CASE("adjunction examples") {
  LogCY3Pair p3(fixtures::p3());
  const auto& c = p3.component(3);
  PicVector h = c.unit(0);
  CHECK(adjunction_check(c, BigInt(2) * h).ok);
  CHECK(adjunction_check(c, h).ok);
  auto cubic = adjunction_check(c, BigInt(3) * h);
  CHECK_FALSE(cubic.ok);
  CHECK(cubic.message.find("adjunction failed") != std::string::npos);
  CHECK_FALSE(adjunction_check(c, c.zero()).ok);
}

TEST_CASE("pic vectors refuse foreign lattices") {
  LogCY3Pair p3(fixtures::p3());
  CHECK_THROWS_AS(p3.component(0).intersect(p3.component(0).unit(0), p3.component(1).unit(0)), BasisMismatch);
  CHECK_THROWS_AS(restrict_to_cycle(p3.component(0), p3.unit(0)), BasisMismatch);
}

TEST_CASE("property: degrees, marker neutrality, chart covariance, multiplicativity") {
  std::mt19937_64 rng(3);
  for (const auto& name : fixtures::pair_files()) {
    CAPTURE(name);
    LogCY3Pair p = fixtures::load(name);
    Marking markers = marker_marking(p.complex());
    for (const auto& c : p.components()) {
      for (std::size_t b = 0; b < c.rank(); ++b) {
        CycleDivisor d = restrict_to_cycle(c, c.unit(b));
        for (std::size_t i = 0; i < c.base().size(); ++i) CHECK(d.degree(i) == c.intersect(c.unit(b), c.boundary_curve(i)));
        if (b < c.toric_rank()) CHECK(component_marked_period(c, markers, c.unit(b)) == GaussianRational(1));
      }
      for (int trial = 0; trial < 10; ++trial) {
        PicVector a = random_class(c, rng), b = random_class(c, rng);
        Marking m = random_marking(p.complex(), rng);
        CHECK(component_marked_period(c, m, a + b) == component_marked_period(c, m, a) * component_marked_period(c, m, b));

        CycleDivisor d = restrict_to_cycle(c, a);
        for (std::size_t i = 0; i < c.base().size(); ++i) {
          const GaussianRational pe = c.chart(i).view_from(c.vertex(), m.at(c.edges()[i]));
          auto flipped = d.points[i];
          for (auto& [z, k] : flipped) z = z.inverse();
          CHECK(lambda_factor(flipped, pe.inverse()) == lambda_factor(d.points[i], pe).inverse());
        }
      }
    }
  }
}
