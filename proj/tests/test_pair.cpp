#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "logcy/periods.hpp"

using namespace logcy;
using fixtures::q;

namespace {

PairData with_point(PairData d, Edge e, const char* z) {
  d.program.push_back(PointBlowup{e, q(z)});
  return d;
}

BigInt anticanonical_cube(const LogCY3Pair& p) {
  PicVector k = p.canonical();
  return -p.cubic(k, k, k);
}

bool zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

}  // namespace

TEST_CASE("validate_pair examples") {
  CHECK(validate_pair(fixtures::p3()).ok);
  CHECK(validate_pair(fixtures::p3_conic()).ok);

  PairData cubic = fixtures::p3();
  CurveBlowup c;
  c.component = 3;
  c.cls.boundary = {{0, 3}};
  c.points = {{0, {q("2"), q("3"), q("4")}}, {1, {q("5"), q("7"), q("8")}}, {2, {q("1/6"), q("1/35"), q("1/9")}}};
  cubic.program.push_back(c);
  auto d = validate_pair(cubic);
  CHECK_FALSE(d.ok);
  CHECK(d.message.find("adjunction failed") != std::string::npos);

  // Moving one point without compensating breaks the product condition.
  PairData bad = fixtures::p3_conic();
  std::get<CurveBlowup>(bad.program[0]).points[0].coords[0] = q("11");
  auto e = validate_pair(bad);
  CHECK_FALSE(e.ok);
  CHECK(e.message.find("not cut out by a curve") != std::string::npos);

  CHECK_FALSE(validate_pair(with_point(fixtures::p3(), {0, 1}, "0")).ok);
  CHECK_FALSE(validate_pair(with_point(with_point(fixtures::p3(), {0, 1}, "2"), {1, 0}, "1/2")).ok);
  CHECK(validate_pair(with_point(with_point(fixtures::p3(), {0, 1}, "2"), {1, 0}, "2")).ok);
}

TEST_CASE("cubic form examples") {
  LogCY3Pair b(with_point(fixtures::p3(), {0, 1}, "2"));
  PicVector e = b.exceptional(0), k = b.canonical(), h = b.unit(0);
  CHECK(b.cubic(e, k, k) == 4);
  CHECK(b.cubic(h, h, e) == 0);
  CHECK(b.cubic(e, e, e) == 1);

  // An interior point has the same local intersection theory as a torus-fixed one.
  ToricVariety p3(Fan3::projective_space());
  CHECK(b.cubic_form() == blowup_formula_cubic(p3, {0, 1, 2}));
  CHECK(b.cubic_form() == subdivision_cubic(p3, {0, 1, 2}));
}

TEST_CASE("anticanonical degrees follow the blowup formulas") {
  // Point: (-K)^3 drops by 8. Smooth rational curve C: drops by 2(-K.C) + 2.
  CHECK(anticanonical_cube(LogCY3Pair(fixtures::p3())) == 64);
  CHECK(anticanonical_cube(LogCY3Pair(with_point(fixtures::p3(), {0, 1}, "2"))) == 56);
  const long conic_drop = 2 * (4 * 2) + 2;
  CHECK(anticanonical_cube(LogCY3Pair(fixtures::p3_conic())) == 64 - conic_drop);
  CHECK(anticanonical_cube(fixtures::load("p3_three_steps.pair.json")) == 64 - 8 - 8 - conic_drop);
}

TEST_CASE("boundary components") {
  LogCY3Pair p3(fixtures::p3());
  CHECK(p3.components().size() == 4);
  for (const auto& c : p3.components()) CHECK(c.rank() == 1);

  LogCY3Pair b(with_point(fixtures::p3(), {1, 2}, "2"));
  CHECK(b.component(0).rank() == 1);
  CHECK(b.component(1).rank() == 2);
  CHECK(b.component(2).rank() == 2);
  CHECK(b.component(3).rank() == 1);

  LogCY3Pair c(fixtures::p3_conic());
  for (int v = 0; v < 3; ++v) CHECK(c.component(v).rank() == 3);
  CHECK(c.component(3).rank() == 1);
}

TEST_CASE("restriction examples") {
  LogCY3Pair p3(fixtures::p3());
  for (int v = 0; v < 4; ++v) {
    IntVector dv(4);
    dv[v] = 1;
    PicVector l = p3.pullback(dv);
    for (int w = 0; w < 4; ++w) {
      const auto& c = p3.component(w);
      PicVector r = p3.restrict(l, w);
      for (std::size_t i = 0; i < c.base().size(); ++i)
        CHECK(c.intersect(r, c.boundary_curve(i)) == BigInt(static_cast<long>(p3.toric().triple(v, w, c.base().neighbours[i]))));
    }
  }
  CHECK(zero_vector(p3.restrict_all(p3.zero())));

  LogCY3Pair b(with_point(fixtures::p3(), {1, 2}, "2"));
  PicVector e = b.exceptional(0);
  CHECK(b.restrict(e, 1) == b.component(1).unit(1));
  CHECK(b.restrict(e, 2) == b.component(2).unit(1));
  CHECK(b.restrict(e, 0).is_zero());
  CHECK(b.restrict(e, 3).is_zero());
}

TEST_CASE("k_image ranks") {
  CHECK(k_image(LogCY3Pair(fixtures::p3())).basis.size() == 1);
  CHECK(k_image(LogCY3Pair(with_point(fixtures::p3(), {0, 1}, "2"))).basis.size() == 2);
  for (const auto& name : fixtures::pair_files()) CHECK_FALSE(k_image(fixtures::load(name)).basis.empty());
}

TEST_CASE("property: restriction, cubic form and bookkeeping") {
  std::mt19937_64 rng(5);
  for (const auto& name : fixtures::pair_files()) {
    CAPTURE(name);
    LogCY3Pair p = fixtures::load(name);
    CHECK(p.rank() == p.toric_rank() + p.step_count());
    CHECK(p.toric_rank() == static_cast<std::size_t>(p.toric().picard_rank()));
    std::size_t exceptionals = 0;
    for (const auto& c : p.components()) {
      CHECK(c.rank() == c.base().size() - 2 + c.exceptionals().size());
      exceptionals += c.exceptionals().size();
    }
    std::size_t expected = 0;
    for (const auto& s : p.steps())
      if (s.is_curve)
        for (int n : s.point_counts) expected += static_cast<std::size_t>(n);
      else
        expected += 2;
    CHECK(exceptionals == expected);

    IntMatrix ell = edge_matching_map(p);
    const std::size_t rays = static_cast<std::size_t>(p.toric().ray_count());
    for (int trial = 0; trial < 20; ++trial) {
      PicVector a = fixtures::random_pic(p, rng), b = fixtures::random_pic(p, rng), c = fixtures::random_pic(p, rng);
      CHECK(zero_vector(ell.apply(p.restrict_all(a))));
      BigInt abc = p.cubic(a, b, c);
      CHECK(abc == p.cubic(b, c, a));
      CHECK(abc == p.cubic(c, a, b));
      CHECK(abc == p.cubic(a, c, b));
      IntVector x = fixtures::random_vector(rays, rng), y = fixtures::random_vector(rays, rng), z = fixtures::random_vector(rays, rng);
      CHECK(p.cubic(p.pullback(x), p.pullback(y), p.pullback(z)) == p.toric().triple(x, y, z));
    }

    // (-K_Y - D_v)|_{D_v} is the boundary cycle of D_v.
    for (const auto& c : p.components()) {
      const int v = c.vertex();
      PicVector cycle = c.zero();
      for (std::size_t i = 0; i < c.base().size(); ++i) cycle += c.boundary_curve(i);
      CHECK(p.restrict(p.zero() - p.canonical() - p.boundary_class(v), v) == cycle);
      CHECK(c.canonical() == c.zero() - cycle);
    }
  }
}
