#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "logcy/sampling.hpp"

using namespace logcy;
using fixtures::q;

namespace {

MoriTriple triple(long a, long b, long c) { return {BigInt(a), BigInt(b), BigInt(c)}; }

// The conic pair with rays 0 and 1 exchanged.
PairData swapped_conic() {
  PairData d = fixtures::p3_conic();
  std::swap(d.fan.rays[0], d.fan.rays[1]);
  auto sw = [](int x) { return x == 0 ? 1 : x == 1 ? 0 : x; };
  for (auto& c : d.fan.cones)
    for (auto& x : c) x = sw(x);
  auto& cb = std::get<CurveBlowup>(d.program[0]);
  for (auto& [w, k] : cb.cls.boundary) w = sw(w);
  for (auto& pts : cb.points) pts.neighbour = sw(pts.neighbour);
  return d;
}

}  // namespace

TEST_CASE("Mori table") {
  CHECK(mori_types(triple(-1, -2, 4), false) == std::vector<int>{2});
  CHECK(mori_types(triple(-1, -1, 10), true) == std::vector<int>{1});
  CHECK(mori_types(triple(-1, -1, 2), false) == std::vector<int>{3, 4});
  CHECK(mori_types(triple(-2, -1, 1), false) == std::vector<int>{5});
  CHECK(mori_types(triple(-1, -3, 4), false).empty());
}

TEST_CASE("classify_contraction") {
  PairData d = fixtures::p3();
  d.program.push_back(PointBlowup{{0, 1}, q("2")});
  MoriClass pt = classify_contraction(LogCY3Pair(d), 0);
  CHECK(pt.type == 2);
  CHECK(pt.triple == triple(-1, -2, 4));
  CHECK_FALSE(pt.contracts_to_curve);

  MoriClass cv = classify_contraction(LogCY3Pair(fixtures::p3_conic()), 0);
  CHECK(cv.type == 1);
  CHECK(cv.triple[0] == -1);
  CHECK(cv.triple[1] == -1);
  CHECK(cv.contracts_to_curve);
  // E.K^2 = 2(-K.C) + (K.C + 2) = -K.C + 2, and -K.C = 8 for a conic.
  CHECK(cv.triple[2] == 10);
}

TEST_CASE("property: every program step is type 1 or 2 with table triples") {
  for (const auto& name : fixtures::pair_files()) {
    CAPTURE(name);
    LogCY3Pair p = fixtures::load(name);
    for (std::size_t k = 0; k < p.step_count(); ++k) {
      MoriClass m = classify_contraction(p, k);
      if (p.steps()[k].is_curve) {
        CHECK(m.type == 1);
        CHECK(m.triple[0] == -1);
        CHECK(m.triple[1] == -1);
      } else {
        CHECK(m.type == 2);
        CHECK(m.triple == triple(-1, -2, 4));
      }
    }
  }
}

TEST_CASE("fan reconstruction") {
  for (const auto& name : fixtures::toric_files()) {
    CAPTURE(name);
    Fan3 f = fixtures::load_data(name).fan;
    ToricIntersectionData data = intersection_data(ToricVariety(f));
    Fan3 g = reconstruct_fan(data);
    CHECK(validate_fan(g).ok);
    CHECK(find_fan_isomorphism(f, g));
    CHECK(fan_isomorphism_for(f, g, [&] {
      std::vector<int> id(f.rays.size());
      std::iota(id.begin(), id.end(), 0);
      return id;
    }()));

    for (const auto& [key, value] : data.self_intersection) {
      ToricIntersectionData bad = data;
      bad.self_intersection[key] = value + 1;
      CHECK_THROWS_AS(reconstruct_fan(bad), DomainError);
    }
  }
}

TEST_CASE("complexity") {
  for (const auto& name : fixtures::toric_files()) {
    LogCY3Pair p = fixtures::load(name);
    CHECK(complexity(p, boundary_decomposition(p)) == 0);
    CHECK(complexity(p, {}) == 3);
  }
  LogCY3Pair c(fixtures::p3_conic());
  CHECK(complexity(c, boundary_decomposition(c)) > 0);
}

TEST_CASE("decide_isomorphism: identity, torus translates, perturbations") {
  LogCY3Pair p(fixtures::p3_conic());
  Correspondence id = Correspondence::identity(p);
  CHECK(decide_isomorphism(p, p, id).kind == VerdictKind::Isomorphic);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<GaussianRational, 3> t{random_unit(rng), random_unit(rng), random_unit(rng)};
    LogCY3Pair moved(torus_translate(p, t));
    Verdict v = decide_isomorphism(p, moved, id);
    CHECK(v.kind == VerdictKind::Isomorphic);
    CHECK(decide_isomorphism(moved, p, id).kind == VerdictKind::Isomorphic);
  }

  LogCY3Pair pert = fixtures::load("p3_conic_perturbed.pair.json");
  Verdict v = decide_isomorphism(p, pert, id);
  REQUIRE(v.kind == VerdictKind::Distinct);
  REQUIRE(v.witness);
  REQUIRE(v.value);
  REQUIRE(v.value_prime);
  CHECK_FALSE(*v.value == *v.value_prime);
  CHECK(recheck_witness(p, pert, id, v));
  // The witness lies in Lambda and its two values are the unmarked periods.
  IntVector img = edge_matching_map(p).apply(*v.witness);
  CHECK(std::all_of(img.begin(), img.end(), [](const BigInt& x) { return sgn(x) == 0; }));
  CHECK(evaluate(marked_period(p, p.marking()), *v.witness) == *v.value);
  CHECK(decide_isomorphism(pert, p, id).kind == VerdictKind::Distinct);

  // A tampered certificate does not re-verify.
  Verdict forged = v;
  forged.witness_image = IntVector(v.witness_image->size());
  CHECK_FALSE(recheck_witness(p, pert, id, forged));
}

TEST_CASE("decide_isomorphism: relabelled rays need the matching correspondence") {
  LogCY3Pair p(fixtures::p3_conic());
  LogCY3Pair s(swapped_conic());
  Correspondence corr;
  corr.vertex_map = {1, 0, 2, 3};
  CHECK(decide_isomorphism(p, s, corr).kind == VerdictKind::Isomorphic);
  Correspondence back;
  back.vertex_map = {1, 0, 2, 3};
  CHECK(decide_isomorphism(s, p, back).kind == VerdictKind::Isomorphic);
  CHECK(decide_isomorphism(p, s, Correspondence::identity(p)).kind == VerdictKind::Distinct);

  Correspondence broken;
  broken.vertex_map = {0, 0, 2, 3};
  CHECK_THROWS_AS(decide_isomorphism(p, s, broken), DomainError);
}

TEST_CASE("decide_isomorphism: different combinatorics") {
  LogCY3Pair p(fixtures::p3_conic());
  PairData d = fixtures::p3();
  d.program.push_back(PointBlowup{{0, 1}, q("2")});
  LogCY3Pair b(d);
  CHECK(decide_isomorphism(p, b, Correspondence::identity(p)).kind == VerdictKind::Distinct);
  LogCY3Pair three = fixtures::load("p3_three_steps.pair.json");
  CHECK(decide_isomorphism(p, three, Correspondence::identity(p)).kind == VerdictKind::Distinct);
}

TEST_CASE("verdicts ignore markings") {
  PairData a = fixtures::load_data("p3_three_steps.pair.json");
  PairData b = a;
  b.markings = {{{2, 3}, q("7/3-i")}, {{0, 1}, q("5")}};
  PairData c = a;
  c.markings.clear();
  LogCY3Pair pa(a), pb(b), pc(c);
  Correspondence id = Correspondence::identity(pa);
  CHECK(decide_isomorphism(pa, pb, id).kind == VerdictKind::Isomorphic);
  CHECK(decide_isomorphism(pa, pc, id).kind == VerdictKind::Isomorphic);
}

TEST_CASE("bounded search over exceptional orderings") {
  PairData r = fixtures::p3_conic();
  auto& coords = std::get<CurveBlowup>(r.program[0]).points[0].coords;
  std::swap(coords[0], coords[1]);
  LogCY3Pair p(fixtures::p3_conic()), pr(r);
  Correspondence id = Correspondence::identity(p);
  CHECK(decide_isomorphism(p, pr, id).kind == VerdictKind::Distinct);
  CHECK(decide_isomorphism(p, pr, id, 1).kind == VerdictKind::Inconclusive);
  CHECK(decide_isomorphism(p, pr, id, 8).kind == VerdictKind::Isomorphic);

  // The explicit reordering does the same without a search.
  Correspondence fixed = id;
  fixed.exceptional_order[{0, 0}] = {1, 0};
  CHECK(decide_isomorphism(p, pr, fixed).kind == VerdictKind::Isomorphic);
}

TEST_CASE("marking transporter") {
  LogCY3Pair p(fixtures::p3_conic());
  Correspondence id = Correspondence::identity(p);
  Marking m = marker_marking(p.complex());
  auto same = marking_transporter(p, p, id, m, m);
  REQUIRE(same.solvable);
  REQUIRE(same.lambdas);
  for (const auto& x : *same.lambdas) CHECK(x == GaussianRational(1));

  const auto t = q("3/2+i");
  for (std::size_t e = 0; e < p.complex().edges().size(); ++e) {
    Marking m2 = m;
    m2[static_cast<int>(e)] = m2[static_cast<int>(e)] * t;
    auto r = marking_transporter(p, p, id, m, m2);
    REQUIRE(r.solvable);
    REQUIRE(r.lambdas);
    PeriodCharacter lhs = theta(p, *r.lambdas), phi = marked_period(p, m), phi2 = marked_period(p, m2);
    for (std::size_t j = 0; j < p.sum_rank(); ++j) CHECK(lhs.values[j] * phi.values[j] == phi2.values[j]);
    // lambda_e = t, 1 elsewhere, solves it too; solutions agree modulo ker(theta).
    std::vector<GaussianRational> direct(p.complex().edges().size(), GaussianRational(1));
    direct[e] = t;
    PeriodCharacter td = theta(p, direct);
    CHECK(td.values == lhs.values);
  }

  LogCY3Pair pert = fixtures::load("p3_conic_perturbed.pair.json");
  auto none = marking_transporter(p, pert, id, m, marker_marking(pert.complex()));
  CHECK_FALSE(none.solvable);
  REQUIRE_FALSE(none.relation.empty());
  IntVector img = edge_matching_map(p).apply(none.relation);
  CHECK(std::all_of(img.begin(), img.end(), [](const BigInt& x) { return sgn(x) == 0; }));
  CHECK_FALSE(evaluate(marked_period(p, m), none.relation) == evaluate(marked_period(pert, m), none.relation));
}
