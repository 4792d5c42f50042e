#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace logcy;
using fixtures::q;

TEST_CASE("gaussian rationals parse and print canonically") {
  CHECK(q("3/2").to_string() == "3/2");
  CHECK(q("6/4") == q("3/2"));
  CHECK(q("1-2*i") == GaussianRational(1, -2));
  CHECK(q("i") * q("i") == GaussianRational(-1));
  CHECK(q("-i") == -GaussianRational::i());
  CHECK(q("1/2+1/3*i").to_string() == "1/2+1/3*i");
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q("abc"), ParseError);
  CHECK_THROWS_AS(q("1.5"), ParseError);
}

TEST_CASE("gaussian rational field operations") {
  auto z = q("3-4*i");
  CHECK(z.norm() == 25);
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z * z.conj() == GaussianRational(25));
  CHECK(pow(z, BigInt(-2)) * pow(z, 2L) == GaussianRational(1));
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DomainError);
  auto r = nth_root(q("-4"), 2);
  REQUIRE(r);
  CHECK(*r * *r == q("-4"));
  CHECK_FALSE(nth_root(q("2"), 2));
  auto c = nth_root(q("8/27"), 3);
  REQUIRE(c);
  CHECK(*c == q("2/3"));
}

TEST_CASE("snf examples") {
  auto s = snf(IntMatrix::identity(3));
  CHECK(s.D == IntMatrix::identity(3));
  CHECK(s.U == IntMatrix::identity(3));
  CHECK(s.V == IntMatrix::identity(3));

  // By hand: gcd of the entries is 2 and |det| = 8, so the factors are 2 and 4.
  IntMatrix a{{2, 4}, {6, 8}};
  auto t = snf(a);
  CHECK(t.diagonal() == std::vector<BigInt>{2, 4});
  CHECK(t.U * a * t.V == t.D);

  IntMatrix z(2, 3);
  auto u = snf(z);
  CHECK(u.D.is_zero());
  CHECK(u.rank == 0);
  CHECK(u.U == IntMatrix::identity(2));
  CHECK(u.V == IntMatrix::identity(3));
}

TEST_CASE("kernel and cokernel examples") {
  CHECK(kernel_basis(IntMatrix::identity(3)).empty());
  auto k = kernel_basis(IntMatrix{{2, -2}});
  REQUIRE(k.size() == 1);
  CHECK((k[0] == IntVector{1, 1} || k[0] == IntVector{-1, -1}));

  auto c = cokernel_structure(IntMatrix::identity(3));
  CHECK(c.free_rank == 0);
  CHECK(c.torsion.empty());
  auto d = cokernel_structure(IntMatrix{{2}});
  CHECK(d.free_rank == 0);
  CHECK(d.torsion == std::vector<BigInt>{2});
}

TEST_CASE("solvable_over_torus examples") {
  CHECK(solvable_over_torus(IntMatrix::identity(2), {q("2"), q("3+i")}).solvable);

  auto r = solvable_over_torus(IntMatrix{{1}, {1}}, {q("2"), q("3")});
  CHECK_FALSE(r.solvable);
  REQUIRE(r.violated_relation.size() == 2);
  CHECK(r.violated_relation[0] == -r.violated_relation[1]);
  CHECK(sgn(r.violated_relation[0]) != 0);

  auto s = solve_over_torus(IntMatrix{{2}}, {q("4")});
  CHECK(s.solvability.solvable);
  REQUIRE(s.values);
  CHECK((*s.values)[0] * (*s.values)[0] == q("4"));

  // Solvable over C^x, but the square root of 2 is not in Q(i).
  auto t = solve_over_torus(IntMatrix{{2}}, {q("2")});
  CHECK(t.solvability.solvable);
  CHECK_FALSE(t.values);
  CHECK_THROWS_AS(solvable_over_torus(IntMatrix{{1}}, {GaussianRational(0)}), DomainError);
}

TEST_CASE("property: snf round trip, kernels, rank-nullity") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a = fixtures::random_matrix(r, c, rng);
    if (trial % 4 == 0 && r > 1)  // force dependent rows now and then
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * 2;
    auto s = snf(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(determinant(s.U) * determinant(s.U) == 1);
    CHECK(determinant(s.V) * determinant(s.V) == 1);
    auto d = s.diagonal();
    for (std::size_t i = 1; i < d.size(); ++i)
      if (sgn(d[i]) != 0) CHECK(d[i] % d[i - 1] == 0);

    auto k = kernel_basis(a);
    for (const auto& v : k) {
      auto img = a.apply(v);
      CHECK(std::all_of(img.begin(), img.end(), [](const BigInt& x) { return sgn(x) == 0; }));
    }
    CHECK(rank(a) + k.size() == c);
    if (!k.empty()) {
      auto kd = snf(IntMatrix::from_columns(k, c)).diagonal();
      CHECK(std::all_of(kd.begin(), kd.end(), [](const BigInt& x) { return x == 1; }));
    }
    if (r == c) CHECK(unimodular_inverse(s.U) * s.U == IntMatrix::identity(r));
  }
}

TEST_CASE("property: torus solvability is invariant under unimodular row operations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(2, 4);
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a = fixtures::random_matrix(r, c, rng, -2, 2);
    std::vector<GaussianRational> targets;
    if (trial % 2 == 0) {
      // Consistent targets: evaluate rows at a random point.
      std::vector<GaussianRational> x;
      for (std::size_t j = 0; j < c; ++j) x.push_back(GaussianRational(static_cast<long>(j) + 2, 1));
      for (std::size_t i = 0; i < r; ++i) targets.push_back(evaluate_monomial(x, a.row(i)));
    } else {
      for (std::size_t i = 0; i < r; ++i) targets.push_back(GaussianRational(static_cast<long>(i) + 2));
    }
    const bool before = solvable_over_torus(a, targets).solvable;
    if (trial % 2 == 0) CHECK(before);

    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int op = 0; op < 4; ++op) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      long k = mult(rng);
      a.add_row(i, j, k);
      targets[i] *= pow(targets[j], k);
    }
    CHECK(solvable_over_torus(a, targets).solvable == before);
  }
}
