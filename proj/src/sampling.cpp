#include "logcy/sampling.hpp"

namespace logcy {

GaussianRational random_unit(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (;;) {
    BigRational re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    GaussianRational z(re, im);
    if (!z.is_zero()) return z;
  }
}

Marking random_marking(const DualComplex& complex, std::mt19937_64& rng) {
  Marking m;
  for (std::size_t e = 0; e < complex.edges().size(); ++e) m[static_cast<int>(e)] = random_unit(rng);
  return m;
}

std::vector<GaussianRational> random_lambdas(std::size_t n, std::mt19937_64& rng) {
  std::vector<GaussianRational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_unit(rng));
  return out;
}

PropertySuiteResult run_property_suite(const LogCY3Pair& p, std::uint64_t seed, int trials) {
  PropertySuiteResult r;
  r.seed = seed;
  r.trials = trials;
  std::mt19937_64 rng(seed);
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && r.first_failure.empty()) r.first_failure = why;
    flag = false;
  };

  const PeriodCharacter reference = unmarked_period(p);
  const PeriodCharacter marked = marked_period(p, p.marking());
  for (const auto& k : k_image(p).basis)
    if (!evaluate(marked, k).is_one()) fail(r.k_trivial, "period is not 1 on a restricted class");

  const std::size_t edges = p.complex().edges().size();
  for (int t = 0; t < trials; ++t) {
    Marking m = random_marking(p.complex(), rng);
    if (unmarked_period(p, m).values != reference.values)
      fail(r.marking_independent, "trial " + std::to_string(t) + ": unmarked period changed with the marking");

    auto alpha = random_lambdas(edges, rng);
    PeriodCharacter lhs = marked_period(p, m);
    PeriodCharacter th = theta(p, alpha);
    PeriodCharacter rhs = marked_period(p, act(m, alpha));
    for (std::size_t j = 0; j < lhs.values.size(); ++j)
      if (!(th.values[j] * lhs.values[j] == rhs.values[j])) {
        fail(r.torsor_identity, "trial " + std::to_string(t) + ": theta(a) phi_m != phi_{a m}");
        break;
      }
  }
  return r;
}

}  // namespace logcy
