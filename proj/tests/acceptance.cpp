// Acceptance gate: one line per criterion, exact comparisons, pinned time budgets.
#include "fixtures.hpp"
#include "logcy/sampling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace logcy;
using fixtures::q;

namespace {

struct Criterion {
  int id;
  const char* name;
  double budget_ms;  // 0: no time limit
  std::function<bool(std::string&)> run;
};

bool zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

std::vector<LogCY3Pair> load_all(const std::vector<std::string>& names) {
  std::vector<LogCY3Pair> out;
  for (const auto& n : names) out.push_back(fixtures::load(n));
  return out;
}

bool mori(std::string& note) {
  PairData d = fixtures::p3();
  d.program.push_back(PointBlowup{{0, 1}, q("2")});
  MoriClass pt = classify_contraction(LogCY3Pair(d), 0);
  MoriClass cv = classify_contraction(LogCY3Pair(fixtures::p3_conic()), 0);
  note = "point (" + pt.triple[0].get_str() + "," + pt.triple[1].get_str() + "," + pt.triple[2].get_str() + ") type " +
         std::to_string(pt.type) + "; curve (" + cv.triple[0].get_str() + "," + cv.triple[1].get_str() + "," +
         cv.triple[2].get_str() + ") type " + std::to_string(cv.type);
  return pt.type == 2 && pt.triple == MoriTriple{-1, -2, 4} && cv.type == 1 && cv.triple[0] == -1 && cv.triple[1] == -1;
}

bool toric_triviality(std::string& note) {
  int checked = 0;
  for (const auto& p : load_all(fixtures::toric_files())) {
    if (!marked_period(p, marker_marking(p.complex())).is_trivial()) return false;
    checked += static_cast<int>(p.sum_rank());
  }
  note = std::to_string(fixtures::toric_files().size()) + " toric fixtures, " + std::to_string(checked) + " basis classes";
  return fixtures::toric_files().size() == 5;
}

bool cokernel(std::string& note) {
  for (const auto& p : load_all(fixtures::toric_files())) {
    GammaReport g = gamma_report(p);
    if (g.coker_ell.free_rank != 3 || !g.coker_ell.is_free()) return false;
    if (!(g.gamma * edge_matching_map(p)).is_zero()) return false;
  }
  note = "coker(l) = Z^3 and gamma.l = 0 on every toric fixture";
  return true;
}

bool torsor(std::string& note) {
  LogCY3Pair p = fixtures::load("p3_three_steps.pair.json");
  if (p.step_count() < 3) return false;
  PropertySuiteResult r = run_property_suite(p, 20261018, 100);
  note = std::to_string(p.step_count()) + " blowups, " + std::to_string(r.trials) + " markings and 100 alphas";
  if (!r.ok()) note += "; " + r.first_failure;
  return r.marking_independent && r.torsor_identity;
}

bool k_triviality(std::string& note) {
  int gens = 0;
  for (const auto& p : load_all(fixtures::pair_files())) {
    PeriodCharacter phi = marked_period(p, p.marking());
    for (const auto& k : k_image(p).basis) {
      if (!evaluate(phi, k).is_one()) return false;
      ++gens;
    }
  }
  note = std::to_string(gens) + " K generators over " + std::to_string(fixtures::pair_files().size()) + " pairs";
  return true;
}

bool cubic_oracle(std::string& note) {
  int centers = 0;
  for (const auto& p : load_all(fixtures::toric_files())) {
    const ToricVariety& t = p.toric();
    for (const auto& c : t.fan().cones) {
      if (!(blowup_formula_cubic(t, {c[0], c[1], c[2]}) == subdivision_cubic(t, {c[0], c[1], c[2]}))) return false;
      ++centers;
    }
    for (const auto& e : t.complex().edges()) {
      if (!(blowup_formula_cubic(t, {e.tail, e.head}) == subdivision_cubic(t, {e.tail, e.head}))) return false;
      ++centers;
    }
  }
  LogCY3Pair p3(fixtures::p3());
  PicVector k = p3.canonical();
  BigInt cube = -p3.cubic(k, k, k);
  note = std::to_string(centers) + " invariant centers; (-K_P3)^3 = " + cube.get_str();
  return cube == 64;
}

bool reconstruction(std::string& note) {
  int rejected = 0;
  for (const auto& name : fixtures::toric_files()) {
    Fan3 f = fixtures::load_data(name).fan;
    ToricIntersectionData data = intersection_data(ToricVariety(f));
    if (!find_fan_isomorphism(f, reconstruct_fan(data))) return false;
    ToricIntersectionData bad = data;
    bad.self_intersection.begin()->second += 1;
    try {
      reconstruct_fan(bad);
      return false;
    } catch (const DomainError&) {
      ++rejected;
    }
  }
  note = std::to_string(rejected) + " fans recovered up to GL3(Z); one perturbed self-intersection rejected per fan";
  return true;
}

bool torelli(std::string& note) {
  LogCY3Pair p = fixtures::load("p3_conic.pair.json");
  LogCY3Pair moved = fixtures::load("p3_conic_translate.pair.json");
  LogCY3Pair pert = fixtures::load("p3_conic_perturbed.pair.json");
  Correspondence id = Correspondence::identity(p);
  Verdict a = decide_isomorphism(p, moved, id);
  Verdict b = decide_isomorphism(p, pert, id);
  const bool re = recheck_witness(p, pert, id, b);
  note = "translate " + to_string(a.kind) + "; perturbed " + to_string(b.kind) + (re ? ", witness re-verified" : ", witness NOT re-verified");
  return a.kind == VerdictKind::Isomorphic && b.kind == VerdictKind::Distinct && re;
}

bool two_paths(std::string& note) {
  int gens = 0;
  for (const auto& p : load_all(fixtures::pair_files())) {
    PeriodCharacter phi = unmarked_period(p);
    for (std::size_t i = 0; i < phi.domain.size(); ++i) {
      if (!(cocycle_period(p, phi.domain[i]) == phi.values[i])) return false;
      ++gens;
    }
  }
  note = std::to_string(gens) + " Lambda generators agree";
  return true;
}

bool complexity_zero(std::string& note) {
  for (const auto& p : load_all(fixtures::toric_files()))
    if (complexity(p, boundary_decomposition(p)) != 0) return false;
  note = "c = 0 on every toric fixture";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Mori table reproduction", 1000, mori},
      {2, "Toric triviality of the marked period", 1000, toric_triviality},
      {3, "Cokernel rank of l", 0, cokernel},
      {4, "Marking independence and torsor identity", 5000, torsor},
      {5, "Triviality on K", 0, k_triviality},
      {6, "Cubic-form oracle", 0, cubic_oracle},
      {7, "Fan reconstruction", 1000, reconstruction},
      {8, "Torelli round trip", 1000, torelli},
      {9, "Two-path period consistency", 0, two_paths},
      {10, "Complexity criterion", 0, complexity_zero},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_ms == 0 || ms < c.budget_ms;
    if (!in_time) note += "; over budget";
    ok = ok && in_time;
    failed += ok ? 0 : 1;
    char budget[32];
    if (c.budget_ms > 0) std::snprintf(budget, sizeof budget, "< %.0f ms", c.budget_ms);
    else std::snprintf(budget, sizeof budget, "no limit");
    std::printf("[%s] %2d %s: %s (exact; %.1f ms, budget %s)\n", ok ? "PASS" : "FAIL", c.id, c.name, note.c_str(), ms, budget);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
