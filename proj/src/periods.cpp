#include "logcy/periods.hpp"

#include <algorithm>

namespace logcy {

namespace {

IntVector wedge(const LatticePoint& a, const LatticePoint& b) {
  auto w = [&](int i, int j) { return BigInt(static_cast<long>(a[i] * b[j] - a[j] * b[i])); };
  return {w(0, 1), w(0, 2), w(1, 2)};
}

std::vector<IntVector> standard_basis(std::size_t n) {
  std::vector<IntVector> b;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    b.push_back(std::move(e));
  }
  return b;
}

IntMatrix columns(const std::vector<IntVector>& cols, std::size_t rows) {
  return IntMatrix::from_columns(cols, rows);
}

// prod (z - q)^a evaluated at z = 0.
GaussianRational value_at_zero(const std::vector<std::pair<GaussianRational, BigInt>>& pts) {
  GaussianRational v(1);
  for (const auto& [q, a] : pts) v *= pow(-q, a);
  return v;
}

}  // namespace

bool PeriodCharacter::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](const GaussianRational& z) { return z.is_one(); });
}

IntMatrix edge_matching_map(const LogCY3Pair& p) {
  const auto& edges = p.complex().edges();
  IntMatrix l(edges.size(), p.sum_rank());
  for (const auto& comp : p.components()) {
    const int v = comp.vertex();
    for (std::size_t i = 0; i < comp.base().size(); ++i) {
      const int e = comp.edges()[i];
      const int sign = p.complex().orientation_sign(e, v);
      PicVector de = comp.boundary_curve(i);
      for (std::size_t b = 0; b < comp.rank(); ++b) {
        BigInt x = comp.intersect(comp.unit(b), de);
        l(e, p.offset(v) + b) = sign > 0 ? x : BigInt(-x);
      }
    }
  }
  return l;
}

std::vector<IntVector> lambda_lattice(const LogCY3Pair& p) { return kernel_basis(edge_matching_map(p)); }

IntMatrix gamma_map(const LogCY3Pair& p) {
  const auto& edges = p.complex().edges();
  const auto& rays = p.toric().fan().rays;
  std::vector<IntVector> cols;
  for (const auto& e : edges) cols.push_back(wedge(rays[e.tail], rays[e.head]));
  return columns(cols, 3);
}

GammaReport gamma_report(const LogCY3Pair& p) {
  GammaReport r;
  r.gamma = gamma_map(p);
  IntMatrix l = edge_matching_map(p);
  r.coker_ell = cokernel_structure(l);

  std::vector<int> blown;
  for (const auto& s : p.steps()) {
    if (!s.is_curve) {
      blown.push_back(s.edge);
      continue;
    }
    const auto& comp = p.component(s.component);
    for (std::size_t i = 0; i < s.point_counts.size(); ++i)
      if (s.point_counts[i] > 0) blown.push_back(comp.edges()[i]);
  }
  std::sort(blown.begin(), blown.end());
  blown.erase(std::unique(blown.begin(), blown.end()), blown.end());
  std::vector<IntVector> rel;
  for (int e : blown) rel.push_back(r.gamma.column(e));
  IntMatrix relations = rel.empty() ? IntMatrix(3, 0) : columns(rel, 3);
  r.n_prime = cokernel_structure(relations);

  IntMatrix gl = r.gamma * l;
  r.composite_vanishes = true;
  for (std::size_t j = 0; j < gl.cols() && r.composite_vanishes; ++j) {
    IntVector c = gl.column(j);
    bool zero = std::all_of(c.begin(), c.end(), [](const BigInt& x) { return sgn(x) == 0; });
    if (!zero && (rel.empty() || !solve_integer(relations, c))) r.composite_vanishes = false;
  }
  return r;
}

PeriodCharacter marked_period(const LogCY3Pair& p, const Marking& m) {
  PeriodCharacter c;
  c.domain = standard_basis(p.sum_rank());
  for (const auto& comp : p.components())
    for (std::size_t b = 0; b < comp.rank(); ++b) c.values.push_back(component_marked_period(comp, m, comp.unit(b)));
  return c;
}

GaussianRational evaluate(const PeriodCharacter& standard, const IntVector& sum_vector) {
  return evaluate_monomial(standard.values, sum_vector);
}

PeriodCharacter unmarked_period(const LogCY3Pair& p) { return unmarked_period(p, marker_marking(p.complex())); }

PeriodCharacter unmarked_period(const LogCY3Pair& p, const Marking& m) {
  PeriodCharacter marked = marked_period(p, m);
  PeriodCharacter c;
  c.domain = lambda_lattice(p);
  for (const auto& l : c.domain) c.values.push_back(evaluate(marked, l));
  return c;
}

PeriodCharacter theta(const LogCY3Pair& p, const std::vector<GaussianRational>& lambdas) {
  IntMatrix l = edge_matching_map(p);
  if (lambdas.size() != l.rows()) throw DomainError("theta: one value per edge expected");
  for (const auto& x : lambdas)
    if (x.is_zero()) throw DomainError("theta: lambda_e = 0 is not in C^x");
  PeriodCharacter c;
  c.domain = standard_basis(p.sum_rank());
  for (std::size_t j = 0; j < l.cols(); ++j) c.values.push_back(evaluate_monomial(lambdas, l.column(j)));
  return c;
}

Marking act(const Marking& m, const std::vector<GaussianRational>& lambdas) {
  Marking out = m;
  for (auto& [e, z] : out) z *= lambdas.at(e);
  return out;
}

QuotientClass quotient_class(const LogCY3Pair& p) {
  QuotientClass q;
  auto lambda = lambda_lattice(p);
  auto k = k_image(p).basis;
  q.lambda_rank = lambda.size();
  q.k_rank = k.size();
  if (lambda.empty()) return q;

  PeriodCharacter phi = marked_period(p, marker_marking(p.complex()));
  for (const auto& x : k)
    if (!evaluate(phi, x).is_one())
      throw Error("period point is not trivial on the image of Pic(Y); the boundary data is inconsistent");

  IntMatrix lm = columns(lambda, p.sum_rank());
  std::vector<IntVector> kin;
  for (const auto& x : k) {
    auto c = solve_integer(lm, x);
    if (!c) throw Error("a restricted class is not in Lambda");
    kin.push_back(std::move(*c));
  }
  IntMatrix km = kin.empty() ? IntMatrix(lambda.size(), 0) : columns(kin, lambda.size());
  SnfDecomposition s = snf(km);
  IntMatrix uinv = unimodular_inverse(s.U);
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    IntVector lift = lm.apply(uinv.column(j));
    GaussianRational value = evaluate(phi, lift);
    if (j >= s.rank) {
      q.free_generators.push_back(std::move(lift));
      q.free_values.push_back(value);
    } else if (s.D(j, j) != 1) {
      q.torsion.push_back(s.D(j, j));
      q.torsion_generators.push_back(std::move(lift));
      q.torsion_values.push_back(value);
    }
  }
  return q;
}

GaussianRational cocycle_period(const LogCY3Pair& p, const IntVector& l, bool flip_orientation) {
  const DualComplex& cx = p.complex();
  const auto& rays = p.toric().fan().rays;
  const std::size_t ne = cx.edges().size();

  // Transition h_e = F_tail / F_head on each edge, F = prod (z - q)^a in the edge chart.
  std::vector<GaussianRational> at_zero(ne), at_infinity(ne, GaussianRational(1));
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& ed = cx.edges()[e];
    std::vector<std::pair<GaussianRational, BigInt>> side[2];
    int ends[2] = {ed.tail, ed.head};
    for (int s = 0; s < 2; ++s) {
      const auto& comp = p.component(ends[s]);
      std::size_t pos = comp.base().position_of(ends[1 - s]);
      CycleDivisor d = restrict_to_cycle(comp, p.block(l, ends[s]));
      // Back to the edge chart: the tail sees 1/z.
      for (const auto& [q, a] : d.points[pos]) side[s].emplace_back(s == 0 ? q.inverse() : q, a);
    }
    BigInt dt = 0, dh = 0;
    for (const auto& [q, a] : side[0]) dt += a;
    for (const auto& [q, a] : side[1]) dh += a;
    if (dt != dh) throw DomainError("cocycle_period: vector is not in Lambda");
    at_zero[e] = value_at_zero(side[0]) / value_at_zero(side[1]);
  }

  GaussianRational psi(1);
  for (std::size_t t = 0; t < cx.triangles().size(); ++t) {
    Triple tri = cx.triangles()[t];
    if (flip_orientation) std::swap(tri[1], tri[2]);
    GaussianRational alpha(1);
    for (int a = 0; a < 3; ++a) {
      const int x = tri[a], y = tri[(a + 1) % 3], b = tri[(a + 2) % 3];
      const int e = cx.edge_index(x, y);
      const EdgeChart chart = p.toric().edge_chart(e);
      // The triple point of this cone is z = 0 iff the chart character is positive on the third ray.
      const auto& m = chart.character;
      const auto& nb = rays[b];
      const bool zero = m[0] * nb[0] + m[1] * nb[1] + m[2] * nb[2] > 0;
      const GaussianRational& h = zero ? at_zero[e] : at_infinity[e];
      alpha *= cx.edges()[e].tail == x ? h : h.inverse();
    }
    psi *= alpha;
  }
  return psi;
}

}  // namespace logcy
