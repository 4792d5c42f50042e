#include "logcy/torelli.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace logcy {

namespace {

LogCY3Pair truncated(const LogCY3Pair& p, std::size_t steps) {
  PairData d = p.data();
  d.program.resize(steps);
  return LogCY3Pair(std::move(d));
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

std::string triple_text(const MoriTriple& t) {
  return "(" + t[0].get_str() + ", " + t[1].get_str() + ", " + t[2].get_str() + ")";
}

bool is_permutation_of_range(const std::vector<int>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : v) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Step k of the result is step order[k] of the input; exceptional references follow.
PairData reordered(const PairData& d, const std::vector<int>& order) {
  std::vector<int> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = static_cast<int>(k);
  PairData out = d;
  out.program.clear();
  for (std::size_t k = 0; k < order.size(); ++k) {
    BlowupStep s = d.program[order[k]];
    if (auto* cb = std::get_if<CurveBlowup>(&s)) {
      for (auto& [step, index, c] : cb->cls.exceptional) {
        if (step < 0 || static_cast<std::size_t>(step) >= order.size() || inverse[step] >= static_cast<int>(k))
          throw DomainError("step order puts a curve before an exceptional class it uses");
        step = inverse[step];
      }
    }
    out.program.push_back(std::move(s));
  }
  return out;
}

IntMatrix place_block(IntMatrix sum, const IntMatrix& block, std::size_t row0, std::size_t col0) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) sum(row0 + i, col0 + j) = block(i, j);
  return sum;
}

int cyclic_sign(const Triple& a, const Triple& b) {
  for (int r = 0; r < 3; ++r)
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return 1;
  return -1;
}

void check_correspondence(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr) {
  if (p.toric().ray_count() != q.toric().ray_count())
    return;  // a different number of components is a Distinct outcome, not a malformed input
  if (!is_permutation_of_range(corr.vertex_map, static_cast<std::size_t>(p.toric().ray_count())))
    throw DomainError("correspondence: vertex map is not a bijection of the rays");
  if (!corr.step_map.empty() && p.step_count() == q.step_count() &&
      !is_permutation_of_range(corr.step_map, p.step_count()))
    throw DomainError("correspondence: step map is not a bijection of the steps");
  for (const auto& [key, perm] : corr.exceptional_order) {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        throw DomainError("correspondence: exceptional order for step " + std::to_string(key.first) +
                          " is not a permutation");
  }
}

// q with its steps put in the order of p, and the correspondence adjusted.
std::pair<LogCY3Pair, Correspondence> aligned(const LogCY3Pair& q, const Correspondence& corr) {
  Correspondence c = corr;
  bool identity = true;
  for (std::size_t k = 0; k < corr.step_map.size(); ++k)
    if (corr.step_map[k] != static_cast<int>(k)) identity = false;
  c.step_map.clear();
  if (identity) return {q, c};
  return {LogCY3Pair(reordered(q.data(), corr.step_map)), c};
}

}  // namespace

std::vector<int> mori_types(const MoriTriple& t, bool contracts_to_curve) {
  if (contracts_to_curve) return t[0] == -1 && t[1] == -1 ? std::vector<int>{1} : std::vector<int>{};
  if (t[0] == -1 && t[1] == -2 && t[2] == 4) return {2};
  if (t[0] == -1 && t[1] == -1 && t[2] == 2) return {3, 4};
  if (t[0] == -2 && t[1] == -1 && t[2] == 1) return {5};
  return {};
}

MoriClass classify_contraction(const LogCY3Pair& p, std::size_t k) {
  if (k >= p.step_count()) throw DomainError("classify_contraction: no step " + std::to_string(k));
  LogCY3Pair y = truncated(p, k + 1);
  const std::size_t n = y.rank();
  const PicVector e = y.exceptional(k);
  const PicVector kk = y.canonical();
  auto functional = [&](const PicVector& a, const PicVector& b) {
    IntVector f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = y.cubic(y.unit(i), a, b);
    return f;
  };

  // X -> X.E.pi*A is nonzero iff E maps onto a curve; then it is a multiple of X -> X.l.
  MoriClass out;
  IntVector f;
  for (std::size_t i = 0; i + 1 < n && !out.contracts_to_curve; ++i) {
    f = functional(e, y.unit(i));
    out.contracts_to_curve = !is_zero_vector(f);
  }
  if (!out.contracts_to_curve) f = functional(e, e);
  BigInt g = gcd_of(f);
  if (sgn(g) == 0) throw Error("step " + std::to_string(k) + ": exceptional class has no extremal curve");
  for (auto& x : f) x /= g;
  BigInt kl = dot(kk.coords(), f);
  if (sgn(kl) == 0) throw Error("step " + std::to_string(k) + ": contraction is not K-negative");
  if (sgn(kl) > 0)
    for (auto& x : f) x = -x;

  out.triple = {dot(e.coords(), f), BigInt(-abs(kl)), y.cubic(e, kk, kk)};
  auto types = mori_types(out.triple, out.contracts_to_curve);
  if (types.empty()) throw Error("step " + std::to_string(k) + ": triple " + triple_text(out.triple) + " is not in Mori's table");
  if (types.size() > 1) throw Error("step " + std::to_string(k) + ": triple " + triple_text(out.triple) + " is ambiguous");
  out.type = types.front();
  return out;
}

ToricIntersectionData intersection_data(const ToricVariety& t) {
  ToricIntersectionData d;
  d.vertex_count = t.ray_count();
  const int n = d.vertex_count;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (t.triple(i, j, k) == 1) d.cones.push_back({i, j, k});
  for (const auto& c : d.cones)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) d.self_intersection[{c[a], c[b]}] = t.triple(c[b], c[b], c[a]);
  return d;
}

Fan3 reconstruct_fan(const ToricIntersectionData& data) {
  if (data.cones.empty()) throw DomainError("reconstruct_fan: no cones");
  std::map<EdgeKey, std::vector<int>> walls;
  for (std::size_t c = 0; c < data.cones.size(); ++c)
    for (int a = 0; a < 3; ++a) walls[edge_key(data.cones[c][a], data.cones[c][(a + 1) % 3])].push_back(static_cast<int>(c));
  for (const auto& [w, cs] : walls)
    if (cs.size() != 2)
      throw DomainError("reconstruct_fan: wall {" + std::to_string(w.first) + ", " + std::to_string(w.second) +
                        "} lies in " + std::to_string(cs.size()) + " cones");
  auto self = [&](int x, int y) {
    auto it = data.self_intersection.find({x, y});
    if (it == data.self_intersection.end())
      throw DomainError("reconstruct_fan: missing self-intersection for (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
    return it->second;
  };

  std::vector<std::optional<LatticePoint>> rays(data.vertex_count);
  const Triple& seed = data.cones.front();
  rays.at(seed[0]) = LatticePoint{1, 0, 0};
  rays.at(seed[1]) = LatticePoint{0, 1, 0};
  rays.at(seed[2]) = LatticePoint{0, 0, 1};
  std::vector<bool> visited(data.cones.size(), false);
  std::queue<int> todo;
  todo.push(0);
  visited[0] = true;
  while (!todo.empty()) {
    const Triple c = data.cones[todo.front()];
    const int ci = todo.front();
    todo.pop();
    for (int a = 0; a < 3; ++a) {
      const int x = c[a], y = c[(a + 1) % 3], z = c[(a + 2) % 3];
      const auto& cs = walls[edge_key(x, y)];
      const int other = cs[0] == ci ? cs[1] : cs[0];
      int d = -1;
      for (int r : data.cones[other])
        if (r != x && r != y) d = r;
      // n_z + n_d + (C.D_x) n_x + (C.D_y) n_y = 0, with C.D_x = (C^2) on D_y.
      const long long cx = self(y, x), cy = self(x, y);
      const LatticePoint &nx = *rays[x], &ny = *rays[y], &nz = *rays[z];
      LatticePoint nd;
      for (int i = 0; i < 3; ++i) nd[i] = -nz[i] - cx * nx[i] - cy * ny[i];
      if (!rays[d]) {
        rays[d] = nd;
      } else if (*rays[d] != nd) {
        throw DomainError("reconstruct_fan: wall relation inconsistent across {" + std::to_string(x) + ", " +
                          std::to_string(y) + "}");
      }
      if (!visited[other]) {
        visited[other] = true;
        todo.push(other);
      }
    }
  }
  Fan3 f;
  for (std::size_t v = 0; v < rays.size(); ++v) {
    if (!rays[v]) throw DomainError("reconstruct_fan: ray " + std::to_string(v) + " lies in no cone");
    f.rays.push_back(*rays[v]);
  }
  f.cones = data.cones;
  if (auto d = validate_fan(f); !d) throw DomainError("reconstruct_fan: " + d.message);
  if (!(intersection_data(ToricVariety(f)) == data))
    throw DomainError("reconstruct_fan: reconstructed fan does not reproduce the intersection data");
  return f;
}

BigRational complexity(const LogCY3Pair& p, const std::vector<std::pair<BigRational, PicVector>>& decomposition) {
  BigRational d = 0;
  std::vector<IntVector> cols;
  for (const auto& [a, cls] : decomposition) {
    if (sgn(a) < 0) throw DomainError("complexity: negative weight");
    cls.require(PicTag::threefold(), p.rank());
    d += a;
    cols.push_back(cls.coords());
  }
  std::size_t r = cols.empty() ? 0 : rank(IntMatrix::from_columns(cols, p.rank()));
  return BigRational(3 + static_cast<long>(r)) - d;
}

std::vector<std::pair<BigRational, PicVector>> boundary_decomposition(const LogCY3Pair& p) {
  std::vector<std::pair<BigRational, PicVector>> out;
  for (int v = 0; v < p.toric().ray_count(); ++v) out.emplace_back(BigRational(1), p.boundary_class(v));
  return out;
}

Correspondence Correspondence::identity(const LogCY3Pair& p) {
  Correspondence c;
  c.vertex_map.resize(static_cast<std::size_t>(p.toric().ray_count()));
  std::iota(c.vertex_map.begin(), c.vertex_map.end(), 0);
  return c;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Isomorphic: return "Isomorphic";
    case VerdictKind::Distinct: return "Distinct";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Builds the maps; returns a non-empty message when the combinatorics do not match.
std::string build_maps(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr, InducedMaps& out) {
  const auto& sigma = corr.vertex_map;
  auto step_of = [&](int k) { return corr.step_map.empty() ? k : corr.step_map[k]; };

  // Orientation behaviour of sigma on triangles.
  std::map<Triple, Triple> q_triangles;
  for (const auto& t : q.complex().triangles()) {
    Triple s = t;
    std::sort(s.begin(), s.end());
    q_triangles[s] = t;
  }
  std::optional<int> eps;
  for (const auto& t : p.complex().triangles()) {
    Triple img{sigma[t[0]], sigma[t[1]], sigma[t[2]]};
    Triple key = img;
    std::sort(key.begin(), key.end());
    auto it = q_triangles.find(key);
    if (it == q_triangles.end()) return "vertex map does not carry triangles to triangles";
    int s = cyclic_sign(img, it->second);
    if (eps && *eps != s) return "vertex map is not orientation-coherent on the dual complex";
    eps = s;
  }
  out.orientation = eps.value_or(1);
  for (const auto& e : p.complex().edges())
    if (!q.complex().find_edge(sigma[e.tail], sigma[e.head])) return "vertex map does not carry edges to edges";

  if (corr.mu) {
    if (corr.mu->rows() != q.rank() || corr.mu->cols() != p.rank()) throw DomainError("correspondence: mu has wrong shape");
    out.mu = *corr.mu;
  } else {
    out.mu = IntMatrix(q.rank(), p.rank());
    const auto& basis = p.toric().pic_basis_rays();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      IntVector ray(static_cast<std::size_t>(q.toric().ray_count()));
      ray[sigma[basis[b]]] = 1;
      IntVector col = q.pullback(ray).coords();
      for (std::size_t i = 0; i < col.size(); ++i) out.mu(i, b) = col[i];
    }
    for (std::size_t k = 0; k < p.step_count(); ++k) out.mu(q.toric_rank() + step_of(static_cast<int>(k)), p.toric_rank() + k) = 1;
  }

  out.mu_sum = IntMatrix(q.sum_rank(), p.sum_rank());
  for (const auto& comp : p.components()) {
    const int v = comp.vertex();
    const auto& target = q.component(sigma[v]);
    IntMatrix m(target.rank(), comp.rank());
    if (auto it = corr.mu_components.find(v); it != corr.mu_components.end()) {
      if (it->second.rows() != target.rank() || it->second.cols() != comp.rank())
        throw DomainError("correspondence: mu_" + std::to_string(v) + " has wrong shape");
      m = it->second;
    } else {
      if (comp.rank() != target.rank()) return "Pic(D_" + std::to_string(v) + ") and its partner have different ranks";
      for (std::size_t j = 0; j < comp.toric_rank(); ++j) {
        IntVector link(target.base().size());
        link[target.base().position_of(sigma[comp.base().neighbours[j + 2]])] = 1;
        IntVector col = target.from_toric(link).coords();
        for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
      }
      for (std::size_t k = 0; k < comp.exceptionals().size(); ++k) {
        const auto& x = comp.exceptionals()[k];
        int index = x.index;
        if (auto it2 = corr.exceptional_order.find({x.step, v}); it2 != corr.exceptional_order.end()) {
          if (static_cast<std::size_t>(x.index) >= it2->second.size())
            throw DomainError("correspondence: exceptional order too short");
          index = it2->second[x.index];
        }
        int row = target.find_exceptional(step_of(x.step), index);
        if (row < 0)
          return "exceptional curve (" + std::to_string(x.step) + ", " + std::to_string(x.index) + ") on D_" +
                 std::to_string(v) + " has no partner";
        m(static_cast<std::size_t>(row), comp.toric_rank() + k) = 1;
      }
    }
    out.mu_sum = place_block(out.mu_sum, m, q.offset(sigma[v]), p.offset(v));
    out.mu_components.push_back(std::move(m));
  }
  return {};
}

PicVector image(const IntMatrix& m, const PicVector& x, PicTag tag) { return PicVector(m.apply(x.coords()), tag); }

Verdict decide_aligned(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr) {
  Verdict v;
  auto distinct = [&](std::string why) {
    v.kind = VerdictKind::Distinct;
    v.reason = std::move(why);
    return v;
  };
  const auto& sigma = corr.vertex_map;

  // (i) dual complexes
  if (p.toric().ray_count() != q.toric().ray_count()) return distinct("boundaries have different numbers of components");
  if (p.complex().edges().size() != q.complex().edges().size() ||
      p.complex().triangles().size() != q.complex().triangles().size())
    return distinct("dual complexes have different sizes");
  if (p.step_count() != q.step_count()) return distinct("Picard ranks differ");
  InducedMaps maps;
  if (auto why = build_maps(p, q, corr, maps); !why.empty()) return distinct(why);
  v.orientation = maps.orientation;
  v.transcript.push_back(std::string("dual complexes match under the vertex map (orientation ") +
                         (maps.orientation > 0 ? "preserved" : "reversed") + ")");

  // (ii) cubic forms, boundary classes and restrictions
  const std::size_t n = p.rank();
  std::vector<PicVector> mu_basis;
  for (std::size_t i = 0; i < n; ++i) mu_basis.push_back(image(maps.mu, p.unit(i), PicTag::threefold()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        if (p.cubic_form()(i, j, k) != q.cubic(mu_basis[i], mu_basis[j], mu_basis[k]))
          return distinct("cubic forms differ on basis triple (" + std::to_string(i) + ", " + std::to_string(j) +
                          ", " + std::to_string(k) + ")");
  v.transcript.push_back("mu preserves the cubic form");
  for (int x = 0; x < p.toric().ray_count(); ++x)
    if (!(image(maps.mu, p.boundary_class(x), PicTag::threefold()) == q.boundary_class(sigma[x])))
      return distinct("mu(D_" + std::to_string(x) + ") is not D'_" + std::to_string(sigma[x]));
  if (!(image(maps.mu, p.canonical(), PicTag::threefold()) == q.canonical()))
    return distinct("mu does not preserve the canonical class");
  for (const auto& comp : p.components()) {
    const int x = comp.vertex();
    const auto& target = q.component(sigma[x]);
    const IntMatrix& m = maps.mu_components[x];
    for (std::size_t a = 0; a < comp.rank(); ++a)
      for (std::size_t b = a; b < comp.rank(); ++b)
        if (comp.intersect(comp.unit(a), comp.unit(b)) !=
            target.intersect(image(m, comp.unit(a), target.tag()), image(m, comp.unit(b), target.tag())))
          return distinct("mu_" + std::to_string(x) + " is not an isometry");
    for (std::size_t i = 0; i < comp.base().size(); ++i) {
      std::size_t j = target.base().position_of(sigma[comp.base().neighbours[i]]);
      if (!(image(m, comp.boundary_curve(i), target.tag()) == target.boundary_curve(j)))
        return distinct("mu_" + std::to_string(x) + " does not carry boundary curves to boundary curves");
    }
  }
  if (!(maps.mu_sum * p.restriction_matrix() == q.restriction_matrix() * maps.mu))
    return distinct("restriction is not compatible with mu and the mu_v");
  v.transcript.push_back("mu(D_v) = D'_v, mu(K) = K', the mu_v are isometries compatible with restriction");

  // (iii) peel the blowups from the top
  for (std::size_t k = p.step_count(); k-- > 0;) {
    const std::string where = "step " + std::to_string(k);
    MoriClass a, b;
    try {
      a = classify_contraction(p, k);
      b = classify_contraction(q, k);
    } catch (const Error& e) {
      v.kind = VerdictKind::Inconclusive;
      v.reason = e.what();
      return v;
    }
    if (a.type != b.type || a.triple != b.triple)
      return distinct(where + ": contraction types differ (" + std::to_string(a.type) + " vs " + std::to_string(b.type) + ")");
    const StepInfo &s = p.steps()[k], &t = q.steps()[k];
    if (!(image(maps.mu, p.exceptional(k), PicTag::threefold()) == q.exceptional(k)))
      return distinct(where + ": mu(E) is not E'");
    if (s.is_curve != t.is_curve) return distinct(where + ": centers of different dimension");
    if (!s.is_curve) {
      const Edge& e = p.complex().edges()[s.edge];
      const Edge& f = q.complex().edges()[t.edge];
      if (edge_key(sigma[e.tail], sigma[e.head]) != edge_key(f.tail, f.head))
        return distinct(where + ": blown-up points lie on non-corresponding edges");
    } else {
      if (sigma[s.component] != t.component) return distinct(where + ": curves lie in non-corresponding components");
      const auto& comp = p.component(s.component);
      const auto& target = q.component(t.component);
      for (std::size_t i = 0; i < comp.base().size(); ++i) {
        std::size_t j = target.base().position_of(sigma[comp.base().neighbours[i]]);
        if (s.point_counts[i] != t.point_counts[j]) return distinct(where + ": combinatorial types differ");
      }
      PicVector c(s.curve_class, comp.tag());
      if (!(image(maps.mu_components[s.component], c, target.tag()) == PicVector(t.curve_class, target.tag())))
        return distinct(where + ": mu_v([C]) is not [C']");
    }
    v.transcript.push_back(where + ": type " + std::to_string(a.type) + " " + triple_text(a.triple) + " on both sides");
  }

  // (iv) toric models
  try {
    Fan3 fp = reconstruct_fan(intersection_data(p.toric()));
    Fan3 fq = reconstruct_fan(intersection_data(q.toric()));
    if (!find_fan_isomorphism(fp, fq)) return distinct("toric models are not isomorphic");
  } catch (const DomainError& e) {
    v.kind = VerdictKind::Inconclusive;
    v.reason = std::string("toric model reconstruction failed: ") + e.what();
    return v;
  }
  v.fan_map = fan_isomorphism_for(p.toric().fan(), q.toric().fan(), sigma);
  if (!v.fan_map) return distinct("vertex map is not induced by an isomorphism of the toric models");
  v.transcript.push_back("toric models reconstructed and identified");

  // (v) periods on Lambda
  PeriodCharacter phi = marked_period(p, marker_marking(p.complex()));
  PeriodCharacter phi_q = marked_period(q, marker_marking(q.complex()));
  IntMatrix lq = edge_matching_map(q);
  for (const auto& l : lambda_lattice(p)) {
    IntVector ml = maps.mu_sum.apply(l);
    if (!is_zero_vector(lq.apply(ml))) return distinct("mu_v do not carry Lambda into Lambda'");
    GaussianRational a = evaluate(phi, l);
    GaussianRational b = evaluate(phi_q, ml);
    if (maps.orientation < 0) b = b.inverse();
    if (!(a == b)) {
      v.witness = l;
      v.witness_image = ml;
      v.value = a;
      v.value_prime = b;
      return distinct("period points differ on a Lambda vector (distinct under this correspondence)");
    }
  }
  v.transcript.push_back("period points agree on Lambda");
  v.kind = VerdictKind::Isomorphic;
  v.reason = "all checks passed";
  return v;
}

}  // namespace

InducedMaps induced_maps(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr) {
  check_correspondence(p, q, corr);
  if (p.toric().ray_count() != q.toric().ray_count()) throw DomainError("pairs have different numbers of components");
  InducedMaps m;
  if (auto why = build_maps(p, q, corr, m); !why.empty()) throw DomainError(why);
  return m;
}

Verdict decide_isomorphism(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr) {
  check_correspondence(p, q, corr);
  if (p.step_count() != q.step_count()) {
    Verdict v;
    v.kind = VerdictKind::Distinct;
    v.reason = "Picard ranks differ";
    return v;
  }
  try {
    auto [q2, c2] = aligned(q, corr);
    return decide_aligned(p, q2, c2);
  } catch (const DomainError& e) {
    Verdict v;
    v.reason = e.what();
    return v;
  }
}

Verdict decide_isomorphism(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr, std::size_t bound) {
  check_correspondence(p, q, corr);
  // Groups of exceptional curves that may be reordered: one per (curve step, touched component).
  std::vector<std::pair<std::pair<int, int>, int>> groups;
  for (std::size_t k = 0; k < p.step_count(); ++k) {
    const auto& s = p.steps()[k];
    if (!s.is_curve) continue;
    const auto& comp = p.component(s.component);
    for (std::size_t i = 0; i < s.point_counts.size(); ++i)
      if (s.point_counts[i] > 1) groups.push_back({{static_cast<int>(k), comp.base().neighbours[i]}, s.point_counts[i]});
  }
  BigInt total = 1;
  for (const auto& g : groups) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(g.second));
    total *= f;
  }
  if (total > BigInt(static_cast<unsigned long>(bound))) {
    Verdict v;
    v.reason = "search over " + total.get_str() + " exceptional orderings exceeds the bound " + std::to_string(bound);
    return v;
  }
  std::vector<std::vector<int>> perms;
  for (const auto& g : groups) {
    std::vector<int> id(static_cast<std::size_t>(g.second));
    std::iota(id.begin(), id.end(), 0);
    perms.push_back(id);
  }
  std::optional<Verdict> first;
  std::size_t tried = 0;
  while (true) {
    Correspondence c = corr;
    for (std::size_t g = 0; g < groups.size(); ++g) c.exceptional_order[groups[g].first] = perms[g];
    Verdict v = decide_isomorphism(p, q, c);
    ++tried;
    if (v.kind == VerdictKind::Isomorphic) {
      v.transcript.push_back("found after trying " + std::to_string(tried) + " exceptional orderings");
      return v;
    }
    if (!first) first = v;
    std::size_t g = 0;
    for (; g < perms.size(); ++g)
      if (std::next_permutation(perms[g].begin(), perms[g].end())) break;
    if (g == perms.size()) break;
  }
  first->reason += " (no isomorphism among " + std::to_string(tried) + " exceptional orderings)";
  return *first;
}

bool recheck_witness(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr, const Verdict& v) {
  if (v.kind != VerdictKind::Distinct || !v.witness || !v.witness_image) return false;
  auto [q2, c2] = aligned(q, corr);
  InducedMaps maps = induced_maps(p, q2, c2);
  if (!(maps.mu_sum.apply(*v.witness) == *v.witness_image)) return false;
  if (!is_zero_vector(edge_matching_map(p).apply(*v.witness))) return false;
  GaussianRational a = cocycle_period(p, *v.witness);
  GaussianRational b = cocycle_period(q2, *v.witness_image);
  if (maps.orientation < 0) b = b.inverse();
  return !(a == b);
}

TransporterResult marking_transporter(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr,
                                      const Marking& m, const Marking& m_prime) {
  check_correspondence(p, q, corr);
  auto [q2, c2] = aligned(q, corr);
  InducedMaps maps = induced_maps(p, q2, c2);
  PeriodCharacter phi = marked_period(p, m);
  PeriodCharacter phi_q = marked_period(q2, m_prime);
  IntMatrix a = edge_matching_map(p).transpose();
  std::vector<GaussianRational> targets;
  for (std::size_t j = 0; j < p.sum_rank(); ++j) {
    GaussianRational t = evaluate(phi_q, maps.mu_sum.column(j));
    if (maps.orientation < 0) t = t.inverse();
    targets.push_back(t / phi.values[j]);
  }
  TorusSolution s = solve_over_torus(a, targets);
  TransporterResult r;
  r.solvable = s.solvability.solvable;
  r.relation = s.solvability.violated_relation;
  r.lambdas = s.values;
  return r;
}

PairData torus_translate(const LogCY3Pair& p, const std::array<GaussianRational, 3>& t) {
  auto scale = [&](const Edge& written, const GaussianRational& z) {
    auto [idx, reversed] = p.resolve_edge(written);
    const auto& m = p.toric().edge_chart(idx).character;
    GaussianRational f = pow(t[0], static_cast<long>(m[0])) * pow(t[1], static_cast<long>(m[1])) *
                         pow(t[2], static_cast<long>(m[2]));
    return reversed ? z / f : z * f;
  };
  PairData d = p.data();
  for (auto& step : d.program) {
    if (auto* pb = std::get_if<PointBlowup>(&step)) {
      pb->coord = scale(pb->edge, pb->coord);
    } else {
      auto& cb = std::get<CurveBlowup>(step);
      for (auto& cp : cb.points)
        for (auto& z : cp.coords) z = scale({cp.neighbour, cb.component}, z);
    }
  }
  for (auto& [edge, z] : d.markings) z = scale(edge, z);
  return d;
}

}  // namespace logcy
