#include "logcy/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace logcy {

long long det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

namespace {

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long long pair(const LatticePoint& m, const LatticePoint& n) { return m[0] * n[0] + m[1] * n[1] + m[2] * n[2]; }

LatticePoint scaled(const LatticePoint& v, long long k) { return {v[0] * k, v[1] * k, v[2] * k}; }

int sign_of(long long x) { return (x > 0) - (x < 0); }

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::string describe(const LatticePoint& v) {
  std::ostringstream os;
  os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
  return os.str();
}

}  // namespace

Fan3 Fan3::projective_space() {
  Fan3 f;
  f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
  f.cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return f;
}

Fan3 Fan3::p1_cubed() {
  Fan3 f;
  f.rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) f.cones.push_back({x, y, z});
  return f;
}

Diagnostic validate_fan(const Fan3& f) {
  const int n = static_cast<int>(f.rays.size());
  if (n < 4) return Diagnostic::failure("a complete fan in rank 3 needs at least 4 rays");
  for (int i = 0; i < n; ++i) {
    const auto& r = f.rays[i];
    long long g = std::gcd(std::gcd(r[0], r[1]), r[2]);
    if (g == 0) return Diagnostic::failure("zero ray at index " + std::to_string(i));
    if (g != 1) return Diagnostic::failure("non-primitive ray " + describe(r) + " at index " + std::to_string(i));
    for (int j = 0; j < i; ++j)
      if (f.rays[j] == r) return Diagnostic::failure("duplicate ray " + describe(r));
  }
  if (f.cones.empty()) return Diagnostic::failure("no cones");

  std::set<Triple> seen;
  std::map<EdgeKey, std::vector<int>> walls;
  std::vector<bool> used(n, false);
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    const auto& t = f.cones[c];
    for (int x : t)
      if (x < 0 || x >= n) return Diagnostic::failure("cone " + std::to_string(c) + " has ray index out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      return Diagnostic::failure("cone " + std::to_string(c) + " repeats a ray");
    if (!seen.insert(sorted(t)).second) return Diagnostic::failure("duplicate cone " + std::to_string(c));
    long long d = det3(f.rays[t[0]], f.rays[t[1]], f.rays[t[2]]);
    if (d != 1 && d != -1)
      return Diagnostic::failure("cone " + std::to_string(c) + " is not smooth (|det| = " +
                                 std::to_string(d < 0 ? -d : d) + ")");
    for (int a = 0; a < 3; ++a) {
      used[t[a]] = true;
      walls[edge_key(t[a], t[(a + 1) % 3])].push_back(static_cast<int>(c));
    }
  }
  for (int i = 0; i < n; ++i)
    if (!used[i]) return Diagnostic::failure("ray " + std::to_string(i) + " lies in no cone");

  for (const auto& [key, cs] : walls) {
    std::string name = "{" + std::to_string(key.first) + ", " + std::to_string(key.second) + "}";
    if (cs.size() == 1) return Diagnostic::failure("wall with one incident cone: " + name);
    if (cs.size() > 2) return Diagnostic::failure("wall shared by more than two cones: " + name);
    auto third = [&](int c) {
      for (int x : f.cones[c])
        if (x != key.first && x != key.second) return x;
      return -1;
    };
    const auto& ni = f.rays[key.first];
    const auto& nj = f.rays[key.second];
    long long s1 = det3(ni, nj, f.rays[third(cs[0])]);
    long long s2 = det3(ni, nj, f.rays[third(cs[1])]);
    if (sign_of(s1) == sign_of(s2)) return Diagnostic::failure("cones on the same side of wall " + name);
  }

  int euler = n - static_cast<int>(walls.size()) + static_cast<int>(f.cones.size());
  if (euler != 2) return Diagnostic::failure("dual complex has Euler characteristic " + std::to_string(euler));

  // Vertex links must be single cycles.
  for (int v = 0; v < n; ++v) {
    std::map<int, std::vector<int>> adj;
    for (const auto& t : f.cones) {
      if (std::find(t.begin(), t.end(), v) == t.end()) continue;
      std::vector<int> other;
      for (int x : t)
        if (x != v) other.push_back(x);
      adj[other[0]].push_back(other[1]);
      adj[other[1]].push_back(other[0]);
    }
    for (const auto& [w, nb] : adj)
      if (nb.size() != 2) return Diagnostic::failure("link of ray " + std::to_string(v) + " is not a cycle");
    int start = adj.begin()->first, prev = -1, cur = start;
    std::size_t steps = 0;
    do {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != start && steps <= adj.size());
    if (steps != adj.size()) return Diagnostic::failure("link of ray " + std::to_string(v) + " is not a cycle");
  }

  const auto& o = f.orientation;
  if (o.reference_cone < 0 || o.reference_cone >= static_cast<int>(f.cones.size()))
    return Diagnostic::failure("orientation refers to a missing cone");
  if (o.sign != 1 && o.sign != -1) return Diagnostic::failure("orientation sign must be +1 or -1");
  return Diagnostic::success();
}

DualComplex::DualComplex(const Fan3& f, const std::vector<Edge>& edge_orientations) {
  if (auto d = validate_fan(f); !d) throw DomainError("invalid fan: " + d.message);
  vertex_count_ = static_cast<int>(f.rays.size());

  const auto& ref = f.cones[f.orientation.reference_cone];
  int global = f.orientation.sign * sign_of(det3(f.rays[ref[0]], f.rays[ref[1]], f.rays[ref[2]]));
  for (const auto& t : f.cones) {
    if (global * det3(f.rays[t[0]], f.rays[t[1]], f.rays[t[2]]) > 0) triangles_.push_back(t);
    else triangles_.push_back({t[0], t[2], t[1]});
  }

  std::set<EdgeKey> keys;
  for (const auto& t : triangles_)
    for (int a = 0; a < 3; ++a) keys.insert(edge_key(t[a], t[(a + 1) % 3]));
  for (const auto& k : keys) {
    edge_lookup_[k] = static_cast<int>(edges_.size());
    edges_.push_back({k.first, k.second});
  }
  std::set<EdgeKey> reoriented;
  for (const auto& e : edge_orientations) {
    auto it = edge_lookup_.find(edge_key(e.tail, e.head));
    if (it == edge_lookup_.end())
      throw DomainError("edge orientation given for non-edge (" + std::to_string(e.tail) + ", " +
                        std::to_string(e.head) + ")");
    if (!reoriented.insert(it->first).second) throw DomainError("edge oriented twice");
    edges_[it->second] = e;
  }

  left_.assign(edges_.size(), -1);
  right_.assign(edges_.size(), -1);
  for (std::size_t ti = 0; ti < triangles_.size(); ++ti) {
    const auto& t = triangles_[ti];
    for (int a = 0; a < 3; ++a) {
      int from = t[a], to = t[(a + 1) % 3];
      int e = edge_lookup_.at(edge_key(from, to));
      (edges_[e].tail == from ? left_ : right_)[e] = static_cast<int>(ti);
    }
  }

  links_.resize(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) {
    std::map<int, int> next;
    for (const auto& t : triangles_)
      for (int a = 0; a < 3; ++a)
        if (t[a] == v) next[t[(a + 1) % 3]] = t[(a + 2) % 3];
    int start = next.begin()->first, cur = start;
    do {
      links_[v].push_back(cur);
      cur = next.at(cur);
    } while (cur != start);
  }
}

std::optional<int> DualComplex::find_edge(int a, int b) const {
  auto it = edge_lookup_.find(edge_key(a, b));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

int DualComplex::edge_index(int a, int b) const {
  auto e = find_edge(a, b);
  if (!e) throw DomainError("no edge between rays " + std::to_string(a) + " and " + std::to_string(b));
  return *e;
}

std::vector<int> DualComplex::link_edges(int v) const {
  std::vector<int> out;
  for (int w : links_[v]) out.push_back(edge_index(v, w));
  return out;
}

int DualComplex::orientation_sign(int edge, int v) const {
  const Edge& e = edges_[edge];
  if (e.tail == v) return 1;
  if (e.head == v) return -1;
  throw DomainError("vertex " + std::to_string(v) + " is not on edge " + std::to_string(edge));
}

long long Fan2::intersection(std::size_t i, std::size_t j) const {
  if (i == j) return self_intersections[i];
  std::size_t k = size();
  if ((i + 1) % k == j || (j + 1) % k == i) return 1;
  return 0;
}

std::size_t Fan2::position_of(int w) const {
  auto it = std::find(neighbours.begin(), neighbours.end(), w);
  if (it == neighbours.end())
    throw DomainError("ray " + std::to_string(w) + " is not adjacent to " + std::to_string(vertex));
  return static_cast<std::size_t>(it - neighbours.begin());
}

GaussianRational EdgeChart::view_from(int u, const GaussianRational& z) const {
  if (u == oriented.head) return z;
  if (u == oriented.tail) return z.inverse();
  throw DomainError("component " + std::to_string(u) + " does not contain edge " + std::to_string(edge));
}

ToricVariety::ToricVariety(Fan3 f, const std::vector<Edge>& edge_orientations)
    : fan_(std::move(f)), complex_(fan_, edge_orientations) {
  const int n = ray_count();
  const auto& ref = fan_.cones.front();
  for (int u = 0; u < n; ++u)
    if (std::find(ref.begin(), ref.end(), u) == ref.end()) basis_rays_.push_back(u);

  for (std::size_t e = 0; e < complex_.edges().size(); ++e) {
    const Edge& ed = complex_.edges()[e];
    int i = ed.tail, j = ed.head;
    auto third = [&](int tri) {
      for (int x : complex_.triangles()[tri])
        if (x != i && x != j) return x;
      return -1;
    };
    int k = third(complex_.left_triangle(static_cast<int>(e)));
    int l = third(complex_.right_triangle(static_cast<int>(e)));
    const auto &ni = fan_.rays[i], &nj = fan_.rays[j], &nk = fan_.rays[k], &nl = fan_.rays[l];
    long long d = det3(ni, nj, nk);
    // n_l = x n_i + y n_j + z n_k by Cramer's rule; smoothness forces z = -1.
    long long x = det3(nl, nj, nk) * d, y = det3(ni, nl, nk) * d, z = det3(ni, nj, nl) * d;
    if (z != -1) throw DomainError("wall relation failed: fan is not smooth complete");
    std::pair<long long, long long> coeff{-x, -y};
    if (i > j) std::swap(coeff.first, coeff.second);
    walls_[edge_key(i, j)] = coeff;
  }

  dual_vectors_.resize(n);
  for (int v = 0; v < n; ++v) {
    int a = complex_.link(v)[0], b = complex_.link(v)[1];
    long long d = det3(fan_.rays[v], fan_.rays[a], fan_.rays[b]);
    dual_vectors_[v] = scaled(cross(fan_.rays[a], fan_.rays[b]), d);
  }

  cube_.resize(n);
  for (int v = 0; v < n; ++v) {
    long long s = 0;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      long long c = pair(dual_vectors_[v], fan_.rays[u]);
      if (c != 0) s += c * triple(v, v, u);
    }
    cube_[v] = -s;
  }
}

std::pair<long long, long long> ToricVariety::wall_coefficients(int i, int j) const {
  auto it = walls_.find(edge_key(i, j));
  if (it == walls_.end()) throw DomainError("rays " + std::to_string(i) + ", " + std::to_string(j) + " span no wall");
  return i < j ? it->second : std::pair{it->second.second, it->second.first};
}

long long ToricVariety::triple(int i, int j, int k) const {
  Triple t = sorted({i, j, k});
  if (t[0] != t[1] && t[1] != t[2]) {
    for (const auto& c : fan_.cones)
      if (sorted(c) == t) return 1;
    return 0;
  }
  if (t[0] == t[2]) return cube_[t[0]];
  // D_a^2 . D_b = D_a . C_ab
  int a = t[0] == t[1] ? t[0] : t[2];
  int b = t[0] == t[1] ? t[2] : t[0];
  auto it = walls_.find(edge_key(a, b));
  if (it == walls_.end()) return 0;
  return a < b ? it->second.first : it->second.second;
}

BigInt ToricVariety::triple(const IntVector& a, const IntVector& b, const IntVector& c) const {
  const std::size_t n = fan_.rays.size();
  if (a.size() != n || b.size() != n || c.size() != n) throw BasisMismatch("triple: ray-divisor vector of wrong length");
  BigInt s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      BigInt ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(c[k]) == 0) continue;
        long long t = triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
        if (t != 0) s += ab * c[k] * BigInt(static_cast<long>(t));
      }
    }
  }
  return s;
}

LatticePoint ToricVariety::dual_vector(int v) const { return dual_vectors_.at(v); }

IntVector ToricVariety::principal_divisor(const LatticePoint& m) const {
  IntVector d(fan_.rays.size());
  for (std::size_t u = 0; u < fan_.rays.size(); ++u) d[u] = static_cast<long>(pair(m, fan_.rays[u]));
  return d;
}

IntVector ToricVariety::to_ray_divisor(const IntVector& pic) const {
  if (pic.size() != basis_rays_.size()) throw BasisMismatch("toric Pic vector of wrong length");
  IntVector d(fan_.rays.size());
  for (std::size_t b = 0; b < basis_rays_.size(); ++b) d[basis_rays_[b]] = pic[b];
  return d;
}

IntVector ToricVariety::to_pic(const IntVector& ray_divisor) const {
  if (ray_divisor.size() != fan_.rays.size()) throw BasisMismatch("ray-divisor vector of wrong length");
  const auto& ref = reference_cone();
  const LatticePoint &r0 = fan_.rays[ref[0]], &r1 = fan_.rays[ref[1]], &r2 = fan_.rays[ref[2]];
  long long d = det3(r0, r1, r2);
  std::array<LatticePoint, 3> duals = {scaled(cross(r1, r2), d), scaled(cross(r2, r0), d), scaled(cross(r0, r1), d)};
  IntVector out(basis_rays_.size());
  for (std::size_t b = 0; b < basis_rays_.size(); ++b) {
    const auto& nu = fan_.rays[basis_rays_[b]];
    BigInt x = ray_divisor[basis_rays_[b]];
    for (int t = 0; t < 3; ++t) x -= ray_divisor[ref[t]] * BigInt(static_cast<long>(pair(duals[t], nu)));
    out[b] = x;
  }
  return out;
}

Fan2 ToricVariety::star_surface(int v) const {
  Fan2 s;
  s.vertex = v;
  const auto& link = complex_.link(v);
  const auto &nv = fan_.rays[v], &na = fan_.rays[link[0]], &nb = fan_.rays[link[1]];
  long long d = det3(nv, na, nb);
  for (int w : link) {
    const auto& nw = fan_.rays[w];
    s.rays.push_back({det3(nv, nw, nb) * d, det3(nv, na, nw) * d});
    s.neighbours.push_back(w);
  }
  const std::size_t k = s.rays.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = s.rays[(i + k - 1) % k];
    const auto& q = s.rays[(i + 1) % k];
    const auto& u = s.rays[i];
    LatticePoint2 sum{p[0] + q[0], p[1] + q[1]};
    // sum == -self * u
    long long self = u[0] != 0 ? -sum[0] / u[0] : -sum[1] / u[1];
    if (sum[0] != -self * u[0] || sum[1] != -self * u[1])
      throw DomainError("star surface of ray " + std::to_string(v) + " is not smooth");
    s.self_intersections.push_back(self);
  }
  return s;
}

EdgeChart ToricVariety::edge_chart(int edge) const {
  EdgeChart c;
  c.edge = edge;
  c.oriented = complex_.edges().at(edge);
  c.zero_triangle = complex_.right_triangle(edge);
  c.infinity_triangle = complex_.left_triangle(edge);
  int b = -1;
  for (int x : complex_.triangles()[c.zero_triangle])
    if (x != c.oriented.tail && x != c.oriented.head) b = x;
  const auto &nt = fan_.rays[c.oriented.tail], &nh = fan_.rays[c.oriented.head];
  c.character = scaled(cross(nt, nh), det3(nt, nh, fan_.rays[b]));
  return c;
}

Fan3 star_subdivide(const Fan3& f, std::vector<int> target) {
  if (auto d = validate_fan(f); !d) throw DomainError("invalid fan: " + d.message);
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  if (target.size() != 2 && target.size() != 3) throw DomainError("star subdivision needs a wall or a max cone");
  auto contains = [&](const Triple& c) {
    return std::all_of(target.begin(), target.end(),
                       [&](int x) { return std::find(c.begin(), c.end(), x) != c.end(); });
  };
  if (std::none_of(f.cones.begin(), f.cones.end(), contains)) throw DomainError("target is not a cone of the fan");

  Fan3 out;
  out.rays = f.rays;
  LatticePoint r{0, 0, 0};
  for (int x : target)
    for (int a = 0; a < 3; ++a) r[a] += f.rays[x][a];
  const int ri = static_cast<int>(out.rays.size());
  out.rays.push_back(r);
  for (const auto& c : f.cones) {
    if (!contains(c)) {
      out.cones.push_back(c);
      continue;
    }
    for (int x : target) {
      Triple nc = c;
      *std::find(nc.begin(), nc.end(), x) = ri;
      out.cones.push_back(nc);
    }
  }
  const auto& ref = f.cones[f.orientation.reference_cone];
  int global = f.orientation.sign * sign_of(det3(f.rays[ref[0]], f.rays[ref[1]], f.rays[ref[2]]));
  const auto& c0 = out.cones.front();
  out.orientation = {0, global * sign_of(det3(out.rays[c0[0]], out.rays[c0[1]], out.rays[c0[2]]))};
  return out;
}

bool same_fan(const Fan3& a, const Fan3& b) {
  std::set<LatticePoint> ra(a.rays.begin(), a.rays.end()), rb(b.rays.begin(), b.rays.end());
  if (ra != rb) return false;
  auto cone_set = [](const Fan3& f) {
    std::set<std::array<LatticePoint, 3>> s;
    for (const auto& c : f.cones) {
      std::array<LatticePoint, 3> pts{f.rays[c[0]], f.rays[c[1]], f.rays[c[2]]};
      std::sort(pts.begin(), pts.end());
      s.insert(pts);
    }
    return s;
  };
  return cone_set(a) == cone_set(b);
}

namespace {

// phi with phi(src_i) = dst_i for a unimodular source frame.
std::array<LatticePoint, 3> frame_map(const std::array<LatticePoint, 3>& src, const std::array<LatticePoint, 3>& dst) {
  long long d = det3(src[0], src[1], src[2]);
  // Rows of the inverse of the column matrix [src] are the dual vectors.
  std::array<LatticePoint, 3> dual = {scaled(cross(src[1], src[2]), d), scaled(cross(src[2], src[0]), d),
                                      scaled(cross(src[0], src[1]), d)};
  std::array<LatticePoint, 3> m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) m[r][c] += dst[k][r] * dual[k][c];
  return m;
}

LatticePoint map_point(const std::array<LatticePoint, 3>& m, const LatticePoint& v) {
  return {pair(m[0], v), pair(m[1], v), pair(m[2], v)};
}

bool maps_cones(const Fan3& a, const Fan3& b, const std::vector<int>& ray_map) {
  std::set<Triple> cb;
  for (const auto& c : b.cones) cb.insert(sorted(c));
  for (const auto& c : a.cones)
    if (!cb.count(sorted({ray_map[c[0]], ray_map[c[1]], ray_map[c[2]]}))) return false;
  return true;
}

}  // namespace

std::optional<FanIsomorphism> fan_isomorphism_for(const Fan3& a, const Fan3& b, const std::vector<int>& ray_map) {
  if (a.rays.size() != b.rays.size() || a.cones.size() != b.cones.size() || ray_map.size() != a.rays.size())
    return std::nullopt;
  const auto& c = a.cones.front();
  auto m = frame_map({a.rays[c[0]], a.rays[c[1]], a.rays[c[2]]},
                     {b.rays[ray_map[c[0]]], b.rays[ray_map[c[1]]], b.rays[ray_map[c[2]]]});
  if (std::abs(det3(m[0], m[1], m[2])) != 1) return std::nullopt;
  for (std::size_t u = 0; u < a.rays.size(); ++u)
    if (map_point(m, a.rays[u]) != b.rays[ray_map[u]]) return std::nullopt;
  if (!maps_cones(a, b, ray_map)) return std::nullopt;
  return FanIsomorphism{m, ray_map};
}

std::optional<FanIsomorphism> find_fan_isomorphism(const Fan3& a, const Fan3& b) {
  if (a.rays.size() != b.rays.size() || a.cones.size() != b.cones.size()) return std::nullopt;
  const auto& c = a.cones.front();
  std::array<LatticePoint, 3> src{a.rays[c[0]], a.rays[c[1]], a.rays[c[2]]};
  std::map<LatticePoint, int> lookup;
  for (std::size_t u = 0; u < b.rays.size(); ++u) lookup[b.rays[u]] = static_cast<int>(u);
  for (const auto& cb : b.cones) {
    Triple perm = sorted(cb);
    do {
      auto m = frame_map(src, {b.rays[perm[0]], b.rays[perm[1]], b.rays[perm[2]]});
      std::vector<int> ray_map;
      for (const auto& r : a.rays) {
        auto it = lookup.find(map_point(m, r));
        if (it == lookup.end()) break;
        ray_map.push_back(it->second);
      }
      if (ray_map.size() == a.rays.size() && maps_cones(a, b, ray_map)) return FanIsomorphism{m, ray_map};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace logcy
