#include "logcy/pair.hpp"

#include <algorithm>
#include <map>

namespace logcy {

namespace {

IntVector padded(IntVector v, std::size_t n) {
  v.resize(n);
  return v;
}

std::string edge_name(int a, int b) { return "{" + std::to_string(a) + ", " + std::to_string(b) + "}"; }

}  // namespace

LogCY3Pair::LogCY3Pair(PairData data) : data_(std::move(data)), toric_(data_.fan, data_.edge_orientations) {
  replay_components();
  build_restrictions();
  build_cubic();
}

std::pair<int, bool> LogCY3Pair::resolve_edge(const Edge& e) const {
  auto idx = complex().find_edge(e.tail, e.head);
  if (!idx) throw DomainError("rays " + edge_name(e.tail, e.head) + " do not span a 1-stratum");
  return {*idx, complex().edges()[*idx].tail != e.tail};
}

GaussianRational LogCY3Pair::to_edge_chart(const Edge& written, const GaussianRational& z) const {
  if (z.is_zero()) throw DomainError("coordinate 0 on edge " + edge_name(written.tail, written.head) + " is a 0-stratum");
  return resolve_edge(written).second ? EdgeChart::reversed(z) : z;
}

void LogCY3Pair::replay_components() {
  const int n = toric_.ray_count();
  for (int v = 0; v < n; ++v) {
    std::vector<EdgeChart> charts;
    auto edges = complex().link_edges(v);
    for (int e : edges) charts.push_back(toric_.edge_chart(e));
    components_.emplace_back(toric_.star_surface(v), edges, std::move(charts));
  }

  std::map<int, std::vector<GaussianRational>> used;  // per edge, declared chart
  auto claim = [&](int edge, const GaussianRational& q, const std::string& where) {
    for (const auto& x : used[edge])
      if (x == q) throw DomainError(where + ": coordinate " + q.to_string() + " already used on this edge");
    if (q == marker_point()) warnings_.push_back(where + ": center passes through the marker point -1");
    used[edge].push_back(q);
  };

  for (std::size_t k = 0; k < data_.program.size(); ++k) {
    const int step = static_cast<int>(k);
    const std::string where = "step " + std::to_string(k);
    StepInfo info;
    if (const auto* pb = std::get_if<PointBlowup>(&data_.program[k])) {
      auto [idx, rev] = resolve_edge(pb->edge);
      GaussianRational q = to_edge_chart(pb->edge, pb->coord);
      claim(idx, q, where);
      const Edge& e = complex().edges()[idx];
      components_[e.tail].add_exceptional(components_[e.tail].base().position_of(e.head), q, step, 0);
      components_[e.head].add_exceptional(components_[e.head].base().position_of(e.tail), q, step, 0);
      info.edge = idx;
      info.touched = {e.tail, e.head};
    } else {
      const auto& cb = std::get<CurveBlowup>(data_.program[k]);
      const int v = cb.component;
      if (v < 0 || v >= n) throw DomainError(where + ": component " + std::to_string(v) + " out of range");
      LooijengaComponent& comp = components_[v];
      const std::size_t len = comp.base().size();

      IntVector link(len);
      for (const auto& [w, c] : cb.cls.boundary) link[comp.base().position_of(w)] += c;
      PicVector cls = comp.from_toric(link);
      for (const auto& [s, i, c] : cb.cls.exceptional) {
        int col = comp.find_exceptional(s, i);
        if (col < 0)
          throw DomainError(where + ": class refers to exceptional (" + std::to_string(s) + ", " +
                            std::to_string(i) + ") which does not lie on D_" + std::to_string(v));
        cls[col] += c;
      }
      if (auto d = adjunction_check(comp, cls); !d) throw DomainError(where + ": " + d.message);

      std::vector<std::vector<GaussianRational>> pts(len);
      std::vector<bool> listed(len, false);
      for (const auto& cp : cb.points) {
        std::size_t pos = comp.base().position_of(cp.neighbour);
        if (listed[pos]) throw DomainError(where + ": edge " + edge_name(v, cp.neighbour) + " listed twice");
        listed[pos] = true;
        for (const auto& z : cp.coords) pts[pos].push_back(to_edge_chart({cp.neighbour, v}, z));
      }
      GaussianRational actual(1);
      for (std::size_t i = 0; i < len; ++i) {
        BigInt deg = comp.intersect(cls, comp.boundary_curve(i));
        if (deg != static_cast<long>(pts[i].size()))
          throw DomainError(where + ": curve meets edge " + edge_name(v, comp.base().neighbours[i]) + " in " +
                            std::to_string(pts[i].size()) + " points, its class predicts " + deg.get_str());
        for (const auto& q : pts[i]) {
          claim(comp.edges()[i], q, where);
          actual *= comp.chart(i).view_from(v, q);
        }
      }
      // The points must be cut out by a section of O(C): compare with the formal restriction.
      CycleDivisor formal = restrict_to_cycle(comp, cls);
      GaussianRational expected(1);
      for (const auto& edge_pts : formal.points) expected *= lambda_factor(edge_pts, GaussianRational(1));
      if (!(actual == expected))
        throw DomainError(where + ": boundary points are not cut out by a curve in the given class (product " +
                          actual.to_string() + ", class requires " + expected.to_string() + ")");

      info.is_curve = true;
      info.component = v;
      info.curve_class = cls.coords();
      for (std::size_t i = 0; i < len; ++i) {
        info.point_counts.push_back(static_cast<int>(pts[i].size()));
        if (pts[i].empty()) continue;
        int w = comp.base().neighbours[i];
        auto& target = components_[w];
        for (std::size_t j = 0; j < pts[i].size(); ++j)
          target.add_exceptional(target.base().position_of(v), pts[i][j], step, static_cast<int>(j));
        info.touched.push_back(w);
      }
    }
    steps_.push_back(std::move(info));
  }
  for (auto& s : steps_)
    if (s.is_curve) s.curve_class = padded(s.curve_class, components_[s.component].rank());
}

void LogCY3Pair::build_restrictions() {
  const std::size_t r = rank();
  offsets_.push_back(0);
  for (const auto& comp : components_) {
    const int v = comp.vertex();
    IntMatrix m(comp.rank(), r);
    auto put = [&](std::size_t col, const IntVector& x) {
      for (std::size_t i = 0; i < x.size(); ++i) m(i, col) = x[i];
    };
    const auto& basis = toric_.pic_basis_rays();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      IntVector ray(static_cast<std::size_t>(toric_.ray_count()));
      ray[basis[b]] = 1;
      if (basis[b] == v) {
        IntVector p = toric_.principal_divisor(toric_.dual_vector(v));
        for (std::size_t u = 0; u < ray.size(); ++u) ray[u] -= p[u];
      }
      IntVector link;
      for (int w : comp.base().neighbours) link.push_back(ray[w]);
      put(b, comp.from_toric(link).coords());
    }
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      const StepInfo& s = steps_[k];
      PicVector col = comp.zero();
      if (s.is_curve && s.component == v) {
        col = PicVector(s.curve_class, comp.tag());
      } else if (std::find(s.touched.begin(), s.touched.end(), v) != s.touched.end()) {
        for (int j = 0;; ++j) {
          int idx = comp.find_exceptional(static_cast<int>(k), j);
          if (idx < 0) break;
          col[idx] += 1;
        }
      }
      put(basis.size() + k, col.coords());
    }
    restriction_.push_back(std::move(m));
    offsets_.push_back(offsets_.back() + comp.rank());
  }
}

void LogCY3Pair::build_cubic() {
  cubic_ = CubicForm::toric(toric_);
  IntVector k = toric_.to_pic(IntVector(static_cast<std::size_t>(toric_.ray_count()), -1));
  for (const auto& s : steps_) {
    const std::size_t n = cubic_.size();
    IntVector a_dot(n);
    BigInt e_cube = 1;
    BigInt kc_weight = 2;
    if (s.is_curve) {
      const auto& comp = components_[s.component];
      const IntMatrix& res = restriction_[s.component];
      PicVector c(s.curve_class, comp.tag());
      BigInt kc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        BigInt ac = comp.intersect(PicVector(res.column(i), comp.tag()), c);
        a_dot[i] = -ac;
        kc += k[i] * ac;
      }
      // E^3 = -deg N_C with deg N_C = -K.C - 2 for a smooth rational curve.
      e_cube = kc + 2;
      kc_weight = 1;
    }
    cubic_ = cubic_.extended(a_dot, e_cube);
    k.push_back(kc_weight);
  }
}

PicVector LogCY3Pair::unit(std::size_t i) const {
  PicVector v = zero();
  v[i] = 1;
  return v;
}

PicVector LogCY3Pair::pullback(const IntVector& ray_divisor) const {
  return PicVector(padded(toric_.to_pic(ray_divisor), rank()), PicTag::threefold());
}

PicVector LogCY3Pair::boundary_class(int v) const {
  IntVector ray(static_cast<std::size_t>(toric_.ray_count()));
  ray.at(v) = 1;
  PicVector d = pullback(ray);
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const StepInfo& s = steps_[k];
    bool contains = s.is_curve ? s.component == v
                               : std::find(s.touched.begin(), s.touched.end(), v) != s.touched.end();
    if (contains) d[toric_rank() + k] -= 1;
  }
  return d;
}

PicVector LogCY3Pair::canonical() const {
  PicVector k = pullback(IntVector(static_cast<std::size_t>(toric_.ray_count()), -1));
  for (std::size_t j = 0; j < steps_.size(); ++j) k[toric_rank() + j] = steps_[j].is_curve ? 1 : 2;
  return k;
}

BigInt LogCY3Pair::cubic(const PicVector& a, const PicVector& b, const PicVector& c) const {
  for (const auto* x : {&a, &b, &c}) x->require(PicTag::threefold(), rank());
  return cubic_.evaluate(a.coords(), b.coords(), c.coords());
}

PicVector LogCY3Pair::restrict(const PicVector& l, int v) const {
  l.require(PicTag::threefold(), rank());
  return PicVector(restriction_.at(v).apply(l.coords()), components_.at(v).tag());
}

IntVector LogCY3Pair::restrict_all(const PicVector& l) const {
  IntVector out;
  for (std::size_t v = 0; v < components_.size(); ++v) {
    auto x = restrict(l, static_cast<int>(v)).coords();
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

IntMatrix LogCY3Pair::restriction_matrix() const {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < rank(); ++i) cols.push_back(restrict_all(unit(i)));
  return IntMatrix::from_columns(cols, sum_rank());
}

PicVector LogCY3Pair::block(const IntVector& sum, int v) const {
  if (sum.size() != sum_rank()) throw BasisMismatch("direct-sum vector of wrong length");
  IntVector x(sum.begin() + static_cast<std::ptrdiff_t>(offset(v)),
              sum.begin() + static_cast<std::ptrdiff_t>(offset(v + 1)));
  return PicVector(std::move(x), components_.at(v).tag());
}

Marking LogCY3Pair::marking() const {
  Marking m = marker_marking(complex());
  for (const auto& [edge, z] : data_.markings) m[resolve_edge(edge).first] = to_edge_chart(edge, z);
  return m;
}

Diagnostic validate_pair(const PairData& data) {
  if (auto d = validate_fan(data.fan); !d) return d;
  try {
    LogCY3Pair p(data);
    for (const auto& [edge, z] : data.markings) p.to_edge_chart(edge, z);
  } catch (const Error& e) {
    return Diagnostic::failure(e.what());
  }
  return Diagnostic::success();
}

ImageLattice k_image(const LogCY3Pair& p) {
  IntMatrix r = p.restriction_matrix();
  SnfDecomposition s = snf(r);
  IntMatrix rv = r * s.V;
  ImageLattice out;
  for (std::size_t j = 0; j < s.rank; ++j) {
    out.basis.push_back(rv.column(j));
    if (s.D(j, j) != 1) out.saturated = false;
  }
  return out;
}

}  // namespace logcy
