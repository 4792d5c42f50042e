#include "logcy/component.hpp"

namespace logcy {

void CycleDivisor::add(std::size_t position, const GaussianRational& q, const BigInt& mult) {
  if (sgn(mult) == 0) return;
  auto& pts = points.at(position);
  for (auto it = pts.begin(); it != pts.end(); ++it) {
    if (it->first == q) {
      it->second += mult;
      if (sgn(it->second) == 0) pts.erase(it);
      return;
    }
  }
  pts.emplace_back(q, mult);
}

BigInt CycleDivisor::degree(std::size_t position) const {
  BigInt d = 0;
  for (const auto& [q, a] : points.at(position)) d += a;
  return d;
}

bool CycleDivisor::empty() const {
  for (const auto& p : points)
    if (!p.empty()) return false;
  return true;
}

Marking marker_marking(const DualComplex& complex) {
  Marking m;
  for (std::size_t e = 0; e < complex.edges().size(); ++e) m[static_cast<int>(e)] = marker_point();
  return m;
}

LooijengaComponent::LooijengaComponent(Fan2 base, std::vector<int> edges, std::vector<EdgeChart> charts)
    : base_(std::move(base)), edges_(std::move(edges)), charts_(std::move(charts)) {
  if (base_.size() < 3 || edges_.size() != base_.size() || charts_.size() != base_.size())
    throw DomainError("component data inconsistent with its star surface");
}

void LooijengaComponent::add_exceptional(std::size_t position, const GaussianRational& edge_coord, int step,
                                         int index) {
  if (edge_coord.is_zero()) throw DomainError("blowup point at a 0-stratum");
  excs_.push_back({static_cast<int>(position), charts_.at(position).view_from(vertex(), edge_coord), step, index});
}

void LooijengaComponent::check(const PicVector& v) const { v.require(tag(), rank()); }

PicVector LooijengaComponent::unit(std::size_t i) const {
  PicVector v = zero();
  v[i] = 1;
  return v;
}

PicVector LooijengaComponent::from_toric(const IntVector& c) const {
  if (c.size() != base_.size()) throw BasisMismatch("link coefficient vector of wrong length");
  PicVector v = zero();
  for (std::size_t j = 2; j < base_.size(); ++j)
    v[j - 2] = c[j] - c[0] * BigInt(static_cast<long>(base_.rays[j][0])) -
               c[1] * BigInt(static_cast<long>(base_.rays[j][1]));
  return v;
}

PicVector LooijengaComponent::boundary_curve(std::size_t position) const {
  IntVector c(base_.size());
  c.at(position) = 1;
  PicVector v = from_toric(c);
  for (std::size_t k = 0; k < excs_.size(); ++k)
    if (static_cast<std::size_t>(excs_[k].position) == position) v[toric_rank() + k] -= 1;
  return v;
}

PicVector LooijengaComponent::canonical() const {
  PicVector k = zero();
  for (std::size_t i = 0; i < base_.size(); ++i) k -= boundary_curve(i);
  return k;
}

BigInt LooijengaComponent::intersect(const PicVector& a, const PicVector& b) const {
  check(a);
  check(b);
  BigInt s = 0;
  const std::size_t t = toric_rank();
  for (std::size_t i = 0; i < t; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < t; ++j) {
      long long x = base_.intersection(i + 2, j + 2);
      if (x != 0) s += a[i] * b[j] * BigInt(static_cast<long>(x));
    }
  }
  for (std::size_t k = t; k < rank(); ++k) s -= a[k] * b[k];
  return s;
}

int LooijengaComponent::find_exceptional(int step, int index) const {
  for (std::size_t k = 0; k < excs_.size(); ++k)
    if (excs_[k].step == step && excs_[k].index == index) return static_cast<int>(toric_rank() + k);
  return -1;
}

CycleDivisor restrict_to_cycle(const LooijengaComponent& c, const PicVector& l) {
  l.require(c.tag(), c.rank());
  const Fan2& base = c.base();
  CycleDivisor d(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    BigInt deg = 0;
    for (std::size_t b = 0; b < c.toric_rank(); ++b) {
      long long x = base.intersection(b + 2, i);
      if (x != 0) deg += l[b] * BigInt(static_cast<long>(x));
    }
    d.add(i, marker_point(), deg);
  }
  for (std::size_t k = 0; k < c.exceptionals().size(); ++k) {
    const auto& e = c.exceptionals()[k];
    d.add(static_cast<std::size_t>(e.position), e.coord, l[c.toric_rank() + k]);
  }
  return d;
}

GaussianRational lambda_factor(const std::vector<std::pair<GaussianRational, BigInt>>& divisor,
                               const GaussianRational& p) {
  if (p.is_zero()) throw DomainError("marking point at a 0-stratum");
  GaussianRational num(1);
  BigInt d = 0;
  for (const auto& [q, a] : divisor) {
    if (q.is_zero()) throw DomainError("divisor point at a 0-stratum");
    num *= pow(q, a);
    d += a;
  }
  return num / pow(p, d);
}

GaussianRational component_marked_period(const LooijengaComponent& c, const Marking& m, const PicVector& l) {
  CycleDivisor d = restrict_to_cycle(c, l);
  GaussianRational value(1);
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    auto it = m.find(c.edges()[i]);
    if (it == m.end()) throw DomainError("marking misses edge " + std::to_string(c.edges()[i]));
    value *= lambda_factor(d.points[i], c.chart(i).view_from(c.vertex(), it->second));
  }
  return value;
}

Diagnostic adjunction_check(const LooijengaComponent& c, const PicVector& curve) {
  BigInt self = c.intersect(curve, curve);
  BigInt kc = c.intersect(c.canonical(), curve);
  if (self + kc != -2)
    return Diagnostic::failure("adjunction failed: C^2 + K.C = " + BigInt(self + kc).get_str() + ", expected -2");
  for (std::size_t i = 0; i < c.base().size(); ++i) {
    BigInt d = c.intersect(curve, c.boundary_curve(i));
    if (sgn(d) < 0)
      return Diagnostic::failure("curve has negative degree " + d.get_str() + " on boundary edge " +
                                 std::to_string(c.edges()[i]));
  }
  return Diagnostic::success();
}

}  // namespace logcy
