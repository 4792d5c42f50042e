#pragma once

#include "logcy/fan.hpp"
#include "logcy/pic.hpp"

#include <map>
#include <vector>

namespace logcy {

/// Exceptional curve of an interior blowup lying on D_v, meeting the boundary
/// edge at link position `position` in the point with coordinate `coord`
/// (component's own view).
struct ExceptionalCurve {
  int position = 0;
  GaussianRational coord;
  int step = 0;   // originating blowup
  int index = 0;  // position among the points of that step on this edge
};

/// Formal Z-combination of points on each edge of the boundary cycle of one
/// component, coordinates in the component's view.
struct CycleDivisor {
  std::vector<std::vector<std::pair<GaussianRational, BigInt>>> points;  // indexed by link position

  explicit CycleDivisor(std::size_t edges = 0) : points(edges) {}
  void add(std::size_t position, const GaussianRational& q, const BigInt& mult);
  BigInt degree(std::size_t position) const;
  bool empty() const;
};

/// Marking point p_e per global edge index, in the edge chart.
using Marking = std::map<int, GaussianRational>;

/// Marking by the distinguished points m_e = -1 on every edge.
Marking marker_marking(const DualComplex& complex);

/// (D_v, boundary of D_v): the toric surface of the star of v blown up at interior
/// boundary points. Pic basis: link divisors at positions 2..k-1 (pullbacks),
/// then the exceptional classes in order.
class LooijengaComponent {
public:
  LooijengaComponent(Fan2 base, std::vector<int> edges, std::vector<EdgeChart> charts);

  int vertex() const { return base_.vertex; }
  const Fan2& base() const { return base_; }
  /// Global edge index per link position.
  const std::vector<int>& edges() const { return edges_; }
  const EdgeChart& chart(std::size_t position) const { return charts_[position]; }
  const std::vector<ExceptionalCurve>& exceptionals() const { return excs_; }

  std::size_t toric_rank() const { return base_.size() - 2; }
  std::size_t rank() const { return toric_rank() + excs_.size(); }
  PicTag tag() const { return PicTag::component(vertex()); }

  /// Appends an exceptional class; `coord` is in the edge chart.
  void add_exceptional(std::size_t position, const GaussianRational& edge_coord, int step, int index);

  /// Pic coordinates of a combination of link divisors (pullbacks), given by
  /// one coefficient per link position.
  PicVector from_toric(const IntVector& link_coefficients) const;
  /// Strict transform of the boundary curve at link position i.
  PicVector boundary_curve(std::size_t position) const;
  PicVector canonical() const;
  PicVector zero() const { return PicVector(rank(), tag()); }
  PicVector unit(std::size_t i) const;

  BigInt intersect(const PicVector& a, const PicVector& b) const;
  /// Index of the exceptional class with the given origin, or -1.
  int find_exceptional(int step, int index) const;

private:
  void check(const PicVector& v) const;

  Fan2 base_;
  std::vector<int> edges_;
  std::vector<EdgeChart> charts_;
  std::vector<ExceptionalCurve> excs_;
};

/// Pullback classes go to (L . D_e) m_e on each edge, an exceptional to its point.
CycleDivisor restrict_to_cycle(const LooijengaComponent& c, const PicVector& l);

/// prod q_i^{a_i} / p^{d} for d = sum a_i. Throws DomainError on a zero point.
GaussianRational lambda_factor(const std::vector<std::pair<GaussianRational, BigInt>>& divisor,
                               const GaussianRational& p);

/// prod over the edges of D_v of lambda_factor, the marking seen from v.
GaussianRational component_marked_period(const LooijengaComponent& c, const Marking& m, const PicVector& l);

/// Smooth rational curve gate: C^2 + K.C == -2 and C . D_e >= 0 on every edge.
Diagnostic adjunction_check(const LooijengaComponent& c, const PicVector& curve);

}  // namespace logcy
