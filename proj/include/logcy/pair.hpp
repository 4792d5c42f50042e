#pragma once

#include "logcy/component.hpp"
#include "logcy/cubic_form.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace logcy {

/// Blowup of the point with coordinate `coord` on the 1-stratum between rays
/// `edge.tail` and `edge.head`. The coordinate is read in the chart of the
/// edge directed as written here.
struct PointBlowup {
  Edge edge;
  GaussianRational coord;
};

/// Intersection points of a curve center with the 1-stratum {component, neighbour}.
struct CurvePoints {
  int neighbour = 0;
  /// Coordinates as seen from D_component, i.e. the chart of the edge
  /// directed neighbour -> component.
  std::vector<GaussianRational> coords;
};

/// Class on the current D_v: sum of coefficient * (pullback of the boundary
/// divisor at neighbour w) plus coefficient * (exceptional class of (step, index)).
struct CurveClass {
  std::vector<std::pair<int, BigInt>> boundary;
  std::vector<std::tuple<int, int, BigInt>> exceptional;
};

/// Blowup of a smooth rational curve in D_component.
struct CurveBlowup {
  int component = 0;
  CurveClass cls;
  std::vector<CurvePoints> points;
};

using BlowupStep = std::variant<PointBlowup, CurveBlowup>;

/// Raw pair description: toric model, edge orientations, program, markings.
struct PairData {
  Fan3 fan;
  std::vector<Edge> edge_orientations;
  std::vector<BlowupStep> program;
  /// Marking points with the same chart rule as PointBlowup.
  std::vector<std::pair<Edge, GaussianRational>> markings;
};

/// Bookkeeping for one program step after replay.
struct StepInfo {
  bool is_curve = false;
  int edge = -1;                 // point steps: global edge index
  int component = -1;            // curve steps
  IntVector curve_class;         // curve steps: class on the final D_component
  std::vector<int> touched;      // components receiving exceptional curves
  std::vector<int> point_counts; // curve steps: points per link position of component
};

/// A log CY3 pair given by an interior-blowup program over a smooth toric pair.
/// Pic(Y) basis: the toric Pic basis (pullbacks), then E_1 .. E_r.
class LogCY3Pair {
public:
  /// Replays and validates; throws DomainError (or ParseError) on invalid data.
  explicit LogCY3Pair(PairData data);

  const PairData& data() const { return data_; }
  const ToricVariety& toric() const { return toric_; }
  const DualComplex& complex() const { return toric_.complex(); }
  const std::vector<LooijengaComponent>& components() const { return components_; }
  const LooijengaComponent& component(int v) const { return components_.at(v); }
  const std::vector<StepInfo>& steps() const { return steps_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::size_t step_count() const { return steps_.size(); }
  std::size_t rank() const { return toric_rank() + steps_.size(); }
  std::size_t toric_rank() const { return toric_.pic_basis_rays().size(); }
  bool is_toric() const { return steps_.empty(); }

  PicVector zero() const { return PicVector(rank(), PicTag::threefold()); }
  PicVector unit(std::size_t i) const;
  PicVector exceptional(std::size_t k) const { return unit(toric_rank() + k); }
  /// Pullback of a toric ray-divisor combination.
  PicVector pullback(const IntVector& ray_divisor) const;
  /// Strict transform of the toric boundary component D_v.
  PicVector boundary_class(int v) const;
  PicVector canonical() const;

  BigInt cubic(const PicVector& a, const PicVector& b, const PicVector& c) const;
  const CubicForm& cubic_form() const { return cubic_; }

  PicVector restrict(const PicVector& l, int v) const;
  /// Concatenation over v of restrict(l, v).
  IntVector restrict_all(const PicVector& l) const;
  /// Columns: restrict_all of the Pic(Y) basis.
  IntMatrix restriction_matrix() const;

  /// Offsets of each Pic(D_v) block in the direct sum, and its total rank.
  std::size_t offset(int v) const { return offsets_.at(v); }
  std::size_t sum_rank() const { return offsets_.back(); }
  /// Splits a direct-sum vector into the block for D_v.
  PicVector block(const IntVector& sum, int v) const;

  /// Global edge index for an edge written tail->head, and whether that
  /// direction is opposite to the declared orientation.
  std::pair<int, bool> resolve_edge(const Edge& e) const;
  /// Coordinate converted into the declared chart of the edge.
  GaussianRational to_edge_chart(const Edge& written, const GaussianRational& z) const;

  Marking marking() const;

private:
  void replay_components();
  void build_restrictions();
  void build_cubic();

  PairData data_;
  ToricVariety toric_;
  std::vector<LooijengaComponent> components_;
  std::vector<StepInfo> steps_;
  std::vector<std::string> warnings_;
  std::vector<IntMatrix> restriction_;  // per v: rank(D_v) x rank(Y)
  std::vector<std::size_t> offsets_;
  CubicForm cubic_;
};

/// ok, or the first violated requirement.
Diagnostic validate_pair(const PairData& data);

/// Basis of the image of restrict in the direct sum, with the saturation flag.
struct ImageLattice {
  std::vector<IntVector> basis;
  bool saturated = true;
};

ImageLattice k_image(const LogCY3Pair& p);

}  // namespace logcy
