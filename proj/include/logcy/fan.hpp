#pragma once

#include "logcy/error.hpp"
#include "logcy/gaussian_rational.hpp"
#include "logcy/int_matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace logcy {

using LatticePoint = std::array<long long, 3>;
using LatticePoint2 = std::array<long long, 2>;
using Triple = std::array<int, 3>;

long long det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// Orientation of the dual complex: cone `reference_cone`, read in the order
/// listed, is positively oriented iff sign == +1.
struct FanOrientation {
  int reference_cone = 0;
  int sign = 1;

  friend bool operator==(const FanOrientation&, const FanOrientation&) = default;
};

/// Raw smooth complete fan data in N = Z^3. Plain value; see validate_fan.
struct Fan3 {
  std::vector<LatticePoint> rays;
  std::vector<Triple> cones;
  FanOrientation orientation;

  static Fan3 projective_space();
  static Fan3 p1_cubed();
};

/// ok iff the rays are primitive and distinct, every cone is unimodular, every
/// wall lies in exactly two cones on opposite sides, and the cones triangulate S^2.
Diagnostic validate_fan(const Fan3& f);

/// Directed edge of the dual complex: the 1-stratum D_tail ∩ D_head.
struct Edge {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted index pair identifying an undirected edge.
using EdgeKey = std::pair<int, int>;
inline EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

/// The dual intersection complex: vertices are rays, triangles are max cones.
class DualComplex {
public:
  /// `edge_orientations` lists (tail, head) per edge; missing edges are
  /// oriented from the smaller to the larger ray index.
  DualComplex(const Fan3& f, const std::vector<Edge>& edge_orientations = {});

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Triangles in positive cyclic order; index matches the fan's cone index.
  const std::vector<Triple>& triangles() const { return triangles_; }

  std::optional<int> find_edge(int a, int b) const;
  int edge_index(int a, int b) const;

  /// Triangle in which tail -> head is traversed positively, and the other one.
  int left_triangle(int edge) const { return left_[edge]; }
  int right_triangle(int edge) const { return right_[edge]; }

  /// Neighbours of v in positive cyclic order.
  const std::vector<int>& link(int v) const { return links_[v]; }
  /// Edge indices around v, parallel to link(v).
  std::vector<int> link_edges(int v) const;

  /// +1 if edge e is oriented away from v, -1 if towards v.
  int orientation_sign(int edge, int v) const;

  int euler_characteristic() const {
    return vertex_count_ - static_cast<int>(edges_.size()) + static_cast<int>(triangles_.size());
  }

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::map<EdgeKey, int> edge_lookup_;
  std::vector<Triple> triangles_;
  std::vector<int> left_, right_;
  std::vector<std::vector<int>> links_;
};

/// Complete smooth 2D fan of a boundary component D_v, in N(v) = N / <n_v>.
struct Fan2 {
  int vertex = 0;
  /// Ray images in positive cyclic order (consecutive pairs have det +1).
  std::vector<LatticePoint2> rays;
  /// neighbours[i] is the 3D ray whose image is rays[i]; D_e with e = {vertex, neighbours[i]}.
  std::vector<int> neighbours;
  /// Self-intersection of the boundary curve i on the toric surface.
  std::vector<long long> self_intersections;

  std::size_t size() const { return rays.size(); }
  /// Toric surface intersection number of boundary curves i and j.
  long long intersection(std::size_t i, std::size_t j) const;
  /// Position of neighbour w, or throws.
  std::size_t position_of(int w) const;
};

/// Chart on the interior of a 1-stratum. The coordinate is the head
/// component's cyclic coordinate: 0 at the triple point of
/// `zero_triangle`, infinity at `infinity_triangle`. The tail component sees
/// the inverse coordinate. As a function on the torus, z = chi^character.
struct EdgeChart {
  int edge = 0;
  Edge oriented;
  int zero_triangle = 0;
  int infinity_triangle = 0;
  LatticePoint character{};

  /// Coordinate of a point with edge coordinate z, as seen from component u.
  GaussianRational view_from(int u, const GaussianRational& z) const;
  /// Coordinate in the chart of the reversed edge.
  static GaussianRational reversed(const GaussianRational& z) { return z.inverse(); }
};

/// The distinguished point m_e: coordinate -1 in every chart.
inline GaussianRational marker_point() { return GaussianRational(-1); }

/// A validated fan with its dual complex and intersection theory.
class ToricVariety {
public:
  explicit ToricVariety(Fan3 f, const std::vector<Edge>& edge_orientations = {});

  const Fan3& fan() const { return fan_; }
  const DualComplex& complex() const { return complex_; }
  int ray_count() const { return static_cast<int>(fan_.rays.size()); }
  int picard_rank() const { return ray_count() - 3; }

  /// D_i . D_j . D_k for ray divisors.
  long long triple(int i, int j, int k) const;
  /// Trilinear extension to vectors of ray-divisor coefficients.
  BigInt triple(const IntVector& a, const IntVector& b, const IntVector& c) const;

  /// D_i . C and D_j . C for C = D_i ∩ D_j, from the wall relation
  /// n_k + n_l + a n_i + b n_j = 0; returns (a, b).
  std::pair<long long, long long> wall_coefficients(int i, int j) const;

  /// m in M with <m, n_v> == 1 and <m, n_u> == 0 for the other rays of a cone at v.
  LatticePoint dual_vector(int v) const;
  /// Ray-divisor vector sum_u <m, n_u> D_u, linearly equivalent to 0.
  IntVector principal_divisor(const LatticePoint& m) const;

  /// Rays of cone 0 are eliminated; the rest form a basis of Pic.
  const Triple& reference_cone() const { return fan_.cones.front(); }
  const std::vector<int>& pic_basis_rays() const { return basis_rays_; }
  /// Ray-divisor coordinates of a Pic basis vector.
  IntVector to_ray_divisor(const IntVector& pic) const;
  /// Pic basis coordinates of a ray-divisor vector, via linear equivalence.
  IntVector to_pic(const IntVector& ray_divisor) const;
  /// Anticanonical class -K = sum D_v as ray-divisor vector.
  IntVector anticanonical() const { return IntVector(static_cast<std::size_t>(ray_count()), 1); }

  /// The 2D fan of D_v, ordered along link(v).
  Fan2 star_surface(int v) const;

  EdgeChart edge_chart(int edge) const;

private:
  Fan3 fan_;
  DualComplex complex_;
  std::vector<int> basis_rays_;
  std::map<EdgeKey, std::pair<long long, long long>> walls_;  // keyed (i<j): (D_i.C, D_j.C)
  std::vector<long long> cube_;                              // D_v^3
  std::vector<LatticePoint> dual_vectors_;
};

/// Star subdivision at the cone spanned by `target` (a wall or a max cone).
/// Throws DomainError when target is not a cone of the fan.
Fan3 star_subdivide(const Fan3& f, std::vector<int> target);

/// Same rays and same cones as sets, ignoring indices and orientation data.
bool same_fan(const Fan3& a, const Fan3& b);

/// Unimodular map N -> N' sending rays to rays and cones to cones.
struct FanIsomorphism {
  std::array<LatticePoint, 3> matrix{};  // rows
  std::vector<int> ray_map;
};

/// Frame search: fix cone 0 of `a`, try every ordered frame of `b`.
std::optional<FanIsomorphism> find_fan_isomorphism(const Fan3& a, const Fan3& b);
/// Checks whether a given ray bijection is induced by a unimodular map.
std::optional<FanIsomorphism> fan_isomorphism_for(const Fan3& a, const Fan3& b, const std::vector<int>& ray_map);

}  // namespace logcy
