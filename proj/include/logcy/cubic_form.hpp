#pragma once

#include "logcy/fan.hpp"

#include <vector>

namespace logcy {

/// Symmetric trilinear form on Z^n, stored densely.
class CubicForm {
public:
  explicit CubicForm(std::size_t n = 0) : n_(n), t_(n * n * n) {}

  /// The toric cubic form in the Pic basis of `t`.
  static CubicForm toric(const ToricVariety& t);

  std::size_t size() const { return n_; }
  const BigInt& operator()(std::size_t i, std::size_t j, std::size_t k) const { return t_[(i * n_ + j) * n_ + k]; }
  /// Sets the entry and all its permutations.
  void set(std::size_t i, std::size_t j, std::size_t k, const BigInt& v);

  BigInt evaluate(const IntVector& a, const IntVector& b, const IntVector& c) const;

  /// Form on Z^{n+1} after a blowup with exceptional E (last coordinate):
  /// pi*A.pi*B.E = 0, pi*A.E^2 = a_dot_e2[A], E^3 = e_cube.
  CubicForm extended(const IntVector& a_dot_e2, const BigInt& e_cube) const;

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

private:
  std::size_t n_;
  std::vector<BigInt> t_;
};

/// Cubic form of the blowup of t along the torus-invariant stratum of
/// `target` (two rays: a curve, three rays: a point), from the blowup formulas.
/// Basis: Pic basis of t (pullbacks), then E.
CubicForm blowup_formula_cubic(const ToricVariety& t, const std::vector<int>& target);

/// The same form read off the star-subdivided fan, with pi*D_u = D'_u + [u in target] D'_new.
CubicForm subdivision_cubic(const ToricVariety& t, const std::vector<int>& target);

}  // namespace logcy
