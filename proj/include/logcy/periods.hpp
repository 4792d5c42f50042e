#pragma once

#include "logcy/pair.hpp"

#include <vector>

namespace logcy {

/// Homomorphism from a lattice with basis `domain` (vectors in the direct sum
/// of the Pic(D_v)) to Q(i)^x, stored by its values on that basis.
struct PeriodCharacter {
  std::vector<IntVector> domain;
  std::vector<GaussianRational> values;

  /// Value on sum_j coefficients_j * domain_j.
  GaussianRational at(const IntVector& coefficients) const { return evaluate_monomial(values, coefficients); }
  bool is_trivial() const;
};

/// Matrix of l: rows are edges, columns the direct-sum basis. The entry for a
/// class on D_v is +L.D_e when v is the tail of e and -L.D_e when v is the head.
IntMatrix edge_matching_map(const LogCY3Pair& p);

/// Saturated basis of ker(l).
std::vector<IntVector> lambda_lattice(const LogCY3Pair& p);

/// [D_e] -> n_tail ^ n_head in the basis (e1^e2, e1^e3, e2^e3) of wedge^2 Z^3.
IntMatrix gamma_map(const LogCY3Pair& p);

struct GammaReport {
  IntMatrix gamma;
  CokernelStructure coker_ell;
  /// wedge^2 N modulo n_v ^ n_w for the edges carrying blowup points.
  CokernelStructure n_prime;
  /// gamma . l == 0 after passing to N'.
  bool composite_vanishes = false;
};

GammaReport gamma_report(const LogCY3Pair& p);

/// Values of the marked period point on the standard basis of the direct sum.
PeriodCharacter marked_period(const LogCY3Pair& p, const Marking& m);
/// Value of a character given on the standard basis at an arbitrary vector.
GaussianRational evaluate(const PeriodCharacter& standard, const IntVector& sum_vector);

/// The period point on the Lambda basis (computed with the marker marking).
PeriodCharacter unmarked_period(const LogCY3Pair& p);
PeriodCharacter unmarked_period(const LogCY3Pair& p, const Marking& m);

/// theta(lambda) on the standard basis: prod_e lambda_e^{l(b)_e}.
PeriodCharacter theta(const LogCY3Pair& p, const std::vector<GaussianRational>& lambdas);

/// Moves each p_e to lambda_e * p_e in the edge chart.
Marking act(const Marking& m, const std::vector<GaussianRational>& lambdas);

struct QuotientClass {
  std::size_t lambda_rank = 0;
  std::size_t k_rank = 0;
  std::vector<IntVector> free_generators;  // lifts to Lambda, in the direct sum
  std::vector<GaussianRational> free_values;
  std::vector<BigInt> torsion;
  std::vector<IntVector> torsion_generators;
  std::vector<GaussianRational> torsion_values;
};

/// The character induced on Lambda/K. Throws Error if the period is not
/// trivial on K.
QuotientClass quotient_class(const LogCY3Pair& p);

/// The period of l in Lambda as a product of transition values over the
/// triangles of the dual complex. With `flip_orientation` the triangles are
/// read with the opposite orientation.
GaussianRational cocycle_period(const LogCY3Pair& p, const IntVector& l, bool flip_orientation = false);

}  // namespace logcy
