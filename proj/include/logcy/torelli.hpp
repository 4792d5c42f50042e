#pragma once

#include "logcy/periods.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logcy {

/// (E.l, K.l, E.K^2) for a divisorial contraction with exceptional E and
/// extremal curve class l.
using MoriTriple = std::array<BigInt, 3>;

struct MoriClass {
  int type = 0;
  MoriTriple triple;
  bool contracts_to_curve = false;
};

/// Rows of Mori's table matching the triple. A contraction onto a curve is
/// type 1 whatever E.K^2 is; otherwise (-1,-2,4) is type 2, (-1,-1,2) is
/// type 3 or 4 and (-2,-1,1) is type 5.
std::vector<int> mori_types(const MoriTriple& t, bool contracts_to_curve);

/// Classifies the contraction of E_k on the pair truncated after step k.
/// Throws Error if the triple matches no row or several.
MoriClass classify_contraction(const LogCY3Pair& p, std::size_t k);

/// Intersection data of a smooth complete toric threefold: the triples with
/// D_i.D_j.D_k = 1 and, for adjacent v, w, the self-intersection of
/// C = D_v cap D_w on D_v.
struct ToricIntersectionData {
  int vertex_count = 0;
  std::vector<Triple> cones;
  std::map<std::pair<int, int>, long long> self_intersection;  // (v, w) -> (C_vw^2) on D_v

  friend bool operator==(const ToricIntersectionData&, const ToricIntersectionData&) = default;
};

ToricIntersectionData intersection_data(const ToricVariety& t);

/// Rebuilds rays from intersection data by seeding cone 0 with the standard
/// basis and crossing walls with n_d = -n_c - c1 n_a - c2 n_b. Throws
/// DomainError if the data is not that of a smooth complete toric threefold.
Fan3 reconstruct_fan(const ToricIntersectionData& data);

/// c = n + r - d for a weighted decomposition sum a_i D_i of the boundary.
BigRational complexity(const LogCY3Pair& p, const std::vector<std::pair<BigRational, PicVector>>& decomposition);
/// The toric boundary decomposition: every D_v with weight 1.
std::vector<std::pair<BigRational, PicVector>> boundary_decomposition(const LogCY3Pair& p);

/// Identification of the data of two pairs: rays, steps and optionally the
/// lattice maps themselves.
struct Correspondence {
  std::vector<int> vertex_map;
  /// step k of P corresponds to step step_map[k] of P'. Empty means identity.
  std::vector<int> step_map;
  /// Reordering of the exceptional curves of a step on one component:
  /// key (step of P, component of P), value[i] = index in P'.
  std::map<std::pair<int, int>, std::vector<int>> exceptional_order;
  /// Explicit mu (rank' x rank) and mu_v; canonical maps are used when absent.
  std::optional<IntMatrix> mu;
  std::map<int, IntMatrix> mu_components;

  static Correspondence identity(const LogCY3Pair& p);
};

/// Lattice maps induced by a correspondence.
struct InducedMaps {
  IntMatrix mu;                         // Pic(Y) -> Pic(Y')
  std::vector<IntMatrix> mu_components; // Pic(D_v) -> Pic(D'_{sigma v})
  IntMatrix mu_sum;                     // direct sums
  int orientation = 1;                  // +1 if sigma preserves the orientation of the sphere
};

enum class VerdictKind { Isomorphic, Distinct, Inconclusive };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string reason;
  /// Checks that passed, in pipeline order.
  std::vector<std::string> transcript;
  int orientation = 1;
  std::optional<FanIsomorphism> fan_map;
  /// Distinct by periods: a Lambda vector of P, its image, and both values.
  std::optional<IntVector> witness;
  std::optional<IntVector> witness_image;
  std::optional<GaussianRational> value;
  std::optional<GaussianRational> value_prime;
};

/// Builds mu and mu_v. Throws DomainError for a malformed correspondence.
InducedMaps induced_maps(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr);

/// The decision pipeline: dual complexes, cubic forms, step peeling, toric
/// models, then periods on Lambda. Distinct means distinct under this
/// correspondence. Throws DomainError for a malformed correspondence.
Verdict decide_isomorphism(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr);

/// Also tries every reordering of exceptional curves within each (step, edge)
/// group of the correspondence. More than `bound` candidates gives Inconclusive.
Verdict decide_isomorphism(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr,
                           std::size_t bound);

/// Re-evaluates a Distinct period witness through the cocycle path.
bool recheck_witness(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr, const Verdict& v);

struct TransporterResult {
  bool solvable = false;
  /// A Lambda relation whose target product is not 1, when unsolvable.
  IntVector relation;
  /// Per-edge lambda in Q(i)^x, when the needed roots exist there.
  std::optional<std::vector<GaussianRational>> lambdas;
};

/// Solves theta(lambda) . phi_{P,m} = phi_{P',m'} o mu over the direct sum.
TransporterResult marking_transporter(const LogCY3Pair& p, const LogCY3Pair& q, const Correspondence& corr,
                                      const Marking& m, const Marking& m_prime);

/// The pair moved by the torus element t: every boundary coordinate on an
/// edge with chart character m is multiplied by t^m.
PairData torus_translate(const LogCY3Pair& p, const std::array<GaussianRational, 3>& t);

}  // namespace logcy
