#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kummer/model.hpp"

namespace kummer {

enum class TwoPointFlavor {
  kFiniteFinite,  // (P_1, P_2)
  kInftyFinite,   // (P_inf, P_1)
};

// The two places a flavor refers to, in tuple order.
std::pair<Place, Place> flavor_places(TwoPointFlavor flavor);

using IntPair = std::pair<std::int64_t, std::int64_t>;

// Graph of the bijection gamma between the one-point gap sets at the two
// places; lexicographically sorted.
struct GammaSet {
  std::vector<IntPair> pairs;
  TwoPointFlavor flavor;
};

GammaSet gamma_finite_finite(const KummerCurve& curve);
GammaSet gamma_infty_finite(const KummerCurve& curve);
GammaSet gamma_set(const KummerCurve& curve, TwoPointFlavor flavor);

// Sorted gaps at a single place, computed from the Riemann-Roch oracle over
// 1..2g-1. Always exactly g values.
std::vector<std::int64_t> one_point_gaps(const KummerCurve& curve,
                                         Place place);

// Number of pairs (a, b), (a', b') in the set with a < a' and b > b'.
std::int64_t inversions(const GammaSet& gamma);

struct TwoPointGapCount {
  std::int64_t total;
  std::int64_t sum_gaps_first;
  std::int64_t sum_gaps_second;
  std::int64_t inversions;
};

// Homma's count |G(P, Q)| = sum of gaps at P + sum of gaps at Q - inversions.
TwoPointGapCount count_gaps_two_points(const KummerCurve& curve,
                                       TwoPointFlavor flavor);

struct ClosedFormCounts {
  std::int64_t finite_finite;  // |G(P_1, P_2)|
  std::int64_t infty_finite;   // |G(P_inf, P_1)|
};

// Direct evaluation of the m = ur + 1 closed forms.
// Throws Error(kNotUrPlusOne) if m is not 1 mod r.
ClosedFormCounts closed_form_counts(const KummerCurve& curve);
ClosedFormCounts closed_form_counts(std::int64_t u, std::int64_t r);

// Closed forms for the pieces of the m = ur + 1 count, kept as cross-checks
// of the pairwise inversion count and the oracle gap sets.
struct ClosedFormPieces {
  std::int64_t gap_sum_finite;       // sum of G(P_1)
  std::int64_t gap_sum_infty;        // sum of G(P_inf)
  std::int64_t inversions_finite_finite;
  std::int64_t inversions_infty_finite;
};
ClosedFormPieces closed_form_pieces(std::int64_t u, std::int64_t r);

inline IntPair lub(const IntPair& x, const IntPair& y) {
  return {x.first > y.first ? x.first : y.first,
          x.second > y.second ? x.second : y.second};
}

// H(P, Q) intersected with [0, bound]^2, regenerated as pairwise least upper
// bounds of Gamma(P, Q), H(P) x {0} and {0} x H(Q). Sorted lexicographically.
std::vector<IntPair> semigroup_box(const KummerCurve& curve,
                                   TwoPointFlavor flavor, std::int64_t bound);

}  // namespace kummer
