#pragma once

#include <cstdint>
#include <vector>

#include "kummer/model.hpp"
#include "kummer/pure_gaps.hpp"

namespace kummer {

// Parameters of C_Omega(D, G) with G = sum (a_i + b_i - 1) Q_i for a verified
// pure-gap box [a, b].
struct CodeDesign {
  std::int64_t n;
  std::int64_t deg_g;
  std::int64_t k;            // n + g - 1 - deg G
  std::int64_t d_bound;      // deg G - (2g - 2) + s' + sum (b_i - a_i)
  std::int64_t delta_bound;  // n + 1 - k - d_bound
  std::int64_t s;            // number of places, P_inf included
  bool with_infty;

  friend bool operator==(const CodeDesign&, const CodeDesign&) = default;
};

// Throws Error(kBoxNotPure) if the box is not entirely pure gaps and
// Error(kDegreeOutOfRange) unless 2g - 2 < deg G < n.
CodeDesign design_from_box(const KummerCurve& curve, const PureGapBox& box,
                           std::int64_t n);

struct DefectBound {
  std::int64_t bound;
  PureGapBox box;  // the canonical box the bound refers to
};

// (ur(r-1) - us(s+1)) / 2 for the box
// ((r-s-1)m + 1, 1, ..., 1) .. ((r-s-1)m + su, (s-1)u, ..., u) at P_1..P_s.
// Requires 1 <= s <= r - 1.
DefectBound defect_bound_finite(const KummerCurve& curve, const UParameter& u,
                                std::int64_t s);

// (ur(r-1) - us(s+1)) / 2 - s - 1 for the box
// ((r-s-1)m - r, 1, ..., 1) .. ((r-s-1)m - r + s, u, ..., su) at
// P_inf, P_1..P_s. Requires 1 <= s <= r - 2.
DefectBound defect_bound_infty(const KummerCurve& curve, const UParameter& u,
                               std::int64_t s);

struct HermitianRow {
  std::int64_t q_sq;
  std::int64_t s;
  std::int64_t n;
  std::int64_t k;
  std::int64_t d_bound;

  friend bool operator==(const HermitianRow&, const HermitianRow&) = default;
};

// Codes on y^{q+1} = x^q + x over F_{q^2} from the finite canonical boxes,
// one row per s in 1..q-1 with 2g - 2 < deg G < n = q^3 + 1 - s. Every row is
// recomputed through design_from_box before it is returned.
// Throws Error(kInvalidArgument) unless q is a prime power >= 3.
std::vector<HermitianRow> hermitian_table(std::int64_t q);

bool is_prime_power(std::int64_t q);

}  // namespace kummer
