#pragma once

// Exact Riemann-Roch dimensions for divisors supported on the totally
// ramified places {P_inf, P_1, ..., P_r}. Such divisors are invariant under
// Gal(F / F_q(x)), so L(D) splits as a direct sum over t = 0..m-1 of
// L([D + (y^t)] restricted to F_q(x)) y^t, each summand living on the
// rational function field where l(E) = max(0, deg E + 1).

#include <cstdint>
#include <span>
#include <vector>

#include "kummer/model.hpp"

namespace kummer {

struct RestrictionProfile {
  // degrees[t] = floor((a_0 - r t) / m) + sum_{i=1..r} floor((a_i + t) / m)
  std::vector<std::int64_t> degrees;
};

// Throws Error(kUnsupportedPlace) if the divisor has a finite place with
// index outside 1..r.
RestrictionProfile restriction_profile(const KummerCurve& curve,
                                       const Divisor& divisor);

// l(D).
std::int64_t riemann_roch_dimension(const KummerCurve& curve,
                                    const Divisor& divisor);

// Dense form: coefficients[0] is the P_inf coefficient and coefficients[i]
// the P_i coefficient; missing trailing places count as zero. This is the
// allocation-free path used by sweeps.
std::int64_t riemann_roch_dimension(const KummerCurve& curve,
                                    std::span<const std::int64_t> coefficients);

// True iff l(sum n_i Q_i) = l(sum n_i Q_i - Q_j) for some j.
// Places must be distinct and tuple entries non-negative.
bool is_gap(const KummerCurve& curve, std::span<const Place> places,
            std::span<const std::int64_t> tuple);

// True iff l(sum n_i Q_i) = l(sum (n_i - 1) Q_i). Entries must be >= 1.
bool is_pure_gap(const KummerCurve& curve, std::span<const Place> places,
                 std::span<const std::int64_t> tuple);

// Membership in the Weierstrass semigroup H(Q_1, ..., Q_s).
inline bool in_semigroup(const KummerCurve& curve,
                         std::span<const Place> places,
                         std::span<const std::int64_t> tuple) {
  return !is_gap(curve, places, tuple);
}

}  // namespace kummer
