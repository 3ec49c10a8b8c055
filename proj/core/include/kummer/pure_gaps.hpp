#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kummer/model.hpp"

namespace kummer {

// Places a tuple refers to: optionally P_inf (always first), followed by
// `finite_count` finite totally ramified places. Which finite places are used
// does not matter for any computation here, only how many.
struct PlaceSignature {
  bool with_infty = false;
  std::int64_t finite_count = 0;

  std::int64_t arity() const { return finite_count + (with_infty ? 1 : 0); }
  // P_inf (if present) then P_1, ..., P_s.
  std::vector<Place> places() const;

  friend bool operator==(const PlaceSignature&, const PlaceSignature&) = default;
};

struct PureGapTuple {
  PlaceSignature signature;
  std::vector<std::int64_t> entries;  // a_0 first when signature.with_infty

  friend bool operator==(const PureGapTuple&, const PureGapTuple&) = default;
};

// Axis-aligned box [low, high] of candidate pure gaps.
struct PureGapBox {
  PlaceSignature signature;
  std::vector<std::int64_t> low;
  std::vector<std::int64_t> high;

  friend bool operator==(const PureGapBox&, const PureGapBox&) = default;
};

// Arithmetic characterization at P_1, ..., P_s (s = entries.size()).
// Throws Error(kTooManyPlaces) if s > r, kInvalidArgument on empty input or
// entries < 1.
bool check_pure_finite(const KummerCurve& curve,
                       std::span<const std::int64_t> entries);

// Same at P_inf, P_1, ..., P_s; entries = (a_0, a_1, ..., a_s). s = 0 (P_inf
// alone) is accepted.
bool check_pure_with_infty(const KummerCurve& curve,
                           std::span<const std::int64_t> entries);

// Dispatches on signature.with_infty.
bool check_pure(const KummerCurve& curve, const PlaceSignature& signature,
                std::span<const std::int64_t> entries);

// A family of pure gaps from one closed form. `applicable` is false when the
// closed form would produce a non-positive entry for this curve; the list is
// then empty.
struct PureGapFamily {
  std::string label;
  PlaceSignature signature;
  bool applicable = true;
  std::vector<PureGapTuple> tuples;
};

// The three two-point families for m = ur + 1:
//   (i)   ((r-1)m - 2r, 1) at (P_inf, P_1)
//   (ii)  ((r-2)m - r, b), 1 <= b <= u+1, at (P_inf, P_1)
//   (iii) ((r-3)m + 1 + alpha, 1 + beta), alpha < 2u, beta < u, at (P_1, P_2)
struct TwoPointFamilies {
  PureGapFamily infty_single;
  PureGapFamily infty_column;
  PureGapFamily finite_block;
};

TwoPointFamilies family_two_point(const KummerCurve& curve,
                                  const UParameter& u);

using PureGapVisitor = std::function<void(std::span<const std::int64_t>)>;

// ((r-s-1)m + 1 + alpha_1, 1 + alpha_2, ..., 1 + alpha_s) with
// 0 <= alpha_i < (s+1-i)u, pure at P_1..P_s. Requires 1 <= s < r.
void for_each_many_finite(const KummerCurve& curve, const UParameter& u,
                          std::int64_t s, const PureGapVisitor& visit);
PureGapFamily family_many_finite(const KummerCurve& curve, const UParameter& u,
                                 std::int64_t s);

// ((r-s-1)m - r + alpha, 1 + beta_1, ..., 1 + beta_s) with 0 <= alpha <= s,
// 0 <= beta_i < i u, pure at P_inf, P_1..P_s. Requires 1 <= s < r - 1.
void for_each_many_infty(const KummerCurve& curve, const UParameter& u,
                         std::int64_t s, const PureGapVisitor& visit);
PureGapFamily family_many_infty(const KummerCurve& curve, const UParameter& u,
                                std::int64_t s);

// The family above as a box: ((r-s-1)m + 1, 1, ..., 1) ..
// ((r-s-1)m + su, (s-1)u, ..., u) at P_1..P_s.
PureGapBox many_finite_box(const KummerCurve& curve, const UParameter& u,
                           std::int64_t s);

// ((r-s-1)m - r, 1, ..., 1) .. ((r-s-1)m - r + s, u, ..., su) at
// P_inf, P_1..P_s.
PureGapBox many_infty_box(const KummerCurve& curve, const UParameter& u,
                          std::int64_t s);

// Visits every lattice point of the box in lexicographic order. Throws
// Error(kInvalidArgument) on arity mismatch or low > high.
void for_each_point(const PureGapBox& box, const PureGapVisitor& visit);

// True iff every lattice point of the box is a pure gap.
bool verify_box(const KummerCurve& curve, const PureGapBox& box);

enum class PureGapMode {
  kCharacterization,
  kOracle,
};

// All pure gaps for the signature with entry sum <= min(bound, 2g-1), in
// lexicographic order.
std::vector<PureGapTuple> enumerate_pure_gaps(
    const KummerCurve& curve, const PlaceSignature& signature,
    std::optional<std::int64_t> bound = std::nullopt,
    PureGapMode mode = PureGapMode::kCharacterization);

// Greedy: starting from the degenerate box at `seed` (which must be pure),
// repeatedly raises one coordinate of `high` while the box stays pure.
// Coordinates are tried in order; no optimality is claimed.
PureGapBox grow_box(const KummerCurve& curve, const PlaceSignature& signature,
                    std::span<const std::int64_t> seed);

}  // namespace kummer
