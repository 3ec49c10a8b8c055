#include "kummer/pure_gaps.hpp"

#include <algorithm>

#include "kummer/checked.hpp"
#include "kummer/error.hpp"
#include "kummer/rr_oracle.hpp"

namespace kummer {

using checked::add;
using checked::floor_div;
using checked::mul;
using checked::sub;

std::vector<Place> PlaceSignature::places() const {
  std::vector<Place> out;
  if (with_infty) out.push_back(Place::infinity());
  for (std::int64_t i = 1; i <= finite_count; ++i)
    out.push_back(Place::finite(i));
  return out;
}

namespace {

void require_positive(std::span<const std::int64_t> entries) {
  for (auto a : entries)
    if (a < 1)
      throw Error(ErrorCode::kInvalidArgument,
                  "pure gap entries must be >= 1");
}

void require_finite_count(const KummerCurve& curve, std::int64_t s) {
  if (s > curve.r())
    throw Error(ErrorCode::kTooManyPlaces,
                "at most r = " + std::to_string(curve.r()) +
                    " finite places are totally ramified");
}

// For one t: the restricted degree must be negative, or else none of the
// floors may drop when every entry is lowered by one.
bool finite_part_pure_at(std::int64_t m, std::int64_t t, std::int64_t base,
                         std::span<const std::int64_t> finite) {
  std::int64_t degree = base;
  for (auto a : finite) degree = add(degree, floor_div(add(a, t), m));
  if (degree < 0) return true;
  for (auto a : finite)
    if (floor_div(add(a, t), m) != floor_div(sub(add(a, t), 1), m))
      return false;
  return true;
}

void validate_u(const KummerCurve& curve, const UParameter& u) {
  if (add(mul(u.value(), curve.r()), 1) != curve.m())
    throw Error(ErrorCode::kNotUrPlusOne,
                "u does not satisfy m = u*r + 1 for this curve");
}

}  // namespace

bool check_pure_finite(const KummerCurve& curve,
                       std::span<const std::int64_t> entries) {
  if (entries.empty())
    throw Error(ErrorCode::kInvalidArgument, "need at least one place");
  require_finite_count(curve, static_cast<std::int64_t>(entries.size()));
  require_positive(entries);
  const std::int64_t m = curve.m();
  for (std::int64_t t = 0; t < m; ++t) {
    const std::int64_t base = floor_div(-mul(curve.r(), t), m);
    if (!finite_part_pure_at(m, t, base, entries)) return false;
  }
  return true;
}

bool check_pure_with_infty(const KummerCurve& curve,
                           std::span<const std::int64_t> entries) {
  if (entries.empty())
    throw Error(ErrorCode::kInvalidArgument, "need the P_inf entry");
  require_finite_count(curve, static_cast<std::int64_t>(entries.size()) - 1);
  require_positive(entries);
  const std::int64_t m = curve.m();
  const std::int64_t a0 = entries[0];
  const auto finite = entries.subspan(1);
  for (std::int64_t t = 0; t < m; ++t) {
    const std::int64_t shifted = sub(a0, mul(curve.r(), t));
    const std::int64_t base = floor_div(shifted, m);
    std::int64_t degree = base;
    for (auto a : finite) degree = add(degree, floor_div(add(a, t), m));
    if (degree < 0) continue;
    if (base != floor_div(shifted - 1, m)) return false;
    if (!finite_part_pure_at(m, t, base, finite)) return false;
  }
  return true;
}

bool check_pure(const KummerCurve& curve, const PlaceSignature& signature,
                std::span<const std::int64_t> entries) {
  if (static_cast<std::int64_t>(entries.size()) != signature.arity())
    throw Error(ErrorCode::kInvalidArgument,
                "tuple length does not match the place signature");
  return signature.with_infty ? check_pure_with_infty(curve, entries)
                              : check_pure_finite(curve, entries);
}

TwoPointFamilies family_two_point(const KummerCurve& curve,
                                  const UParameter& u) {
  validate_u(curve, u);
  const std::int64_t m = curve.m();
  const std::int64_t r = curve.r();
  const std::int64_t uv = u.value();
  const PlaceSignature infty_one{true, 1};
  const PlaceSignature two_finite{false, 2};

  TwoPointFamilies out;

  out.infty_single = {"(i)", infty_one, true, {}};
  const std::int64_t a_single = sub(mul(r - 1, m), mul(2, r));
  if (a_single >= 1)
    out.infty_single.tuples.push_back({infty_one, {a_single, 1}});
  else
    out.infty_single.applicable = false;

  out.infty_column = {"(ii)", infty_one, true, {}};
  const std::int64_t a_column = sub(mul(r - 2, m), r);
  if (a_column >= 1) {
    for (std::int64_t b = 1; b <= uv + 1; ++b)
      out.infty_column.tuples.push_back({infty_one, {a_column, b}});
  } else {
    out.infty_column.applicable = false;
  }

  out.finite_block = {"(iii)", two_finite, true, {}};
  const std::int64_t a_block = add(mul(r - 3, m), 1);
  if (a_block >= 1) {
    for (std::int64_t alpha = 0; alpha < 2 * uv; ++alpha)
      for (std::int64_t beta = 0; beta < uv; ++beta)
        out.finite_block.tuples.push_back(
            {two_finite, {a_block + alpha, 1 + beta}});
  } else {
    out.finite_block.applicable = false;
  }
  return out;
}

PureGapBox many_finite_box(const KummerCurve& curve, const UParameter& u,
                           std::int64_t s) {
  validate_u(curve, u);
  const std::int64_t r = curve.r();
  if (s < 1 || s >= r)
    throw Error(ErrorCode::kSOutOfRange, "need 1 <= s < r");
  const std::int64_t uv = u.value();
  const std::int64_t first = add(mul(r - s - 1, curve.m()), 1);
  PureGapBox box{{false, s}, {}, {}};
  box.low.assign(static_cast<std::size_t>(s), 1);
  box.low[0] = first;
  box.high.push_back(add(first, mul(s, uv) - 1));
  for (std::int64_t i = 2; i <= s; ++i) box.high.push_back(mul(s + 1 - i, uv));
  return box;
}

PureGapBox many_infty_box(const KummerCurve& curve, const UParameter& u,
                          std::int64_t s) {
  validate_u(curve, u);
  const std::int64_t r = curve.r();
  if (s < 1 || s >= r - 1)
    throw Error(ErrorCode::kSOutOfRange, "need 1 <= s < r - 1");
  const std::int64_t uv = u.value();
  const std::int64_t first = sub(mul(r - s - 1, curve.m()), r);
  PureGapBox box{{true, s}, {}, {}};
  box.low.assign(static_cast<std::size_t>(s) + 1, 1);
  box.low[0] = first;
  box.high.push_back(add(first, s));
  for (std::int64_t i = 1; i <= s; ++i) box.high.push_back(mul(i, uv));
  return box;
}

void for_each_point(const PureGapBox& box, const PureGapVisitor& visit) {
  const std::size_t k = box.low.size();
  if (k == 0 || box.high.size() != k ||
      static_cast<std::int64_t>(k) != box.signature.arity())
    throw Error(ErrorCode::kInvalidArgument,
                "box corners must match the signature arity");
  for (std::size_t i = 0; i < k; ++i)
    if (box.low[i] > box.high[i])
      throw Error(ErrorCode::kInvalidArgument, "box needs low <= high");

  std::vector<std::int64_t> point = box.low;
  while (true) {
    visit(point);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (point[i] < box.high[i]) {
        ++point[i];
        break;
      }
      point[i] = box.low[i];
      if (i == 0) return;
    }
  }
}

void for_each_many_finite(const KummerCurve& curve, const UParameter& u,
                          std::int64_t s, const PureGapVisitor& visit) {
  for_each_point(many_finite_box(curve, u, s), visit);
}

void for_each_many_infty(const KummerCurve& curve, const UParameter& u,
                         std::int64_t s, const PureGapVisitor& visit) {
  for_each_point(many_infty_box(curve, u, s), visit);
}

namespace {

PureGapFamily collect(std::string label, const PureGapBox& box) {
  PureGapFamily family{std::move(label), box.signature, true, {}};
  for_each_point(box, [&](std::span<const std::int64_t> p) {
    family.tuples.push_back({box.signature, {p.begin(), p.end()}});
  });
  return family;
}

}  // namespace

PureGapFamily family_many_finite(const KummerCurve& curve, const UParameter& u,
                                 std::int64_t s) {
  return collect("many-finite s=" + std::to_string(s),
                 many_finite_box(curve, u, s));
}

PureGapFamily family_many_infty(const KummerCurve& curve, const UParameter& u,
                                std::int64_t s) {
  return collect("many-infty s=" + std::to_string(s),
                 many_infty_box(curve, u, s));
}

bool verify_box(const KummerCurve& curve, const PureGapBox& box) {
  bool all_pure = true;
  // for_each_point has no early exit; the flag short-circuits the checks.
  for_each_point(box, [&](std::span<const std::int64_t> p) {
    if (all_pure && !check_pure(curve, box.signature, p)) all_pure = false;
  });
  return all_pure;
}

std::vector<PureGapTuple> enumerate_pure_gaps(
    const KummerCurve& curve, const PlaceSignature& signature,
    std::optional<std::int64_t> bound, PureGapMode mode) {
  if (signature.finite_count < 0 || signature.arity() < 1)
    throw Error(ErrorCode::kInvalidArgument, "empty place signature");
  require_finite_count(curve, signature.finite_count);

  std::int64_t limit = 2 * curve.genus() - 1;
  if (bound) limit = std::min(limit, *bound);

  const auto places = signature.places();
  const auto k = static_cast<std::size_t>(signature.arity());
  std::vector<PureGapTuple> out;
  std::vector<std::int64_t> tuple(k, 0);

  auto test = [&]() {
    return mode == PureGapMode::kOracle
               ? is_pure_gap(curve, places, tuple)
               : check_pure(curve, signature, tuple);
  };

  // Depth-first in lexicographic order over positive tuples with sum <= limit.
  auto recurse = [&](auto&& self, std::size_t depth,
                     std::int64_t remaining) -> void {
    const auto still_needed = static_cast<std::int64_t>(k - depth - 1);
    for (std::int64_t v = 1; v <= remaining - still_needed; ++v) {
      tuple[depth] = v;
      if (depth + 1 == k) {
        if (test()) out.push_back({signature, tuple});
      } else {
        self(self, depth + 1, remaining - v);
      }
    }
  };
  if (limit >= static_cast<std::int64_t>(k)) recurse(recurse, 0, limit);
  return out;
}

PureGapBox grow_box(const KummerCurve& curve, const PlaceSignature& signature,
                    std::span<const std::int64_t> seed) {
  PureGapBox box{signature, {seed.begin(), seed.end()},
                 {seed.begin(), seed.end()}};
  if (!verify_box(curve, box))
    throw Error(ErrorCode::kBoxNotPure, "seed is not a pure gap");
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < box.high.size(); ++i) {
      // Only the new face needs checking.
      PureGapBox face = box;
      face.low[i] = face.high[i] = box.high[i] + 1;
      if (verify_box(curve, face)) {
        box.high[i] += 1;
        grew = true;
      }
    }
  }
  return box;
}

}  // namespace kummer
