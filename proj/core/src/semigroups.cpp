#include "kummer/semigroups.hpp"

#include <algorithm>
#include <array>

#include "kummer/checked.hpp"
#include "kummer/error.hpp"
#include "kummer/rr_oracle.hpp"

namespace kummer {

using checked::add;
using checked::ceil_div;
using checked::mul;
using checked::sub;

std::pair<Place, Place> flavor_places(TwoPointFlavor flavor) {
  if (flavor == TwoPointFlavor::kFiniteFinite)
    return {Place::finite(1), Place::finite(2)};
  return {Place::infinity(), Place::finite(1)};
}

GammaSet gamma_finite_finite(const KummerCurve& curve) {
  const std::int64_t m = curve.m();
  const std::int64_t r = curve.r();
  GammaSet gamma{{}, TwoPointFlavor::kFiniteFinite};
  for (std::int64_t j = 1 + m / r; j <= m - 1; ++j) {
    const std::int64_t c = ceil_div(mul(r, j), m);
    for (std::int64_t i = 1; i <= c - 1; ++i)
      gamma.pairs.emplace_back(sub(mul(m, i), j), sub(mul(m, c - i), j));
  }
  std::sort(gamma.pairs.begin(), gamma.pairs.end());
  return gamma;
}

GammaSet gamma_infty_finite(const KummerCurve& curve) {
  const std::int64_t m = curve.m();
  const std::int64_t r = curve.r();
  GammaSet gamma{{}, TwoPointFlavor::kInftyFinite};
  const std::int64_t mr = mul(m, r);
  for (std::int64_t i = 1; i <= m - 1 - m / r; ++i) {
    const std::int64_t j_max = r - 1 - mul(r, i) / m;
    for (std::int64_t j = 1; j <= j_max; ++j)
      gamma.pairs.emplace_back(sub(sub(mr, mul(m, j)), mul(r, i)),
                               add(i, mul(m, j - 1)));
  }
  std::sort(gamma.pairs.begin(), gamma.pairs.end());
  return gamma;
}

GammaSet gamma_set(const KummerCurve& curve, TwoPointFlavor flavor) {
  return flavor == TwoPointFlavor::kFiniteFinite ? gamma_finite_finite(curve)
                                                 : gamma_infty_finite(curve);
}

std::vector<std::int64_t> one_point_gaps(const KummerCurve& curve,
                                         Place place) {
  if (place.index() > curve.r())
    throw Error(ErrorCode::kUnsupportedPlace,
                place.to_string() + " is not a totally ramified place");
  const std::array<Place, 1> places{place};
  std::vector<std::int64_t> gaps;
  // No gap exceeds 2g - 1.
  const std::int64_t top = 2 * curve.genus() - 1;
  for (std::int64_t n = 1; n <= top; ++n) {
    const std::array<std::int64_t, 1> tuple{n};
    if (is_gap(curve, places, tuple)) gaps.push_back(n);
  }
  return gaps;
}

std::int64_t inversions(const GammaSet& gamma) {
  std::int64_t count = 0;
  const auto& p = gamma.pairs;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[i].first < p[j].first && p[i].second > p[j].second) ++count;
  return count;
}

TwoPointGapCount count_gaps_two_points(const KummerCurve& curve,
                                       TwoPointFlavor flavor) {
  const auto [first, second] = flavor_places(flavor);
  TwoPointGapCount count{};
  for (auto n : one_point_gaps(curve, first))
    count.sum_gaps_first = add(count.sum_gaps_first, n);
  for (auto n : one_point_gaps(curve, second))
    count.sum_gaps_second = add(count.sum_gaps_second, n);
  count.inversions = inversions(gamma_set(curve, flavor));
  count.total =
      sub(add(count.sum_gaps_first, count.sum_gaps_second), count.inversions);
  return count;
}

namespace {

std::int64_t exact_twelfth(std::int64_t numerator) {
  if (numerator % 12 != 0)
    throw Error(ErrorCode::kInvalidArgument,
                "closed-form numerator is not divisible by 12");
  return numerator / 12;
}

}  // namespace

ClosedFormCounts closed_form_counts(const KummerCurve& curve) {
  UParameter u(curve);
  return closed_form_counts(u.value(), curve.r());
}

ClosedFormCounts closed_form_counts(std::int64_t u, std::int64_t r) {
  if (u < 1 || r < 2)
    throw Error(ErrorCode::kInvalidArgument, "need u >= 1 and r >= 2");
  const std::int64_t prefix = mul(mul(u, r), r - 1);
  const std::int64_t ur2 = mul(mul(u, r), r);
  const std::int64_t ur = mul(u, r);
  // 3ur^2 - 5ur + 4r + 4u - 2
  const std::int64_t ff =
      sub(add(add(sub(mul(3, ur2), mul(5, ur)), mul(4, r)), mul(4, u)), 2);
  // 3ur^2 - 3ur + 2r + 2
  const std::int64_t inf =
      add(add(sub(mul(3, ur2), mul(3, ur)), mul(2, r)), 2);
  return {exact_twelfth(mul(prefix, ff)), exact_twelfth(mul(prefix, inf))};
}

ClosedFormPieces closed_form_pieces(std::int64_t u, std::int64_t r) {
  if (u < 1 || r < 2)
    throw Error(ErrorCode::kInvalidArgument, "need u >= 1 and r >= 2");
  const std::int64_t prefix = mul(mul(u, r), r - 1);
  const std::int64_t ur2 = mul(mul(u, r), r);
  const std::int64_t ur = mul(u, r);
  ClosedFormPieces pieces{};
  // ur(r-1)(2r^2u - 2ru + 2r - u - 1) / 12
  pieces.gap_sum_finite = exact_twelfth(
      mul(prefix, sub(sub(add(sub(mul(2, ur2), mul(2, ur)), mul(2, r)), u), 1)));
  // ur(r-1)(2ur^2 - ur + r - 2) / 12
  pieces.gap_sum_infty =
      exact_twelfth(mul(prefix, sub(add(sub(mul(2, ur2), ur), r), 2)));
  // u^2 (r-2)(r-1) r (r+3) / 12
  pieces.inversions_finite_finite =
      exact_twelfth(mul(mul(mul(mul(mul(u, u), r - 2), r - 1), r), r + 3));
  // u (r-1) r (ur^2 + r - u - 5) / 12
  pieces.inversions_infty_finite = exact_twelfth(
      mul(mul(mul(u, r - 1), r), sub(sub(add(ur2, r), u), 5)));
  return pieces;
}

std::vector<IntPair> semigroup_box(const KummerCurve& curve,
                                   TwoPointFlavor flavor, std::int64_t bound) {
  if (bound < 0)
    throw Error(ErrorCode::kInvalidArgument, "bound must be >= 0");
  const auto [first, second] = flavor_places(flavor);
  // H(P) within [0, bound] is the complement of the gap list; all gaps are
  // below 2g.
  auto axis = [&](Place place) {
    std::vector<std::int64_t> members;
    auto gaps = one_point_gaps(curve, place);
    for (std::int64_t n = 0; n <= bound; ++n)
      if (!std::binary_search(gaps.begin(), gaps.end(), n))
        members.push_back(n);
    return members;
  };

  std::vector<IntPair> generators;
  for (auto n : axis(first)) generators.emplace_back(n, 0);
  for (auto n : axis(second)) generators.emplace_back(0, n);
  for (const auto& p : gamma_set(curve, flavor).pairs)
    if (p.first <= bound && p.second <= bound) generators.push_back(p);

  const auto side = static_cast<std::size_t>(bound) + 1;
  std::vector<bool> member(side * side, false);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i; j < generators.size(); ++j) {
      auto [a, b] = lub(generators[i], generators[j]);
      member[static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)] =
          true;
    }

  std::vector<IntPair> out;
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t b = 0; b < side; ++b)
      if (member[a * side + b])
        out.emplace_back(static_cast<std::int64_t>(a),
                         static_cast<std::int64_t>(b));
  return out;
}

}  // namespace kummer
