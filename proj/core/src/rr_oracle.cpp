#include "kummer/rr_oracle.hpp"

#include <algorithm>
#include <string>

#include "kummer/checked.hpp"
#include "kummer/error.hpp"

namespace kummer {
namespace {

// Degree of [D + (y^t)] restricted to F_q(x). Using (y) = sum P_i - r P_inf
// and e = m at every place in the support:
//   floor((a_0 - r t) / m) + sum_{i=1..r} floor((a_i + t) / m).
// Places P_i not covered by `coefficients` have a_i = 0 and contribute
// floor(t / m) = 0.
std::int64_t restricted_degree(const KummerCurve& curve,
                               std::span<const std::int64_t> coefficients,
                               std::int64_t t) {
  const std::int64_t m = curve.m();
  const std::int64_t a0 = coefficients.empty() ? 0 : coefficients[0];
  std::int64_t degree =
      checked::floor_div(checked::sub(a0, checked::mul(curve.r(), t)), m);
  for (std::size_t i = 1; i < coefficients.size(); ++i)
    degree = checked::add(
        degree, checked::floor_div(checked::add(coefficients[i], t), m));
  return degree;
}

std::vector<std::int64_t> dense(const KummerCurve& curve,
                                const Divisor& divisor) {
  std::vector<std::int64_t> out(1, 0);
  for (const auto& [place, coef] : divisor.terms()) {
    if (place.index() > curve.r())
      throw Error(ErrorCode::kUnsupportedPlace,
                  place.to_string() + " is not a totally ramified place of "
                                      "this curve (r = " +
                      std::to_string(curve.r()) + ")");
    auto idx = static_cast<std::size_t>(place.index());
    if (out.size() <= idx) out.resize(idx + 1, 0);
    out[idx] = coef;
  }
  return out;
}

void check_dense(const KummerCurve& curve,
                 std::span<const std::int64_t> coefficients) {
  if (coefficients.size() > static_cast<std::size_t>(curve.r()) + 1)
    throw Error(ErrorCode::kUnsupportedPlace,
                "divisor has more than r finite places");
}

// Places -> dense coefficient vector for the divisor sum tuple[i] places[i].
std::vector<std::int64_t> dense(const KummerCurve& curve,
                                std::span<const Place> places,
                                std::span<const std::int64_t> tuple) {
  if (places.empty() || places.size() != tuple.size())
    throw Error(ErrorCode::kInvalidArgument,
                "places and tuple must be non-empty and of equal length");
  std::int64_t top = 0;
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (places[i].index() > curve.r())
      throw Error(ErrorCode::kUnsupportedPlace,
                  places[i].to_string() + " is not a totally ramified place");
    for (std::size_t j = 0; j < i; ++j)
      if (places[i] == places[j])
        throw Error(ErrorCode::kInvalidArgument, "places must be distinct");
    top = std::max(top, places[i].index());
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t i = 0; i < places.size(); ++i)
    out[static_cast<std::size_t>(places[i].index())] = tuple[i];
  return out;
}

}  // namespace

RestrictionProfile restriction_profile(const KummerCurve& curve,
                                       const Divisor& divisor) {
  auto coefficients = dense(curve, divisor);
  RestrictionProfile profile;
  profile.degrees.reserve(static_cast<std::size_t>(curve.m()));
  for (std::int64_t t = 0; t < curve.m(); ++t)
    profile.degrees.push_back(restricted_degree(curve, coefficients, t));
  return profile;
}

std::int64_t riemann_roch_dimension(const KummerCurve& curve,
                                    const Divisor& divisor) {
  return riemann_roch_dimension(curve, dense(curve, divisor));
}

std::int64_t riemann_roch_dimension(
    const KummerCurve& curve, std::span<const std::int64_t> coefficients) {
  check_dense(curve, coefficients);
  std::int64_t total = 0;
  for (std::int64_t t = 0; t < curve.m(); ++t) {
    std::int64_t degree = restricted_degree(curve, coefficients, t);
    if (degree >= 0) total = checked::add(total, degree + 1);
  }
  return total;
}

bool is_gap(const KummerCurve& curve, std::span<const Place> places,
            std::span<const std::int64_t> tuple) {
  for (auto n : tuple)
    if (n < 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "gap tuple entries must be non-negative");
  auto coefficients = dense(curve, places, tuple);
  const std::int64_t full = riemann_roch_dimension(curve, coefficients);
  for (const Place& place : places) {
    auto idx = static_cast<std::size_t>(place.index());
    --coefficients[idx];
    const std::int64_t lowered = riemann_roch_dimension(curve, coefficients);
    ++coefficients[idx];
    if (lowered == full) return true;
  }
  return false;
}

bool is_pure_gap(const KummerCurve& curve, std::span<const Place> places,
                 std::span<const std::int64_t> tuple) {
  for (auto n : tuple)
    if (n < 1)
      throw Error(ErrorCode::kInvalidArgument,
                  "pure gap tuple entries must be >= 1");
  auto coefficients = dense(curve, places, tuple);
  const std::int64_t full = riemann_roch_dimension(curve, coefficients);
  for (const Place& place : places)
    --coefficients[static_cast<std::size_t>(place.index())];
  return riemann_roch_dimension(curve, coefficients) == full;
}

}  // namespace kummer
