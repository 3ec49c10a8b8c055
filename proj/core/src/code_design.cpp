#include "kummer/code_design.hpp"

#include <stdexcept>
#include <string>

#include "kummer/checked.hpp"
#include "kummer/error.hpp"

namespace kummer {

using checked::add;
using checked::mul;
using checked::sub;

CodeDesign design_from_box(const KummerCurve& curve, const PureGapBox& box,
                           std::int64_t n) {
  if (box.low.size() != box.high.size() ||
      static_cast<std::int64_t>(box.low.size()) != box.signature.arity() ||
      box.low.empty())
    throw Error(ErrorCode::kInvalidArgument,
                "box corners must match the signature arity");
  std::int64_t deg_g = 0;
  std::int64_t spread = 0;
  for (std::size_t i = 0; i < box.low.size(); ++i) {
    if (box.low[i] > box.high[i])
      throw Error(ErrorCode::kInvalidArgument, "box needs a_i <= b_i");
    deg_g = add(deg_g, sub(add(box.low[i], box.high[i]), 1));
    spread = add(spread, sub(box.high[i], box.low[i]));
  }
  if (!verify_box(curve, box))
    throw Error(ErrorCode::kBoxNotPure,
                "box contains a tuple that is not a pure gap");

  const std::int64_t g = curve.genus();
  const std::int64_t canonical_degree = 2 * g - 2;
  if (!(canonical_degree < deg_g && deg_g < n))
    throw Error(ErrorCode::kDegreeOutOfRange,
                "degree window violated: need " +
                    std::to_string(canonical_degree) + " < deg G = " +
                    std::to_string(deg_g) + " < n = " + std::to_string(n));

  CodeDesign design{};
  design.n = n;
  design.deg_g = deg_g;
  design.s = box.signature.arity();
  design.with_infty = box.signature.with_infty;
  design.k = sub(add(n, g - 1), deg_g);
  design.d_bound =
      add(add(sub(deg_g, canonical_degree), design.s), spread);
  design.delta_bound = sub(sub(add(n, 1), design.k), design.d_bound);
  return design;
}

namespace {

std::int64_t defect_closed_form(const KummerCurve& curve, const UParameter& u,
                          std::int64_t s) {
  const std::int64_t r = curve.r();
  const std::int64_t numerator =
      sub(mul(mul(u.value(), r), r - 1), mul(mul(u.value(), s), s + 1));
  return numerator / 2;  // both terms are even
}

}  // namespace

DefectBound defect_bound_finite(const KummerCurve& curve, const UParameter& u,
                                std::int64_t s) {
  if (s < 1 || s > curve.r() - 1)
    throw Error(ErrorCode::kSOutOfRange, "need 1 <= s <= r - 1");
  return {defect_closed_form(curve, u, s), many_finite_box(curve, u, s)};
}

DefectBound defect_bound_infty(const KummerCurve& curve, const UParameter& u,
                               std::int64_t s) {
  if (s < 1 || s > curve.r() - 2)
    throw Error(ErrorCode::kSOutOfRange, "need 1 <= s <= r - 2");
  return {defect_closed_form(curve, u, s) - s - 1, many_infty_box(curve, u, s)};
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;  // q itself is prime
}

std::vector<HermitianRow> hermitian_table(std::int64_t q) {
  if (q < 3 || !is_prime_power(q))
    throw Error(ErrorCode::kInvalidArgument,
                "q must be a prime power >= 3");
  const KummerCurve curve(q + 1, q, mul(q, q));
  const UParameter u(curve);
  const std::int64_t g = curve.genus();
  const std::int64_t q2 = mul(q, q);
  const std::int64_t q3 = mul(q2, q);

  std::vector<HermitianRow> rows;
  for (std::int64_t s = 1; s <= q - 1; ++s) {
    const std::int64_t n = q3 + 1 - s;
    const std::int64_t deg_g =
        add(mul(mul(2, q - s - 1), q + 1), s * (s + 1) / 2);
    if (!(2 * g - 2 < deg_g && deg_g < n)) continue;

    // k = q^3 - (3/2)q^2 + (2s - 1/2)q - (s^2 - s)/2 + 2, doubled to stay
    // integral.
    const std::int64_t twice_k =
        add(sub(sub(add(mul(2, q3), mul(4 * s - 1, q)), mul(3, q2)),
                s * s - s),
            4);
    const HermitianRow row{q2, s, n, twice_k / 2,
                           add(sub(q2, mul(2 * s - 1, q)), s * s - s)};

    const CodeDesign design =
        design_from_box(curve, many_finite_box(curve, u, s), n);
    if (design.deg_g != deg_g || design.k != row.k ||
        design.d_bound != row.d_bound)
      throw std::logic_error("Hermitian closed form disagrees with the box "
                             "design at q = " + std::to_string(q) +
                             ", s = " + std::to_string(s));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kummer
