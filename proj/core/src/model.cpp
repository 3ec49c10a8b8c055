#include "kummer/model.hpp"

#include <numeric>

#include "kummer/checked.hpp"
#include "kummer/error.hpp"

namespace kummer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonCoprime: return "NonCoprime";
    case ErrorCode::kCharDividesM: return "CharDividesM";
    case ErrorCode::kUnsupportedPlace: return "UnsupportedPlace";
    case ErrorCode::kNotUrPlusOne: return "NotUrPlusOne";
    case ErrorCode::kTooManyPlaces: return "TooManyPlaces";
    case ErrorCode::kSOutOfRange: return "SOutOfRange";
    case ErrorCode::kBoxNotPure: return "BoxNotPure";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

KummerCurve::KummerCurve(std::int64_t m, std::int64_t r,
                         std::optional<std::int64_t> q)
    : m_(m), r_(r), q_(q) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "m must be >= 2");
  if (r < 2) throw Error(ErrorCode::kInvalidArgument, "r must be >= 2");
  if (std::gcd(m, r) != 1)
    throw Error(ErrorCode::kNonCoprime, "gcd(m,r) must be 1");
  if (q) {
    if (*q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be >= 2");
    if (std::gcd(*q, m) != 1)
      throw Error(ErrorCode::kCharDividesM,
                  "the characteristic must not divide m (gcd(q,m) must be 1)");
  }
  std::int64_t twice = checked::mul(m - 1, r - 1);
  if (twice % 2 != 0)
    throw Error(ErrorCode::kInvalidArgument, "(m-1)(r-1) must be even");
  genus_ = twice / 2;
}

Place Place::finite(std::int64_t index) {
  if (index < 1)
    throw Error(ErrorCode::kUnsupportedPlace,
                "finite place index must be >= 1");
  return Place(index);
}

std::string Place::to_string() const {
  return is_infinity() ? std::string("P_inf") : "P_" + std::to_string(index_);
}

Divisor& Divisor::add(Place place, std::int64_t coef) {
  std::int64_t next = checked::add(coefficient(place), coef);
  if (next == 0)
    terms_.erase(place);
  else
    terms_[place] = next;
  return *this;
}

std::int64_t Divisor::coefficient(Place place) const {
  auto it = terms_.find(place);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t total = 0;
  for (const auto& [place, coef] : terms_) total = checked::add(total, coef);
  return total;
}

UParameter::UParameter(const KummerCurve& curve) {
  auto u = try_from(curve);
  if (!u)
    throw Error(ErrorCode::kNotUrPlusOne, "m must equal u*r + 1");
  u_ = u->value();
}

std::optional<UParameter> UParameter::try_from(const KummerCurve& curve) {
  if ((curve.m() - 1) % curve.r() != 0) return std::nullopt;
  return UParameter((curve.m() - 1) / curve.r());
}

}  // namespace kummer
