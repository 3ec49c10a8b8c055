#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace kummer {

// Kummer extension y^m = f(x) with f separable of degree r over F_q.
// Only (m, r) enter the gap computations; q is carried for code design.
class KummerCurve {
 public:
  // Throws Error(kInvalidArgument) if m < 2 or r < 2, kNonCoprime if
  // gcd(m, r) != 1, kCharDividesM if q is given and gcd(q, m) != 1.
  KummerCurve(std::int64_t m, std::int64_t r,
              std::optional<std::int64_t> q = std::nullopt);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t r() const noexcept { return r_; }
  const std::optional<std::int64_t>& q() const noexcept { return q_; }

  // (m - 1)(r - 1) / 2.
  std::int64_t genus() const noexcept { return genus_; }

  friend bool operator==(const KummerCurve&, const KummerCurve&) = default;

 private:
  std::int64_t m_;
  std::int64_t r_;
  std::optional<std::int64_t> q_;
  std::int64_t genus_;
};

// P_inf (the pole of x) or one of the finite totally ramified places
// P_1, ..., P_r. Ordered with P_inf first, then by index.
class Place {
 public:
  static constexpr Place infinity() noexcept { return Place(0); }
  // Index is 1-based; range against a curve is checked where a curve is known.
  static Place finite(std::int64_t index);

  constexpr bool is_infinity() const noexcept { return index_ == 0; }
  // 0 for P_inf.
  constexpr std::int64_t index() const noexcept { return index_; }

  friend constexpr auto operator<=>(const Place&, const Place&) = default;

  std::string to_string() const;

 private:
  explicit constexpr Place(std::int64_t index) noexcept : index_(index) {}
  std::int64_t index_;
};

class Divisor {
 public:
  Divisor() = default;

  // Adds coef * place; entries that cancel to zero are removed.
  Divisor& add(Place place, std::int64_t coef);
  std::int64_t coefficient(Place place) const;
  std::int64_t degree() const;
  const std::map<Place, std::int64_t>& terms() const noexcept { return terms_; }

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<Place, std::int64_t> terms_;
};

// u with m = u r + 1; exists iff m = 1 (mod r).
class UParameter {
 public:
  // Throws Error(kNotUrPlusOne) when m is not 1 modulo r.
  explicit UParameter(const KummerCurve& curve);

  static std::optional<UParameter> try_from(const KummerCurve& curve);

  std::int64_t value() const noexcept { return u_; }

 private:
  explicit UParameter(std::int64_t u) : u_(u) {}
  std::int64_t u_;
};

}  // namespace kummer
