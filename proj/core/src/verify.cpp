#include "kummer/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "kummer/error.hpp"
#include "kummer/rr_oracle.hpp"

namespace kummer {

std::vector<KummerCurve> curves_up_to_genus(std::int64_t max_genus) {
  std::vector<KummerCurve> out;
  if (max_genus < 1) return out;
  // 2g = (m-1)(r-1) with r >= 2 bounds m - 1 by 2g.
  for (std::int64_t m = 2; m <= 2 * max_genus + 1; ++m)
    for (std::int64_t r = 2; (m - 1) * (r - 1) <= 2 * max_genus; ++r)
      if (std::gcd(m, r) == 1) out.emplace_back(m, r);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.genus(), a.m(), a.r()) <
           std::tuple(b.genus(), b.m(), b.r());
  });
  return out;
}

std::int64_t brute_force_two_point_gap_count(const KummerCurve& curve,
                                             TwoPointFlavor flavor) {
  const auto [p, q] = flavor_places(flavor);
  const std::array<Place, 2> places{p, q};
  const std::int64_t top = 2 * curve.genus() - 1;
  std::int64_t count = 0;
  for (std::int64_t a = 0; a <= top; ++a)
    for (std::int64_t b = 0; b <= top; ++b) {
      const std::array<std::int64_t, 2> tuple{a, b};
      if (is_gap(curve, places, tuple)) ++count;
    }
  return count;
}

std::vector<PureGapFamily> all_families(const KummerCurve& curve,
                                        const UParameter& u) {
  std::vector<PureGapFamily> out;
  auto two = family_two_point(curve, u);
  out.push_back(std::move(two.infty_single));
  out.push_back(std::move(two.infty_column));
  out.push_back(std::move(two.finite_block));
  for (std::int64_t s = 1; s < curve.r(); ++s)
    out.push_back(family_many_finite(curve, u, s));
  for (std::int64_t s = 1; s < curve.r() - 1; ++s)
    out.push_back(family_many_infty(curve, u, s));
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckSummary& c) { return c.failures == 0; });
}

namespace {

const char* flavor_name(TwoPointFlavor flavor) {
  return flavor == TwoPointFlavor::kFiniteFinite ? "P1,P2" : "Pinf,P1";
}

class Recorder {
 public:
  Recorder(VerifyReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  CheckSummary& check(const std::string& name) {
    for (auto& c : report_.checks)
      if (c.name == name) return c;
    report_.checks.push_back({name, 0, 0});
    return report_.checks.back();
  }

  void pass(const std::string& name) { ++check(name).cases; }

  void fail(Witness w) {
    auto& c = check(w.check);
    ++c.cases;
    ++c.failures;
    if (static_cast<std::size_t>(c.failures) <= cap_)
      report_.witnesses.push_back(std::move(w));
  }

  void expect(bool ok, const std::string& name, const KummerCurve& curve,
              std::optional<std::int64_t> s, std::vector<std::int64_t> tuple,
              const std::string& detail) {
    if (ok)
      pass(name);
    else
      fail({name, curve.m(), curve.r(), s, std::move(tuple), detail});
  }

 private:
  VerifyReport& report_;
  std::size_t cap_;
};

void check_gamma_and_counts(const KummerCurve& curve,
                            const VerifySubjects& subjects, Recorder& rec) {
  for (auto flavor :
       {TwoPointFlavor::kFiniteFinite, TwoPointFlavor::kInftyFinite}) {
    const auto [p, q] = flavor_places(flavor);
    const auto gaps_p = one_point_gaps(curve, p);
    const auto gaps_q = one_point_gaps(curve, q);
    const GammaSet gamma = subjects.gamma(curve, flavor);
    const std::string tag = std::string(" ") + flavor_name(flavor);

    rec.expect(static_cast<std::int64_t>(gamma.pairs.size()) == curve.genus(),
               "gamma-size" + tag, curve, std::nullopt, {},
               "|Gamma| = " + std::to_string(gamma.pairs.size()) +
                   ", g = " + std::to_string(curve.genus()));

    std::vector<std::int64_t> firsts, seconds;
    for (const auto& [a, b] : gamma.pairs) {
      firsts.push_back(a);
      seconds.push_back(b);
    }
    std::sort(firsts.begin(), firsts.end());
    std::sort(seconds.begin(), seconds.end());
    rec.expect(firsts == gaps_p && seconds == gaps_q, "gamma-projection" + tag,
               curve, std::nullopt, {},
               "projections differ from the one-point gap sets");

    const std::array<Place, 2> places{p, q};
    for (const auto& [a, b] : gamma.pairs) {
      const std::array<std::int64_t, 2> t{a, b};
      rec.expect(in_semigroup(curve, places, t), "gamma-in-semigroup" + tag,
                 curve, std::nullopt, {a, b}, "pair is a gap, not in H");
    }

    const std::int64_t brute = brute_force_two_point_gap_count(curve, flavor);
    const TwoPointGapCount homma = subjects.two_point_count(curve, flavor);
    std::ostringstream detail;
    detail << "homma " << homma.total << " (" << homma.sum_gaps_first << "+"
           << homma.sum_gaps_second << "-" << homma.inversions
           << "), brute force " << brute;
    rec.expect(homma.total == homma.sum_gaps_first + homma.sum_gaps_second -
                                  homma.inversions &&
                   homma.total == brute,
               "homma-count" + tag, curve, std::nullopt, {}, detail.str());

    if (UParameter::try_from(curve)) {
      const ClosedFormCounts closed = subjects.closed_form(curve);
      const std::int64_t value = flavor == TwoPointFlavor::kFiniteFinite
                                     ? closed.finite_finite
                                     : closed.infty_finite;
      rec.expect(value == brute, "closed-form-count" + tag, curve,
                 std::nullopt, {},
                 "closed form " + std::to_string(value) + ", brute force " +
                     std::to_string(brute));
    }
  }
}

void check_characterization(const KummerCurve& curve,
                            const VerifyOptions& options,
                            const VerifySubjects& subjects, Recorder& rec) {
  const std::int64_t s_max = std::min(curve.r(), options.max_finite_places);
  for (std::int64_t s = 1; s <= s_max; ++s)
    for (bool with_infty : {false, true}) {
      const PlaceSignature sig{with_infty, s};
      const auto places = sig.places();
      const std::string name =
          with_infty ? "characterization Pinf+finite" : "characterization finite";
      // Oracle enumeration, then compare the characterization tuple by tuple.
      const auto pure = enumerate_pure_gaps(curve, sig, std::nullopt,
                                            PureGapMode::kOracle);
      std::set<std::vector<std::int64_t>> oracle_set;
      for (const auto& t : pure) oracle_set.insert(t.entries);

      const auto k = static_cast<std::size_t>(sig.arity());
      // Pure gaps satisfy sum(n_i - 1) <= 2g - 2.
      const std::int64_t limit =
          2 * curve.genus() - 2 + static_cast<std::int64_t>(k);
      std::vector<std::int64_t> tuple(k);
      auto recurse = [&](auto&& self, std::size_t depth,
                         std::int64_t remaining) -> void {
        const auto needed = static_cast<std::int64_t>(k - depth - 1);
        for (std::int64_t v = 1; v <= remaining - needed; ++v) {
          tuple[depth] = v;
          if (depth + 1 < k) {
            self(self, depth + 1, remaining - v);
            continue;
          }
          const bool expected = oracle_set.count(tuple) > 0;
          const bool got = subjects.characterization(curve, sig, tuple);
          rec.expect(expected == got, name, curve, s, tuple,
                     std::string("oracle ") + (expected ? "pure" : "not pure") +
                         ", characterization " + (got ? "pure" : "not pure"));
        }
      };
      if (limit >= static_cast<std::int64_t>(k)) recurse(recurse, 0, limit);
    }
}

void check_families(const KummerCurve& curve, const UParameter& u,
                    const VerifySubjects& subjects, Recorder& rec) {
  const auto families = subjects.families ? subjects.families(curve, u)
                                          : all_families(curve, u);
  for (const auto& family : families) {
    const auto places = family.signature.places();
    for (const auto& t : family.tuples) {
      bool ok = std::all_of(t.entries.begin(), t.entries.end(),
                            [](std::int64_t a) { return a >= 1; }) &&
                is_pure_gap(curve, places, t.entries);
      rec.expect(ok, "family-soundness", curve, family.signature.finite_count,
                 t.entries, "family " + family.label + " tuple is not pure");
    }
  }
}

void check_defects(const KummerCurve& curve, const UParameter& u,
                   const VerifySubjects& subjects, Recorder& rec) {
  auto one = [&](const DefectBound& bound, const std::string& name,
                 std::int64_t s) {
    std::int64_t deg_g = 0;
    for (std::size_t i = 0; i < bound.box.low.size(); ++i)
      deg_g += bound.box.low[i] + bound.box.high[i] - 1;
    if (deg_g <= 2 * curve.genus() - 2) return;  // outside every window
    const std::int64_t n = 2 * deg_g + 1;
    try {
      const CodeDesign design = design_from_box(curve, bound.box, n);
      rec.expect(design.delta_bound == bound.bound, name, curve, s,
                 bound.box.low,
                 "defect " + std::to_string(design.delta_bound) +
                     ", closed form " + std::to_string(bound.bound));
    } catch (const Error& e) {
      rec.fail({name, curve.m(), curve.r(), s, bound.box.low, e.what()});
    }
  };
  for (std::int64_t s = 1; s <= curve.r() - 1; ++s)
    one(subjects.defect_finite(curve, u, s), "defect-bound finite", s);
  for (std::int64_t s = 1; s <= curve.r() - 2; ++s)
    one(subjects.defect_infty(curve, u, s), "defect-bound Pinf+finite", s);
}

void check_oracle_properties(const std::vector<KummerCurve>& curves,
                             const VerifyOptions& options, Recorder& rec) {
  for (const auto& curve : curves) {
    rec.expect(riemann_roch_dimension(curve, Divisor{}) == 1, "oracle l(0)=1",
               curve, std::nullopt, {}, "l(0) != 1");
    for (std::int64_t i = 0; i <= curve.r(); ++i) {
      const Place place = i == 0 ? Place::infinity() : Place::finite(i);
      const auto gaps = one_point_gaps(curve, place);
      rec.expect(static_cast<std::int64_t>(gaps.size()) == curve.genus(),
                 "oracle one-point gap count", curve, std::nullopt, {i},
                 place.to_string() + " has " + std::to_string(gaps.size()) +
                     " gaps");
    }
  }

  std::mt19937_64 rng(options.seed);
  for (std::int64_t n = 0; n < options.random_samples; ++n) {
    const auto& curve = curves[std::uniform_int_distribution<std::size_t>(
        0, curves.size() - 1)(rng)];
    const std::int64_t g = curve.genus();
    std::uniform_int_distribution<std::int64_t> coef(-2 * g - 2, 2 * g + 4);
    std::vector<std::int64_t> d(static_cast<std::size_t>(curve.r()) + 1, 0);
    for (auto& c : d)
      if (rng() % 2 == 0) c = coef(rng);
    const std::int64_t deg = std::accumulate(d.begin(), d.end(),
                                             std::int64_t{0});
    const std::int64_t dim = riemann_roch_dimension(curve, d);

    if (deg > 2 * g - 2)
      rec.expect(dim == deg + 1 - g, "oracle riemann-roch", curve,
                 std::nullopt, d, "l(D) = " + std::to_string(dim));
    if (deg < 0)
      rec.expect(dim == 0, "oracle negative degree", curve, std::nullopt, d,
                 "l(D) = " + std::to_string(dim));

    const auto idx = std::uniform_int_distribution<std::size_t>(
        0, d.size() - 1)(rng);
    d[idx] += 1;
    const std::int64_t step = riemann_roch_dimension(curve, d) - dim;
    d[idx] -= 1;
    rec.expect(step == 0 || step == 1, "oracle monotonicity", curve,
               std::nullopt, d, "step " + std::to_string(step));
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options,
                              const VerifySubjects& subjects) {
  VerifyReport report;
  Recorder rec(report, options.max_witnesses_per_check);
  const auto curves = curves_up_to_genus(options.max_genus);
  for (const auto& curve : curves) {
    check_gamma_and_counts(curve, subjects, rec);
    check_characterization(curve, options, subjects, rec);
    if (auto u = UParameter::try_from(curve)) {
      check_families(curve, *u, subjects, rec);
      check_defects(curve, *u, subjects, rec);
    }
  }
  if (!curves.empty()) check_oracle_properties(curves, options, rec);
  return report;
}

}  // namespace kummer
