// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "kummer/code_design.hpp"
#include "kummer/error.hpp"
#include "kummer/model.hpp"
#include "kummer/pure_gaps.hpp"
#include "kummer/rr_oracle.hpp"
#include "kummer/semigroups.hpp"
#include "kummer/verify.hpp"
#include "support/oracles.hpp"

namespace {

using namespace kummer;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::int64_t cases = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::string curve_tag(const KummerCurve& c) {
  return "m=" + std::to_string(c.m()) + " r=" + std::to_string(c.r());
}

std::vector<KummerCurve> ur_plus_one(std::int64_t max_u, std::int64_t max_r) {
  std::vector<KummerCurve> out;
  for (std::int64_t u = 1; u <= max_u; ++u)
    for (std::int64_t r = 2; r <= max_r; ++r)
      out.emplace_back(u * r + 1, r);  // gcd(ur + 1, r) = 1 always
  return out;
}

// Exact two-point gap count over [lo, 2g-1]^2 straight from the oracle.
std::int64_t brute_count(const KummerCurve& c, TwoPointFlavor flavor,
                         std::int64_t lo) {
  const auto [p, q] = flavor_places(flavor);
  const std::array<Place, 2> places{p, q};
  std::int64_t count = 0;
  for (std::int64_t a = lo; a < 2 * c.genus(); ++a)
    for (std::int64_t b = lo; b < 2 * c.genus(); ++b) {
      const std::array<std::int64_t, 2> t{a, b};
      if (is_gap(c, places, t)) ++count;
    }
  return count;
}

Outcome table_one() {
  struct Row {
    std::int64_t q_sq, s, n, k, d;
  };
  const std::vector<Row> published{
      {16, 1, 64, 48, 12},    {16, 2, 63, 55, 6},     {25, 1, 125, 97, 20},
      {25, 2, 124, 106, 12},  {49, 2, 342, 295, 30},  {49, 3, 341, 307, 20},
      {64, 1, 512, 430, 56},  {64, 2, 511, 445, 42},  {64, 3, 510, 459, 30},
      {64, 4, 509, 472, 20},  {81, 3, 727, 656, 42},  {81, 4, 726, 671, 30}};
  std::set<std::string> produced;
  for (std::int64_t q : {4, 5, 7, 8, 9}) {
    const std::string qs = std::to_string(q);
    const std::array<const char*, 7> argv{"kummer-gaps", "design", "--hermitian",
                                          "--q",         qs.c_str(), "--format",
                                          "csv"};
    std::ostringstream out, err;
    if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0)
      produced.insert("error " + err.str());
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) produced.insert(line);
  }
  Outcome o;
  for (const auto& r : published) {
    std::ostringstream row;
    row << r.q_sq << ',' << r.s << ',' << r.n << ',' << r.k << ',' << r.d;
    o.expect(produced.count(row.str()) == 1, "missing row " + row.str());
  }
  return o;
}

Outcome closed_form_counts_vs_oracle() {
  Outcome o;
  for (const auto& c : ur_plus_one(3, 7)) {
    const ClosedFormCounts closed = closed_form_counts(c);
    for (auto flavor :
         {TwoPointFlavor::kFiniteFinite, TwoPointFlavor::kInftyFinite}) {
      const std::int64_t value = flavor == TwoPointFlavor::kFiniteFinite
                                     ? closed.finite_finite
                                     : closed.infty_finite;
      // G(P,Q) lives in N_0^2: the two axes hold exactly the g + g one-point
      // gaps, the open quadrant [1, 2g-1]^2 holds the rest.
      const std::int64_t with_axes = brute_count(c, flavor, 0);
      const std::int64_t interior = brute_count(c, flavor, 1);
      o.expect(value == with_axes && interior == value - 2 * c.genus(),
               curve_tag(c) + " closed " + std::to_string(value) +
                   " brute " + std::to_string(with_axes) + " interior " +
                   std::to_string(interior));
    }
  }
  return o;
}

Outcome gamma_sets() {
  Outcome o;
  for (const auto& c : curves_up_to_genus(15)) {
    for (auto flavor :
         {TwoPointFlavor::kFiniteFinite, TwoPointFlavor::kInftyFinite}) {
      const auto [p, q] = flavor_places(flavor);
      const GammaSet gamma = gamma_set(c, flavor);
      const auto gaps_p = one_point_gaps(c, p);
      const auto gaps_q = one_point_gaps(c, q);
      std::vector<std::int64_t> firsts, seconds;
      for (const auto& [a, b] : gamma.pairs) {
        firsts.push_back(a);
        seconds.push_back(b);
      }
      std::sort(firsts.begin(), firsts.end());
      std::sort(seconds.begin(), seconds.end());
      o.expect(static_cast<std::int64_t>(gamma.pairs.size()) == c.genus(),
               curve_tag(c) + " |Gamma| != g");
      o.expect(firsts == gaps_p && seconds == gaps_q,
               curve_tag(c) + " projection is not a bijection of gap sets");
      const std::array<Place, 2> places{p, q};
      for (const auto& [a, b] : gamma.pairs) {
        const std::array<std::int64_t, 2> t{a, b};
        o.expect(in_semigroup(c, places, t),
                 curve_tag(c) + " pair (" + std::to_string(a) + "," +
                     std::to_string(b) + ") not in H");
      }
      o.expect(gamma.pairs == testing::gamma_by_definition(c, p, q),
               curve_tag(c) + " Gamma differs from its definition");
    }
  }
  return o;
}

Outcome homma_assembly() {
  Outcome o;
  for (const auto& c : curves_up_to_genus(15))
    for (auto flavor :
         {TwoPointFlavor::kFiniteFinite, TwoPointFlavor::kInftyFinite}) {
      const auto [p, q] = flavor_places(flavor);
      const auto gp = one_point_gaps(c, p);
      const auto gq = one_point_gaps(c, q);
      const TwoPointGapCount count = count_gaps_two_points(c, flavor);
      const std::int64_t sums =
          std::accumulate(gp.begin(), gp.end(), std::int64_t{0}) +
          std::accumulate(gq.begin(), gq.end(), std::int64_t{0});
      o.expect(count.total == sums - count.inversions &&
                   count.total == brute_count(c, flavor, 0),
               curve_tag(c) + " total " + std::to_string(count.total));
    }
  return o;
}

Outcome characterization() {
  Outcome o;
  for (const auto& c : curves_up_to_genus(12)) {
    for (std::int64_t s = 1; s <= std::min<std::int64_t>(c.r(), 3); ++s)
      for (bool with_infty : {false, true}) {
        const PlaceSignature sig{with_infty, s};
        const auto places = sig.places();
        const auto k = static_cast<std::size_t>(sig.arity());
        // Covers the required sum <= 2g - 1 and every possible pure gap.
        const std::int64_t limit =
            std::max<std::int64_t>(2 * c.genus() - 1,
                                   2 * c.genus() - 2 + static_cast<std::int64_t>(k));
        std::vector<std::int64_t> t(k);
        std::function<void(std::size_t, std::int64_t)> rec =
            [&](std::size_t depth, std::int64_t remaining) {
              const auto needed = static_cast<std::int64_t>(k - depth - 1);
              for (std::int64_t v = 1; v <= remaining - needed; ++v) {
                t[depth] = v;
                if (depth + 1 < k) {
                  rec(depth + 1, remaining - v);
                  continue;
                }
                const bool oracle = is_pure_gap(c, places, t);
                const bool closed = with_infty ? check_pure_with_infty(c, t)
                                               : check_pure_finite(c, t);
                if (oracle != closed) {
                  std::ostringstream msg;
                  msg << curve_tag(c) << " s=" << s
                      << (with_infty ? " with P_inf" : "") << " tuple "
                      << testing::join_tuple(t);
                  o.expect(false, msg.str());
                } else {
                  ++o.cases;
                }
              }
            };
        if (limit >= static_cast<std::int64_t>(k)) rec(0, limit);
      }
  }
  return o;
}

Outcome family_soundness() {
  Outcome o;
  for (const auto& c : ur_plus_one(3, 6)) {
    const UParameter u(c);
    for (const auto& family : all_families(c, u)) {
      const auto places = family.signature.places();
      for (const auto& t : family.tuples)
        o.expect(is_pure_gap(c, places, t.entries),
                 curve_tag(c) + " family " + family.label + " tuple " +
                     testing::join_tuple(t.entries));
    }
  }
  return o;
}

Outcome defect_bounds() {
  Outcome o;
  std::int64_t boxes = 0;
  for (const auto& c : ur_plus_one(3, 8)) {
    const UParameter u(c);
    auto one = [&](const DefectBound& bound, std::int64_t s, const char* kind) {
      std::int64_t deg_g = 0;
      for (std::size_t i = 0; i < bound.box.low.size(); ++i)
        deg_g += bound.box.low[i] + bound.box.high[i] - 1;
      if (deg_g <= 2 * c.genus() - 2) return;
      ++boxes;
      const std::string tag =
          curve_tag(c) + " " + kind + " s=" + std::to_string(s);
      try {
        const CodeDesign d = design_from_box(c, bound.box, 2 * deg_g + 1);
        o.expect(d.n + 1 - d.k - d.d_bound == bound.bound,
                 tag + " defect " + std::to_string(d.delta_bound) +
                     " closed form " + std::to_string(bound.bound));
      } catch (const Error& e) {
        o.expect(false, tag + " " + e.what());
      }
    };
    for (std::int64_t s = 1; s <= c.r() - 1; ++s) {
      const DefectBound b = defect_bound_finite(c, u, s);
      o.expect(b.bound == (u.value() * c.r() * (c.r() - 1) -
                           u.value() * s * (s + 1)) / 2,
               curve_tag(c) + " finite closed form");
      one(b, s, "finite");
    }
    for (std::int64_t s = 1; s <= c.r() - 2; ++s) {
      const DefectBound b = defect_bound_infty(c, u, s);
      o.expect(b.bound == (u.value() * c.r() * (c.r() - 1) -
                           u.value() * s * (s + 1)) / 2 - s - 1,
               curve_tag(c) + " infinity closed form");
      one(b, s, "infinity");
    }
  }
  o.expect(boxes > 0, "no canonical box fits a degree window");
  return o;
}

Outcome oracle_properties() {
  Outcome o;
  const auto curves = curves_up_to_genus(12);
  for (const auto& c : curves) {
    o.expect(riemann_roch_dimension(c, Divisor{}) == 1,
             curve_tag(c) + " l(0) != 1");
    for (std::int64_t i = 0; i <= c.r(); ++i) {
      const Place place = i == 0 ? Place::infinity() : Place::finite(i);
      o.expect(static_cast<std::int64_t>(one_point_gaps(c, place).size()) ==
                   c.genus(),
               curve_tag(c) + " gap count at " + place.to_string());
    }
  }

  std::mt19937_64 rng(20240611);
  std::int64_t sampled = 0;
  for (; sampled < 20000; ++sampled) {
    const auto& c = curves[std::uniform_int_distribution<std::size_t>(
        0, curves.size() - 1)(rng)];
    const std::int64_t g = c.genus();
    std::uniform_int_distribution<std::int64_t> coef(-2 * g - 2, 2 * g + 4);
    std::vector<std::int64_t> d(static_cast<std::size_t>(c.r()) + 1, 0);
    for (auto& x : d)
      if (rng() % 2 == 0) x = coef(rng);
    const std::int64_t deg = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    const std::int64_t dim = riemann_roch_dimension(c, d);
    if (deg > 2 * g - 2)
      o.expect(dim == deg + 1 - g,
               curve_tag(c) + " RR fails for " + testing::join_tuple(d));
    const auto idx =
        std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng);
    d[idx] += 1;
    const std::int64_t step = riemann_roch_dimension(c, d) - dim;
    o.expect(step == 0 || step == 1,
             curve_tag(c) + " step " + std::to_string(step) + " at " +
                 testing::join_tuple(d));
  }
  o.expect(sampled >= 10000, "sample too small");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "hermitian table reproduction", 1.0, table_one},
      {2, "closed-form two-point gap counts vs oracle", 120.0,
       closed_form_counts_vs_oracle},
      {3, "Gamma sets, genus <= 15", 60.0, gamma_sets},
      {4, "Homma assembly vs brute force, genus <= 15", 0.0, homma_assembly},
      {5, "pure-gap characterization vs oracle, genus <= 12", 300.0,
       characterization},
      {6, "family soundness, u <= 3, r <= 6", 0.0, family_soundness},
      {7, "defect bounds with synthetic n = 2 deg G + 1", 0.0, defect_bounds},
      {8, "oracle self-consistency, >= 10^4 random cases", 0.0,
       oracle_properties},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.first_failure = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = outcome.ok;
    std::string note = outcome.first_failure;
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      note = "over time limit of " + std::to_string(c.limit_seconds) + " s";
    }
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.name << " (" << outcome.cases << " cases, "
              << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s)";
    if (!ok) std::cout << " -- " << note;
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
