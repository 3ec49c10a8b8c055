#pragma once

// Oracle-equivalence sweeps: every closed form in the library is compared
// against the Riemann-Roch oracle over all curves up to a genus bound.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kummer/code_design.hpp"
#include "kummer/model.hpp"
#include "kummer/pure_gaps.hpp"
#include "kummer/semigroups.hpp"

namespace kummer {

// Every admissible (m, r) with 1 <= genus <= max_genus, ordered by (g, m, r).
std::vector<KummerCurve> curves_up_to_genus(std::int64_t max_genus);

// |{(a, b) in [0, 2g-1]^2 : (a, b) is a gap}| via the oracle.
std::int64_t brute_force_two_point_gap_count(const KummerCurve& curve,
                                             TwoPointFlavor flavor);

// The implementations under test. Defaults are the library functions; tests
// substitute faulty versions to check that the sweeps catch them.
struct VerifySubjects {
  std::function<GammaSet(const KummerCurve&, TwoPointFlavor)> gamma =
      [](const KummerCurve& c, TwoPointFlavor f) { return gamma_set(c, f); };
  std::function<TwoPointGapCount(const KummerCurve&, TwoPointFlavor)>
      two_point_count = count_gaps_two_points;
  std::function<ClosedFormCounts(const KummerCurve&)> closed_form =
      [](const KummerCurve& c) { return closed_form_counts(c); };
  std::function<bool(const KummerCurve&, const PlaceSignature&,
                     std::span<const std::int64_t>)>
      characterization = check_pure;
  std::function<std::vector<PureGapFamily>(const KummerCurve&,
                                           const UParameter&)>
      families;  // empty means all library families
  std::function<DefectBound(const KummerCurve&, const UParameter&,
                            std::int64_t)>
      defect_finite = defect_bound_finite;
  std::function<DefectBound(const KummerCurve&, const UParameter&,
                            std::int64_t)>
      defect_infty = defect_bound_infty;
};

// Every family the library knows for a curve with m = ur + 1.
std::vector<PureGapFamily> all_families(const KummerCurve& curve,
                                        const UParameter& u);

struct VerifyOptions {
  std::int64_t max_genus = 10;
  std::uint64_t seed = 1;
  std::int64_t random_samples = 10000;
  std::int64_t max_finite_places = 3;
  std::size_t max_witnesses_per_check = 10;
};

struct Witness {
  std::string check;
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> s;
  std::vector<std::int64_t> tuple;
  std::string detail;
};

struct CheckSummary {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
};

struct VerifyReport {
  std::vector<CheckSummary> checks;
  std::vector<Witness> witnesses;

  bool passed() const;
};

VerifyReport run_verification(const VerifyOptions& options,
                              const VerifySubjects& subjects = {});

}  // namespace kummer
