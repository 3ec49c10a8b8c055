#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/parse.hpp"
#include "kummer/code_design.hpp"
#include "kummer/error.hpp"
#include "kummer/model.hpp"
#include "kummer/pure_gaps.hpp"
#include "kummer/rr_oracle.hpp"
#include "kummer/semigroups.hpp"
#include "kummer/verify.hpp"

#ifndef KUMMER_VERSION
#define KUMMER_VERSION "dev"
#endif

namespace kummer::cli {
namespace {

using nlohmann::json;

constexpr const char* kTool = "kummer-gaps";

struct CurveArgs {
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> q;

  KummerCurve curve() const { return KummerCurve(m, r, q); }
};

void add_curve_options(CLI::App* cmd, CurveArgs& args, bool required = true) {
  auto* m = cmd->add_option("--m", args.m, "Kummer degree m (y^m = f(x))");
  auto* r = cmd->add_option("--r", args.r, "degree r of the separable f(x)");
  if (required) {
    m->required();
    r->required();
  }
  cmd->add_option("--q", args.q, "constant field size (optional)");
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

json meta(const std::string& command, const KummerCurve* curve) {
  json m = {{"command", command}, {"tool", kTool}, {"version", KUMMER_VERSION}};
  if (curve) {
    m["m"] = curve->m();
    m["r"] = curve->r();
    m["genus"] = curve->genus();
    if (curve->q()) m["q"] = *curve->q();
  }
  return m;
}

void emit_json(std::ostream& out, json payload, const std::string& command,
               const KummerCurve* curve) {
  payload["meta"] = meta(command, curve);
  out << payload.dump(2) << '\n';
}

std::string tuple_text(const std::vector<std::int64_t>& t) {
  return join(t, ",");
}

std::string csv_header(std::size_t arity, const char* lead = nullptr) {
  std::string h = lead ? std::string(lead) : std::string();
  for (std::size_t i = 1; i <= arity; ++i) {
    if (!h.empty()) h += ',';
    h += "e" + std::to_string(i);
  }
  return h;
}

// ---------------------------------------------------------------- gaps

struct GapsArgs {
  CurveArgs curve;
  std::string place = "infty";
  std::string format = "text";
};

Place parse_place(const std::string& text, const KummerCurve& curve) {
  if (text == "infty" || text == "inf") return Place::infinity();
  if (text == "finite") return Place::finite(1);
  auto parsed = parse_signature(text, curve);
  if (parsed.places.size() != 1)
    throw Error(ErrorCode::kInvalidArgument, "--place takes a single place");
  return parsed.places.front();
}

int cmd_gaps(const GapsArgs& args, std::ostream& out) {
  const KummerCurve curve = args.curve.curve();
  const Place place = parse_place(args.place, curve);
  const auto gaps = one_point_gaps(curve, place);
  if (args.format == "json") {
    emit_json(out, {{"gaps", gaps}, {"place", place.to_string()}}, "gaps",
              &curve);
  } else if (args.format == "csv") {
    out << "gap\n";
    for (auto g : gaps) out << g << '\n';
  } else {
    out << join(gaps, " ") << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- gamma

struct GammaArgs {
  CurveArgs curve;
  std::string flavor = "ff";
  std::string format = "text";
};

int cmd_gamma(const GammaArgs& args, std::ostream& out) {
  const KummerCurve curve = args.curve.curve();
  const TwoPointFlavor flavor = args.flavor == "ff"
                                    ? TwoPointFlavor::kFiniteFinite
                                    : TwoPointFlavor::kInftyFinite;
  const GammaSet gamma = gamma_set(curve, flavor);
  const TwoPointGapCount count = count_gaps_two_points(curve, flavor);
  std::optional<std::int64_t> closed;
  if (UParameter::try_from(curve)) {
    auto c = closed_form_counts(curve);
    closed = flavor == TwoPointFlavor::kFiniteFinite ? c.finite_finite
                                                     : c.infty_finite;
  }

  if (args.format == "json") {
    json pairs = json::array();
    for (const auto& [a, b] : gamma.pairs) pairs.push_back({a, b});
    json payload = {{"flavor", args.flavor},
                    {"pairs", pairs},
                    {"count", gamma.pairs.size()},
                    {"inversions", count.inversions},
                    {"two_point_gaps", count.total}};
    if (closed) payload["closed_form_two_point_gaps"] = *closed;
    emit_json(out, payload, "gamma", &curve);
  } else if (args.format == "csv") {
    out << "a,b\n";
    for (const auto& [a, b] : gamma.pairs) out << a << ',' << b << '\n';
  } else {
    for (const auto& [a, b] : gamma.pairs)
      out << '(' << a << ',' << b << ")\n";
    out << "count: " << gamma.pairs.size() << '\n';
    out << "inversions: " << count.inversions << '\n';
    out << "two-point gaps: " << count.total << " = " << count.sum_gaps_first
        << " + " << count.sum_gaps_second << " - " << count.inversions << '\n';
    if (closed) out << "closed form: " << *closed << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- pure

struct PureArgs {
  CurveArgs curve;
  std::string places;
  std::string check;
  bool enumerate = false;
  bool families = false;
  bool oracle = false;
  std::optional<std::int64_t> bound;
  std::optional<std::int64_t> u;
  std::string format = "text";
};

std::vector<PureGapFamily> families_for(const KummerCurve& curve,
                                        const UParameter& u,
                                        const PlaceSignature& sig) {
  std::vector<PureGapFamily> out;
  const std::int64_t s = sig.finite_count;
  if (sig.with_infty) {
    if (s == 1) {
      auto two = family_two_point(curve, u);
      out.push_back(std::move(two.infty_single));
      out.push_back(std::move(two.infty_column));
    }
    if (s >= 1 && s < curve.r() - 1)
      out.push_back(family_many_infty(curve, u, s));
  } else {
    if (s == 2) out.push_back(family_two_point(curve, u).finite_block);
    if (s >= 1 && s < curve.r())
      out.push_back(family_many_finite(curve, u, s));
  }
  return out;
}

int cmd_pure(const PureArgs& args, std::ostream& out) {
  const KummerCurve curve = args.curve.curve();
  const auto parsed = parse_signature(args.places, curve);
  const auto& sig = parsed.signature;
  std::string place_names;
  for (const auto& p : parsed.places)
    place_names += (place_names.empty() ? "" : ",") + p.to_string();

  if (!args.check.empty()) {
    const auto tuple = parse_tuple(args.check);
    if (static_cast<std::int64_t>(tuple.size()) != sig.arity())
      throw Error(ErrorCode::kInvalidArgument,
                  "--check tuple length must match --places");
    const bool pure = args.oracle ? is_pure_gap(curve, parsed.places, tuple)
                                  : check_pure(curve, sig, tuple);
    if (args.format == "json") {
      emit_json(out,
                {{"pure_gap", pure},
                 {"tuple", tuple},
                 {"places", place_names},
                 {"mode", args.oracle ? "oracle" : "characterization"}},
                "pure", &curve);
    } else if (args.format == "csv") {
      out << csv_header(tuple.size()) << ",pure_gap\n"
          << tuple_text(tuple) << ',' << (pure ? "true" : "false") << '\n';
    } else {
      out << "pure-gap: " << (pure ? "true" : "false") << '\n';
    }
    return kExitOk;
  }

  if (args.families) {
    const UParameter u(curve);
    if (args.u && *args.u != u.value())
      throw Error(ErrorCode::kNotUrPlusOne,
                  "--u does not satisfy m = u*r + 1 (expected u = " +
                      std::to_string(u.value()) + ")");
    const auto families = families_for(curve, u, sig);
    if (families.empty())
      throw Error(ErrorCode::kSOutOfRange,
                  "no pure-gap family is known for this place signature");
    if (args.format == "json") {
      json list = json::array();
      for (const auto& f : families) {
        json tuples = json::array();
        for (const auto& t : f.tuples) tuples.push_back(t.entries);
        list.push_back({{"label", f.label},
                        {"applicable", f.applicable},
                        {"tuples", tuples}});
      }
      emit_json(out, {{"families", list}, {"places", place_names}}, "pure",
                &curve);
    } else if (args.format == "csv") {
      out << csv_header(static_cast<std::size_t>(sig.arity()), "family")
          << '\n';
      for (const auto& f : families)
        for (const auto& t : f.tuples)
          out << f.label << ',' << tuple_text(t.entries) << '\n';
    } else {
      for (const auto& f : families) {
        out << "family " << f.label << " at " << place_names << ":";
        if (!f.applicable) out << " not applicable (non-positive entries)";
        out << '\n';
        for (const auto& t : f.tuples) out << tuple_text(t.entries) << '\n';
      }
    }
    return kExitOk;
  }

  // Default: --enumerate.
  const auto gaps = enumerate_pure_gaps(
      curve, sig, args.bound,
      args.oracle ? PureGapMode::kOracle : PureGapMode::kCharacterization);
  if (args.format == "json") {
    json tuples = json::array();
    for (const auto& t : gaps) tuples.push_back(t.entries);
    emit_json(out,
              {{"pure_gaps", tuples},
               {"count", gaps.size()},
               {"places", place_names},
               {"mode", args.oracle ? "oracle" : "characterization"}},
              "pure", &curve);
  } else if (args.format == "csv") {
    out << csv_header(static_cast<std::size_t>(sig.arity())) << '\n';
    for (const auto& t : gaps) out << tuple_text(t.entries) << '\n';
  } else {
    for (const auto& t : gaps) out << tuple_text(t.entries) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- design

struct DesignArgs {
  CurveArgs curve;
  bool hermitian = false;
  std::string places;
  std::string box;
  std::string canonical;
  std::int64_t s = 0;
  std::optional<std::int64_t> n;
  std::string format = "text";
};

void emit_rows(std::ostream& out, const std::string& format,
               const std::vector<HermitianRow>& rows, const KummerCurve* curve,
               std::int64_t q) {
  if (format == "json") {
    json list = json::array();
    for (const auto& r : rows)
      list.push_back({{"q_sq", r.q_sq},
                      {"s", r.s},
                      {"n", r.n},
                      {"k", r.k},
                      {"d_bound", r.d_bound}});
    emit_json(out, {{"rows", list}, {"hermitian_q", q}}, "design", curve);
  } else if (format == "csv") {
    out << "q_sq,s,n,k,d_bound\n";
    for (const auto& r : rows)
      out << r.q_sq << ',' << r.s << ',' << r.n << ',' << r.k << ','
          << r.d_bound << '\n';
  } else {
    out << std::left << std::setw(6) << "q^2" << std::setw(4) << "s"
        << std::setw(8) << "n" << std::setw(8) << "k" << "d>=" << '\n';
    for (const auto& r : rows)
      out << std::setw(6) << r.q_sq << std::setw(4) << r.s << std::setw(8)
          << r.n << std::setw(8) << r.k << r.d_bound << '\n';
  }
}

int cmd_design(const DesignArgs& args, std::ostream& out) {
  if (args.hermitian) {
    if (!args.curve.q)
      throw Error(ErrorCode::kInvalidArgument, "--hermitian needs --q");
    const std::int64_t q = *args.curve.q;
    const auto rows = hermitian_table(q);
    const KummerCurve curve(q + 1, q, q * q);
    emit_rows(out, args.format, rows, &curve, q);
    return kExitOk;
  }

  if (args.curve.m == 0 || args.curve.r == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "design needs --m and --r (or --hermitian --q Q)");
  const KummerCurve curve = args.curve.curve();

  PureGapBox box;
  std::optional<std::int64_t> closed_bound;
  if (!args.canonical.empty()) {
    const UParameter u(curve);
    DefectBound bound = args.canonical == "finite"
                            ? defect_bound_finite(curve, u, args.s)
                            : defect_bound_infty(curve, u, args.s);
    box = bound.box;
    closed_bound = bound.bound;
  } else {
    if (args.places.empty() || args.box.empty())
      throw Error(ErrorCode::kInvalidArgument,
                  "design needs --places and --box, or --canonical");
    box.signature = parse_signature(args.places, curve).signature;
    std::tie(box.low, box.high) = parse_box(args.box);
  }

  std::int64_t deg_g = 0;
  for (std::size_t i = 0; i < box.low.size() && i < box.high.size(); ++i)
    deg_g += box.low[i] + box.high[i] - 1;
  // Without --n the smallest length that opens the window is used.
  const std::int64_t n = args.n ? *args.n : deg_g + 1;
  const CodeDesign d = design_from_box(curve, box, n);

  if (args.format == "json") {
    json payload = {{"design",
                     {{"n", d.n},
                      {"deg_g", d.deg_g},
                      {"k", d.k},
                      {"d_bound", d.d_bound},
                      {"delta_bound", d.delta_bound},
                      {"s", d.s},
                      {"with_infty", d.with_infty}}},
                    {"box", {{"low", box.low}, {"high", box.high}}}};
    if (closed_bound) payload["closed_form_defect_bound"] = *closed_bound;
    emit_json(out, payload, "design", &curve);
  } else if (args.format == "csv") {
    out << "q_sq,s,n,k,d_bound\n";
    if (curve.q()) out << *curve.q() * *curve.q();
    out << ',' << d.s << ',' << d.n << ',' << d.k << ',' << d.d_bound << '\n';
  } else {
    out << "box: " << tuple_text(box.low) << " .. " << tuple_text(box.high)
        << '\n';
    out << "n=" << d.n << " deg_G=" << d.deg_g << " k=" << d.k
        << " d>=" << d.d_bound << " delta<=" << d.delta_bound
        << " places=" << d.s << '\n';
    if (closed_bound) out << "closed-form defect bound: " << *closed_bound << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::int64_t max_genus = 10;
  std::uint64_t seed = 1;
  std::int64_t samples = 10000;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& args, const VerifySubjects& subjects,
               std::ostream& out) {
  if (args.max_genus < 0 || args.samples < 0)
    throw Error(ErrorCode::kInvalidArgument,
                "--max-genus and --samples must be >= 0");
  VerifyOptions options;
  options.max_genus = args.max_genus;
  options.seed = args.seed;
  options.random_samples = args.samples;
  const VerifyReport report = run_verification(options, subjects);

  if (args.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back(
          {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
      json item = {{"check", w.check},
                   {"m", w.m},
                   {"r", w.r},
                   {"tuple", w.tuple},
                   {"detail", w.detail}};
      if (w.s) item["s"] = *w.s;
      witnesses.push_back(item);
    }
    emit_json(out,
              {{"checks", checks},
               {"witnesses", witnesses},
               {"passed", report.passed()},
               {"max_genus", args.max_genus},
               {"seed", args.seed}},
              "verify", nullptr);
  } else if (args.format == "csv") {
    out << "check,cases,failures\n";
    for (const auto& c : report.checks)
      out << c.name << ',' << c.cases << ',' << c.failures << '\n';
  } else {
    for (const auto& c : report.checks)
      out << c.name << ": " << c.cases << " cases, " << c.failures
          << " failures\n";
    for (const auto& w : report.witnesses) {
      out << "FAIL " << w.check << " m=" << w.m << " r=" << w.r;
      if (w.s) out << " s=" << *w.s;
      if (!w.tuple.empty()) out << " tuple=(" << tuple_text(w.tuple) << ')';
      out << ": " << w.detail << '\n';
    }
    out << (report.passed() ? "all checks passed" : "verification failed")
        << '\n';
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, const VerifySubjects& subjects) {
  CLI::App app{
      "Weierstrass gaps, pure gaps and AG-code parameters on Kummer curves "
      "y^m = f(x)",
      kTool};
  app.require_subcommand(1);
  app.set_version_flag("--version", KUMMER_VERSION);

  GapsArgs gaps;
  auto* gaps_cmd = app.add_subcommand("gaps", "one-point Weierstrass gaps");
  add_curve_options(gaps_cmd, gaps.curve);
  gaps_cmd->add_option("--place", gaps.place,
                       "infty, finite (= P_1) or a finite index")
      ->capture_default_str();
  add_format_option(gaps_cmd, gaps.format);

  GammaArgs gamma;
  auto* gamma_cmd =
      app.add_subcommand("gamma", "Gamma set and two-point gap count");
  add_curve_options(gamma_cmd, gamma.curve);
  gamma_cmd->add_option("--flavor", gamma.flavor, "ff = (P_1,P_2), inf = (P_inf,P_1)")
      ->check(CLI::IsMember({"ff", "inf"}))
      ->capture_default_str();
  add_format_option(gamma_cmd, gamma.format);

  PureArgs pure;
  auto* pure_cmd = app.add_subcommand("pure", "pure gaps at many places");
  add_curve_options(pure_cmd, pure.curve);
  pure_cmd->add_option("--places", pure.places,
                       "place signature, e.g. infty,1 or 1,2,3")
      ->required();
  auto* check_opt =
      pure_cmd->add_option("--check", pure.check, "test one tuple, e.g. 7,1");
  auto* enum_opt = pure_cmd->add_flag("--enumerate", pure.enumerate,
                                      "list every pure gap (default)");
  auto* fam_opt = pure_cmd->add_flag("--families", pure.families,
                                     "closed-form families (needs m = ur+1)");
  check_opt->excludes(enum_opt)->excludes(fam_opt);
  enum_opt->excludes(fam_opt);
  pure_cmd->add_flag("--oracle", pure.oracle,
                     "use the Riemann-Roch oracle instead of the "
                     "arithmetic characterization");
  pure_cmd->add_option("--bound", pure.bound, "cap on the entry sum");
  pure_cmd->add_option("--u", pure.u, "u with m = u*r + 1 (checked)");
  add_format_option(pure_cmd, pure.format);

  DesignArgs design;
  auto* design_cmd =
      app.add_subcommand("design", "AG-code parameters from pure-gap boxes");
  add_curve_options(design_cmd, design.curve, false);
  design_cmd->add_flag("--hermitian", design.hermitian,
                       "table for y^{q+1} = x^q + x over F_{q^2}");
  design_cmd->add_option("--places", design.places, "place signature");
  design_cmd->add_option("--box", design.box, "low..high, e.g. 6,1..7,1");
  design_cmd->add_option("--canonical", design.canonical,
                         "use the canonical box of the defect bound")
      ->check(CLI::IsMember({"finite", "infty"}));
  design_cmd->add_option("--s", design.s, "number of finite places for --canonical");
  design_cmd->add_option("--n", design.n, "code length");
  add_format_option(design_cmd, design.format);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check every closed form against the Riemann-Roch oracle");
  verify_cmd->add_option("--max-genus", verify.max_genus, "largest genus swept")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "seed for the random sample")
      ->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples,
                         "random divisors for the oracle property checks")
      ->capture_default_str();
  add_format_option(verify_cmd, verify.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*gaps_cmd) return cmd_gaps(gaps, out);
    if (*gamma_cmd) return cmd_gamma(gamma, out);
    if (*pure_cmd) return cmd_pure(pure, out);
    if (*design_cmd) return cmd_design(design, out);
    if (*verify_cmd) return cmd_verify(verify, subjects, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace kummer::cli
