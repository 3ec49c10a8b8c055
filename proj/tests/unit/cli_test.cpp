#include "cli/commands.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace kummer::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const VerifySubjects& subjects = {}) {
  args.insert(args.begin(), "kummer-gaps");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err, subjects);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(CliGaps, TextAtInfinity) {
  const auto r = invoke({"gaps", "--m", "5", "--r", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1 2 3 6 7 11\n");
}

TEST(CliGaps, JsonShape) {
  const auto r = invoke({"gaps", "--m", "3", "--r", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["gaps"], nlohmann::json::array({1}));
  EXPECT_EQ(j["place"], "P_inf");
  EXPECT_EQ(j["meta"]["command"], "gaps");
  EXPECT_EQ(j["meta"]["genus"], 1);
}

TEST(CliGaps, CsvAndFinitePlace) {
  const auto r = invoke({"gaps", "--m", "7", "--r", "3", "--place", "finite",
                         "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "gap\n1\n2\n3\n4\n8\n9\n");
}

TEST(CliGaps, NonCoprimeIsValidationError) {
  const auto r = invoke({"gaps", "--m", "4", "--r", "2"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("gcd(m,r) must be 1"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliGaps, MissingRequiredOption) {
  EXPECT_EQ(invoke({"gaps", "--m", "5"}).code, kExitValidation);
  EXPECT_EQ(invoke({}).code, kExitValidation);
  EXPECT_EQ(invoke({"gaps", "--m", "5", "--r", "4", "--format", "xml"}).code,
            kExitValidation);
}

TEST(CliGamma, FiniteFinite) {
  const auto r = invoke({"gamma", "--m", "5", "--r", "4", "--flavor", "ff"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("count: 6\n"), std::string::npos);
  EXPECT_NE(r.out.find("inversions: 14\n"), std::string::npos);
  EXPECT_NE(r.out.find("closed form: 46\n"), std::string::npos);
}

TEST(CliGamma, JsonKeys) {
  const auto r = invoke(
      {"gamma", "--m", "5", "--r", "4", "--flavor", "inf", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 6);
  EXPECT_EQ(j["two_point_gaps"], 46);
  EXPECT_EQ(j["closed_form_two_point_gaps"], 46);
  EXPECT_EQ(j["pairs"].size(), 6u);
}

TEST(CliPure, Check) {
  auto r = invoke({"pure", "--m", "5", "--r", "4", "--places", "1,2",
                   "--check", "7,1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "pure-gap: true\n");
  r = invoke({"pure", "--m", "5", "--r", "4", "--places", "1,2", "--check",
              "8,1"});
  EXPECT_EQ(r.out, "pure-gap: false\n");
}

TEST(CliPure, CheckArityMismatch) {
  const auto r = invoke({"pure", "--m", "5", "--r", "4", "--places", "1,2",
                         "--check", "7,1,1"});
  EXPECT_EQ(r.code, kExitValidation);
}

TEST(CliPure, FamiliesRequireUrPlusOne) {
  const auto r = invoke({"pure", "--m", "7", "--r", "4", "--places", "1,2",
                         "--families"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(CliPure, FamiliesText) {
  const auto r = invoke({"pure", "--m", "9", "--r", "4", "--places",
                         "infty,1", "--families"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("14,1\n14,2\n15,1\n15,2\n"), std::string::npos);
}

TEST(CliPure, EnumerateOracleAgreesWithCharacterization) {
  const std::vector<std::string> base{"pure", "--m", "5", "--r", "4",
                                      "--places", "infty,1", "--enumerate"};
  auto with_oracle = base;
  with_oracle.push_back("--oracle");
  const auto a = invoke(base);
  const auto b = invoke(with_oracle);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("7,1\n"), std::string::npos);
}

TEST(CliDesign, HermitianCsv) {
  const auto r =
      invoke({"design", "--hermitian", "--q", "4", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "q_sq,s,n,k,d_bound\n16,1,64,48,12\n16,2,63,55,6\n");
}

TEST(CliDesign, DegreeWindowViolated) {
  const auto r = invoke({"design", "--m", "5", "--r", "4", "--places", "1,2",
                         "--box", "6,1..7,1", "--n", "13"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("degree window violated"), std::string::npos);
}

TEST(CliDesign, ImpureBoxRejected) {
  const auto r = invoke({"design", "--m", "5", "--r", "4", "--places", "1,2",
                         "--box", "6,1..8,1", "--n", "40"});
  EXPECT_EQ(r.code, kExitValidation);
}

TEST(CliDesign, SOutOfRange) {
  const auto r = invoke({"design", "--m", "5", "--r", "4", "--canonical",
                         "finite", "--s", "4"});
  EXPECT_EQ(r.code, kExitValidation);
}

TEST(CliVerify, PassesAndIsDeterministic) {
  const std::vector<std::string> args{"verify", "--max-genus", "5",
                                      "--samples", "200"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all checks passed"), std::string::npos);
}

TEST(CliVerify, ReportsWitnessForInjectedFault) {
  VerifySubjects subjects;
  subjects.closed_form = [](const KummerCurve& c) {
    auto counts = closed_form_counts(c);
    counts.finite_finite += 1;
    return counts;
  };
  const auto r = invoke({"verify", "--max-genus", "5", "--samples", "100"},
                        subjects);
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("FAIL closed-form-count P1,P2 m="), std::string::npos);
  EXPECT_NE(r.out.find("verification failed"), std::string::npos);
}

TEST(CliVerify, EmptyRangeIsVacuous) {
  const auto r = invoke({"verify", "--max-genus", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"gamma", "--m", "7", "--r", "3",
                                      "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

}  // namespace
}  // namespace kummer::cli
