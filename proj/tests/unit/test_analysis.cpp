#include <gtest/gtest.h>

#include "arrkit/analysis.hpp"
#include "arrkit/catalog.hpp"
#include "arrkit/suites.hpp"
#include "properties.hpp"

using namespace arrkit;

TEST(Analysis, ReportIsDeterministic) {
  AnalyzeOptions opt;
  opt.delta = "(t-1)^3*(t^3-1)";
  const auto a = to_json(analyze(catalog_build("typeI_prop45"), opt)).dump(2);
  const auto b = to_json(analyze(catalog_build("typeI_prop45"), opt)).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_text(analyze(catalog_build("typeI_prop45"), opt)), to_text(analyze(catalog_build("typeI_prop45"), opt)));
}

TEST(Analysis, JsonRoundTripIsFixpoint) {
  const auto j = to_json(analyze(catalog_build("typeII_prop46")));
  EXPECT_EQ(j.at("schema"), 1);
  const auto s = j.dump();
  EXPECT_EQ(nlohmann::json::parse(s).dump(), s);
}

TEST(Analysis, ReportIsConsistent) {
  const auto rep = analyze(catalog_build("typeI_prop44"));
  int mu = 0, tau = 0;
  for (const auto& s : rep.locus.singularities) {
    mu += s.mu;
    tau += s.tau;
  }
  EXPECT_EQ(mu, rep.locus.total_mu);
  EXPECT_EQ(tau, rep.locus.total_tau);
  EXPECT_EQ(*rep.chi, euler_chi(catalog_build("typeI_prop44"), rep.locus.total_mu));
  EXPECT_EQ(rep.exit_code(), kExitOk);
}

TEST(Analysis, ExitCodes) {
  AnalyzeOptions opt;
  opt.delta = "(t-1)^6";
  EXPECT_EQ(analyze(catalog_build("typeI_prop44"), opt).exit_code(), kExitInfeasible);
  opt.delta = "(t^5-1)";
  EXPECT_THROW(analyze(catalog_build("typeI_prop44"), opt), CandidateParseError);
  AnalyzeOptions hil;
  hil.tau_method = TjurinaMethod::hilbert_stable;
  EXPECT_THROW(analyze(catalog_build("hesse_conics", {{"lambda", "2"}}), hil), DegreeGuardExceeded);
}

TEST(Analysis, HilbertMethod) {
  AnalyzeOptions opt;
  opt.tau_method = TjurinaMethod::hilbert_stable;
  const auto rep = analyze(catalog_build("typeI_prop44"), opt);
  EXPECT_EQ(*rep.tau, 39);
  EXPECT_EQ(rep.tau_method, "hilbert");
  EXPECT_EQ(rep.freeness->to_string(), "free(2,5)");
}

TEST(Suites, Names) {
  EXPECT_EQ(suite_names().size(), 4u);
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
  EXPECT_TRUE(builtin_manifest().contains("fixtures"));
}

TEST(Suites, IdentitiesPass) {
  const auto r = run_suite("identities");
  EXPECT_TRUE(r.pass()) << to_text(r);
  EXPECT_GE(r.checks.size(), 20u);
}

TEST(Properties, LineChiBoundOnRandomArrangements) {
  const auto out = arrkit::testing::line_chi_bound(50, 17u);
  EXPECT_EQ(out.cases, 50);
  EXPECT_EQ(out.failures, 0) << (out.details.empty() ? "" : out.details.front());
}
