#include <gtest/gtest.h>

#include <filesystem>

#include "ybx/io.hpp"
#include "ybx/linearization.hpp"
#include "ybx/suite.hpp"

using namespace ybx;

TEST(Suite, EmptyCheckListIsEmptyReport) {
  Report r = run_suite({});
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Suite, UnknownNamesRejected) {
  RunConfig c;
  c.checks = {"nope"};
  EXPECT_THROW(run_suite(c), std::invalid_argument);
  c.checks = {"matrix"};
  c.fixtures = {"octopus-3"};
  EXPECT_THROW(run_suite(c), std::invalid_argument);
  c.fixtures = {"shift-x"};
  EXPECT_THROW(run_suite(c), std::invalid_argument);
  c.fixtures = {};
  c.sites = 9;
  EXPECT_THROW(run_suite(c), std::invalid_argument);
}

TEST(Suite, FixtureNames) {
  EXPECT_EQ(fixture_by_name("shift-3").n, 3);
  EXPECT_EQ(fixture_by_name("zp2-3").n, 9);
  EXPECT_EQ(default_fixtures(2), (std::vector<std::string>{"trivial-2", "shift-2", "reversal-2"}));
}

TEST(Suite, PassingChecksExitZero) {
  RunConfig c;
  c.fixtures = {"trivial-2", "z4-nilpotent"};
  c.checks = {"brace", "matrix", "twist", "boundary", "commute", "symmetries"};
  Report r = run_suite(c);
  EXPECT_FALSE(r.records.empty());
  for (const auto& rec : r.records) EXPECT_NE(rec.status, Status::fail) << rec.check << " " << rec.name;
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Suite, StatedHamiltonianFailsTheRun) {
  RunConfig c;
  c.fixtures = {"trivial-2"};
  c.checks = {"hamiltonian"};
  Report r = run_suite(c);
  EXPECT_EQ(r.exit_code(), 1);
  for (const auto& rec : r.records)
    if (rec.status == Status::fail) EXPECT_FALSE(rec.witnesses.empty());
}

TEST(Suite, OversizedFixturesAreNotApplicable) {
  RunConfig c;
  c.fixtures = {"zp2-3"};
  c.checks = {"brace", "matrix"};
  Report r = run_suite(c);
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].status, Status::pass);
  EXPECT_EQ(r.records[2].status, Status::not_applicable);
}

TEST(Suite, DeterministicWithoutTiming) {
  RunConfig c;
  c.fixtures = {"shift-3", "reversal-2"};
  c.checks = {"lyubashenko", "twisted", "q-hecke"};
  std::string a = report_to_json(run_suite(c), false).dump();
  std::string b = report_to_json(run_suite(c), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"finding\""), std::string::npos);
}

TEST(Suite, ConfigFromJson) {
  RunConfig c = config_from_json({{"checks", {"matrix"}}, {"sites", 1}, {"fixtures", {"shift-2"}}});
  EXPECT_EQ(c.sites, 1u);
  EXPECT_THROW(config_from_json({{"sites", "two"}}), io::FormatError);
}

TEST(Suite, GenerateFixtureFiles) {
  auto dir = (std::filesystem::temp_directory_path() / "ybx_fixture_test").string();
  auto paths = generate_fixture("z4-nilpotent", 0, dir);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(io::solution_from_json(io::read_json(paths[0])), fixture_by_name("z4-nilpotent"));
  EXPECT_EQ(generate_fixture("lyubashenko-shift", 3, dir).size(), 1u);
  EXPECT_THROW(generate_fixture("zp2", 4, dir), std::invalid_argument);
  EXPECT_THROW(generate_fixture("nothing", 2, dir), std::invalid_argument);
}

TEST(Suite, ExportRoundTrips) {
  auto dir = std::filesystem::temp_directory_path() / "ybx_export_test";
  std::filesystem::create_directories(dir);
  std::string p = (dir / "P.json").string();
  export_matrix("P", std::nullopt, 2, 1, p, ExportFormat::coo_json);
  EXPECT_EQ(io::read_json(p)["entries"].size(), 4u);
  SetSolution s = fixture_by_name("z4-nilpotent");
  std::string f = (dir / "F.json").string();
  export_matrix("F", s, 0, 1, f, ExportFormat::coo_json);
  EXPECT_EQ(io::matrix_from_coo(io::read_json(f)), build_twist(s).F);
  std::string t = (dir / "t.csv").string();
  export_matrix("transfer", fixture_by_name("trivial-2"), 0, 2, t, ExportFormat::dense_csv);
  EXPECT_EQ(io::poly_matrix_from_csv(io::read_text(t)).dim(), 4u);
  EXPECT_THROW(export_matrix("r", std::nullopt, 2, 1, p, ExportFormat::coo_json), std::invalid_argument);
  EXPECT_THROW(parse_export_format("xml"), std::invalid_argument);
}
