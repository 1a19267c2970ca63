#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"
#include "ybx/chain.hpp"
#include "ybx/io.hpp"
#include "ybx/linearization.hpp"

using namespace ybx;
using io::json;

TEST(Io, RationalText) {
  EXPECT_EQ(io::rational_to_json(ratio(-3, 6)), "-1/2");
  EXPECT_EQ(io::rational_to_json(Rational(4)), "4");
  EXPECT_EQ(io::rational_from_json(json(7)), 7);
  EXPECT_EQ(io::rational_from_json(json("10/4")), ratio(5, 2));
  EXPECT_THROW(io::rational_from_json(json(1.5)), io::FormatError);
  EXPECT_THROW(io::rational_from_json(json("a/b")), io::FormatError);
}

TEST(Io, FlipCooHasFourEntries) {
  json j = io::matrix_to_coo(swap_matrix(2));
  EXPECT_EQ(j["schema"], "ybx/1");
  EXPECT_EQ(j["legs"], json({2, 2}));
  EXPECT_EQ(j["entries"].size(), 4u);
  EXPECT_EQ(j["entries"][1], json({1, 2, "1"}));
}

TEST(Io, SolutionRoundTripAndValidation) {
  SetSolution s = fixtures::z4_nilpotent();
  json j = io::solution_to_json(s);
  EXPECT_EQ(io::solution_from_json(j), s);
  j["sigma"][0][0] = 3;
  EXPECT_THROW(io::solution_from_json(j), ValidationError);
  j["sigma"][0][0] = 9;
  EXPECT_THROW(io::solution_from_json(j), io::FormatError);
  json wrong = io::solution_to_json(s);
  wrong["schema"] = "ybx/0";
  EXPECT_THROW(io::solution_from_json(wrong), io::FormatError);
  EXPECT_THROW(io::solution_from_json(json::object()), io::FormatError);
}

TEST(Io, BraceFromRingOrCircle) {
  NilpotentRingSpec r = zpk_ring(2, 2);
  FiniteBrace b = io::brace_from_json(io::ring_to_json(r));
  EXPECT_EQ(b.circle, brace_from_ring(r).circle);
  EXPECT_EQ(io::brace_from_json(io::brace_to_json(b)).circle, b.circle);
}

TEST(Io, BoundaryForms) {
  SetSolution s = fixtures::shift(2);
  io::BoundarySpec k = io::boundary_from_json(json{{"k", {1, 0}}, {"c", "1/2"}}, s);
  EXPECT_EQ(k.c, ratio(1, 2));
  EXPECT_EQ(k.b(0, 1), 1);
  json explicit_b = io::boundary_to_json({QMatrix::identity({2}), 1, 3, std::nullopt});
  io::BoundarySpec back = io::boundary_from_json(explicit_b, s);
  EXPECT_EQ(back.b, QMatrix::identity({2}));
  EXPECT_EQ(back.c, 3);
  EXPECT_EQ(io::boundary_to_json(k)["k"], json({1, 0}));
  EXPECT_THROW(io::boundary_from_json(json{{"k", {1, 2, 0}}}, fixtures::shift(3)), ValidationError);
}

TEST(IoProperty, CooRoundTrip) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    QMatrix m = ybx::testing::random_matrix({2, 3}, seed);
    EXPECT_EQ(io::matrix_from_coo(json::parse(io::matrix_to_coo(m).dump())), m);
    PolyMatrix p = ybx::testing::random_poly_matrix({3}, seed);
    EXPECT_EQ(io::poly_matrix_from_coo(json::parse(io::matrix_to_coo(p).dump())), p);
  }
}

TEST(IoProperty, CsvRoundTrip) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    QMatrix m = ybx::testing::random_matrix({2, 2}, seed);
    EXPECT_EQ(io::matrix_from_csv(io::matrix_to_csv(m)), m);
    PolyMatrix p = ybx::testing::random_poly_matrix({2, 2}, seed);
    EXPECT_EQ(io::poly_matrix_from_csv(io::matrix_to_csv(p)), p);
  }
}

TEST(Io, TransferCsvRoundTrip) {
  QMatrix r = linearize(fixtures::trivial(2));
  PolyMatrix t = build_transfer(build_open(r, PolyMatrix::identity({2}), 2, HatVariant::reflection)).t;
  std::string csv = io::matrix_to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "ybx/1,poly,2,2");
  EXPECT_EQ(io::poly_matrix_from_csv(csv), t);
  EXPECT_THROW(io::matrix_from_csv(csv), io::FormatError);
}

TEST(Io, TwistRoundTrip) {
  Twist t = build_twist(fixtures::z4_nilpotent());
  Twist back = io::twist_from_json(json::parse(io::twist_to_json(t).dump()));
  EXPECT_EQ(back.F, t.F);
  EXPECT_EQ(back.pairing.fixed, t.pairing.fixed);
  EXPECT_EQ(back.pairing.cycles, t.pairing.cycles);
}

TEST(Io, MalformedCoo) {
  EXPECT_THROW(io::matrix_from_coo(json{{"legs", {2}}, {"entries", {{0, 5, "1"}}}}), io::FormatError);
  EXPECT_THROW(io::matrix_from_coo(json{{"legs", json::array()}, {"entries", json::array()}}), io::FormatError);
  EXPECT_THROW(io::matrix_from_coo(json{{"entries", json::array()}}), io::FormatError);
}

TEST(Io, Files) {
  auto dir = std::filesystem::temp_directory_path() / "ybx_io_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "m.json").string();
  io::write_text(path, io::matrix_to_coo(swap_matrix(3)).dump());
  EXPECT_EQ(io::matrix_from_coo(io::read_json(path)), swap_matrix(3));
  io::write_text(path, "{not json");
  EXPECT_THROW(io::read_json(path), io::FormatError);
  EXPECT_THROW(io::read_text((dir / "missing").string()), std::runtime_error);
}
