#include <gtest/gtest.h>

#include <filesystem>

#include "rotarr/catalog.hpp"
#include "rotarr/serialize.hpp"
#include "rotarr/verify.hpp"

using namespace rotarr;

TEST(Serialize, Scalars) {
  EXPECT_EQ(to_json(Rational(-3, 6)), "-1/2");
  const json z = to_json(zeta_power(5, 2));
  EXPECT_EQ(z["conductor"], 5);
  EXPECT_EQ(z["coeffs"].size(), 4u);
  EXPECT_EQ(z.dump(), R"({"conductor":5,"coeffs":["0/1","0/1","1/1","0/1"]})");
  EXPECT_EQ(cycnum_from_json(z), zeta_power(5, 2));
  EXPECT_EQ(rational_from_json("7/21"), Rational(1, 3));
}

TEST(Serialize, RejectsMalformedInput) {
  EXPECT_THROW(cycnum_from_json(json{{"conductor", 5}, {"coeffs", {"1/1"}}}), FormatError);
  EXPECT_THROW(rational_from_json(3), FormatError);
  EXPECT_THROW(matrix_from_json(json{{"rows", 2}, {"cols", 2}, {"entries", json::array()}}), FormatError);
  EXPECT_THROW(subspace_from_json(json::object()), FormatError);
}

TEST(Serialize, RoundTrips) {
  const MatrixGroup g = catalog_group("H3");
  for (const auto& m : g.generators()) EXPECT_EQ(matrix_from_json(to_json(m)), m);
  const Arrangement& a = catalog_arrangement("H3");
  // {0} carries no entries, so only the set is recovered, not the conductor.
  for (const auto& u : a.subspaces()) EXPECT_TRUE(same_subspace(subspace_from_json(to_json(u)), u));
  const json aj = to_json(a);
  EXPECT_EQ(aj["ambient"], 3);
  EXPECT_EQ(aj["subspaces"].size(), a.size());
  EXPECT_EQ(aj["provenance"].size(), a.size());
  const MatrixGroup back = group_from_json(group_to_json(g));
  EXPECT_EQ(back.order(), 120u);
  EXPECT_EQ(back.name(), g.name());
}

TEST(Serialize, FileRoundTripIsByteStable) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto p1 = dir / "rotarr_ser_1.json";
  const auto p2 = dir / "rotarr_ser_2.json";
  const json j = to_json(catalog_arrangement("B3"));
  write_json_file(p1, j);
  write_json_file(p2, read_json_file(p1));
  EXPECT_EQ(dump(read_json_file(p1)), dump(read_json_file(p2)));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
  EXPECT_THROW(read_json_file(dir / "rotarr_missing.json"), FormatError);
}
