#include <gtest/gtest.h>

#include "rotarr/parallel.hpp"
#include "rotarr/verify.hpp"

using namespace rotarr;

TEST(Verify, LemmaAG) {
  const auto r = verify_lemma_AG(2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["planes_found"], 4);
  const auto r10 = verify_lemma_AG(10);
  EXPECT_TRUE(r10.pass);
  EXPECT_EQ(r10.certificate["planes"].size(), 12u);
  EXPECT_TRUE(verify_lemma_AG(7, "monomial").pass);
}

TEST(Verify, LemmaAGDegenerateM1) {
  // G(1,1,2) is {1, swap}: only the plane y = x, and {0} is not an isotropy space.
  const auto r = verify_lemma_AG(1);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.certificate["planes_found"], 1);
  EXPECT_EQ(r.certificate["note"], "outside corollary range m>=2");
}

TEST(Verify, RotationGroup) {
  EXPECT_TRUE(verify_rotation_group(2).pass);
  EXPECT_TRUE(verify_rotation_group(4).pass);
  const auto r = verify_rotation_group(7);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["nonidentity_scanned"], 97);
  EXPECT_EQ(r.certificate["fix_codim_histogram"]["1"], 0);
  EXPECT_EQ(r.certificate["fix_codim_histogram"]["3"], 0);
}

TEST(Verify, LemmaPlaneAsStatedAndSignCorrected) {
  const auto r = verify_lemma_plane(5, 200, 0);
  EXPECT_EQ(r.certificate["constructed_plane_meet_count"], 1);
  EXPECT_TRUE(r.certificate["sign_corrected"]["holds"].get<bool>());
  // Random signs of a, b reverse y/x about half the time.
  EXPECT_GT(r.certificate["as_stated"]["strict_phase_failures"].get<std::size_t>(), 0u);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.certificate.contains("witness"));
  EXPECT_TRUE(verify_lemma_plane(2, 10, 1).certificate["sign_corrected"]["holds"].get<bool>());
}

TEST(Verify, Dichotomy) {
  EXPECT_TRUE(verify_dichotomy(2, 2).pass);
  EXPECT_TRUE(verify_dichotomy(3, 5).pass);
  const auto r = verify_dichotomy(8, 8);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["plane_count"], 66);
}

TEST(Verify, ThresholdRegression) {
  const ThresholdResult t = compute_threshold();
  EXPECT_EQ(t.max_planes_big_factor, 722u);
  EXPECT_EQ(t.max_total_big_factor, 2103u);
  EXPECT_EQ(t.m0_planes, 721u);
  EXPECT_EQ(t.m0_total, 2101u);
  EXPECT_LE(t.m0_planes, t.m0_total);
  ASSERT_EQ(t.rows.size(), 11u);
  EXPECT_EQ(t.rows[4].label, "H4");
  EXPECT_EQ(t.rows[4].planes, 722u);
  const auto r = verify_threshold();
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["dominant_group"], "H4");
}

TEST(Verify, TheoremSmallM) {
  const auto r = verify_theorem(3, 6);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["part_ii"]["status"], "not-applicable");
  EXPECT_EQ(r.certificate["part_i"]["groups_checked"], 46);
  EXPECT_EQ(r.certificate["m0_planes"], 721);
}

TEST(Verify, TheoremFailsForM2AndM4) {
  for (unsigned m : {2u, 4u}) {
    const auto r = verify_theorem(m, 4);
    EXPECT_FALSE(r.pass);
    std::vector<std::string> contained;
    for (const auto& g : r.certificate["part_i"]["groups"]) {
      if (g["contained"].get<bool>()) contained.push_back(g["label"]);
    }
    EXPECT_EQ(contained, (std::vector<std::string>{"B4", "D4", "F4", "H4"})) << m;
  }
}

TEST(Verify, ReportsIndependentOfJobs) {
  const unsigned before = default_jobs();
  set_default_jobs(1);
  const std::string a = dump(to_json(verify_lemma_plane(8, 100, 4)));
  const std::string t1 = dump(to_json(verify_theorem(5, 4)));
  set_default_jobs(4);
  const std::string b = dump(to_json(verify_lemma_plane(8, 100, 4)));
  const std::string t4 = dump(to_json(verify_theorem(5, 4)));
  set_default_jobs(before);
  EXPECT_EQ(a, b);
  EXPECT_EQ(t1, t4);
  EXPECT_FALSE(to_json(verify_lemma_AG(3)).contains("runtime_ms"));
  EXPECT_TRUE(to_json(verify_lemma_AG(3), true).contains("runtime_ms"));
}

TEST(Verify, PlaneLabels) {
  EXPECT_EQ(gm12_plane_label(plane_x_zero(6), 6), "x=0");
  EXPECT_EQ(gm12_plane_label(plane_y_zeta_x(6, 5), 6), "y=zeta^5 x");
  EXPECT_EQ(gm12_plane_label(plane_y_zeta_x(6, 5), 7), "");
}

TEST(Verify, Survey) {
  const auto r = survey_rotation_subgroups(3);
  EXPECT_EQ(r.certificate["status"], "unverified");
  for (const auto& g : r.certificate["groups"]) {
    if (g["label"] == "A1xA1xA1xA1") EXPECT_EQ(g["rotation_subgroup_order"], 8);
  }
}
