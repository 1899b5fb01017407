// Acceptance suite: one test per shipped criterion. Each prints a single
// summary line so a log scan shows the eight verdicts at a glance; details of
// any failure land in the assertion message.

#include <gtest/gtest.h>

#include <cstdio>

#include "gcn/acceptance.hpp"

namespace {

void report(const gcn::acceptance::CriterionResult& res) {
  std::printf("[C%d] %s — %s (%.1fs)\n", res.id, res.pass ? "PASS" : "FAIL",
              res.details.c_str(), res.seconds);
  std::fflush(stdout);
  EXPECT_TRUE(res.pass) << "criterion " << res.id << " (" << res.name
                        << "): " << res.details;
}

unsigned jobs() { return gcn::acceptance::default_jobs(); }

TEST(Acceptance, C1_InequalityChainOnSeededSample) {
  report(gcn::acceptance::criterion_1(jobs()));
}

TEST(Acceptance, C2_FlowMatchesEnumeration) {
  report(gcn::acceptance::criterion_2(jobs()));
}

TEST(Acceptance, C3_ScatterAuditsAcrossFamilies) {
  report(gcn::acceptance::criterion_3(jobs()));
}

TEST(Acceptance, C4_SplitterWinsWithinBound) {
  report(gcn::acceptance::criterion_4(jobs()));
}

TEST(Acceptance, C5_ConstructionInvariantEverywhere) {
  report(gcn::acceptance::criterion_5(jobs()));
}

TEST(Acceptance, C6_UniformityRatiosAndTripwire) {
  report(gcn::acceptance::criterion_6(jobs()));
}

TEST(Acceptance, C7_AugmentationClaimsOnSeededSample) {
  report(gcn::acceptance::criterion_7(jobs()));
}

TEST(Acceptance, C8_ScalingRun) { report(gcn::acceptance::criterion_8(jobs())); }

}  // namespace
