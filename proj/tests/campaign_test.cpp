#include <gtest/gtest.h>

#include "khall/khall.hpp"
#include "test_util.hpp"

namespace khall {
namespace {

using testing::error_code_of;

TEST(Campaign, SmallDefaultRunPasses) {
	CampaignConfig c;
	c.trials = 40;
	c.seed = 42;
	auto r = run_campaign(c);
	EXPECT_TRUE(r.ok()) << campaign_text(r);
	for (const auto& [p, tally] : r.tallies) EXPECT_EQ(tally.pass + tally.fail, c.trials) << to_string(p);
}

TEST(Campaign, SingleTrialSmoke) {
	CampaignConfig c;
	c.trials = 1;
	c.seed = 0;
	c.properties = {Property::Thm27};
	auto r = run_campaign(c);
	ASSERT_EQ(r.tallies.size(), 1u);
	EXPECT_EQ(r.tallies.at(Property::Thm27).pass, 1u);
	EXPECT_EQ(r.tallies.at(Property::Thm27).fail, 0u);
}

TEST(Campaign, ConfigErrors) {
	CampaignConfig c;
	c.trials = 0;
	EXPECT_EQ(error_code_of([&] { run_campaign(c); }), ErrorCode::InvalidParams);
	c.trials = 1;
	c.k_values = {1};
	EXPECT_EQ(error_code_of([&] { run_campaign(c); }), ErrorCode::InvalidParams);
	c.k_values = {3};
	c.t_values = {};
	EXPECT_EQ(error_code_of([&] { run_campaign(c); }), ErrorCode::InvalidParams);
	EXPECT_EQ(error_code_of([] { parse_property("thm99"); }), ErrorCode::InvalidParams);
	EXPECT_EQ(parse_mode("planted"), InstanceMode::UniquePlanted);
}

TEST(Campaign, JsonIsDeterministic) {
	CampaignConfig c;
	c.trials = 15;
	c.seed = 9;
	auto a = campaign_json(run_campaign(c)).dump(2);
	auto b = campaign_json(run_campaign(c)).dump(2);
	EXPECT_EQ(a, b);
	EXPECT_EQ(a.find("wall_clock"), std::string::npos);
	EXPECT_NE(campaign_json(run_campaign(c), true).dump().find("wall_clock_ms"), std::string::npos);
}

TEST(Campaign, PlantedInstancesAreNeverVacuous) {
	CampaignConfig c;
	c.trials = 30;
	c.seed = 5;
	c.modes = {InstanceMode::UniquePlanted};
	c.properties = {Property::Thm21, Property::Thm26, Property::DefectEquivalence};
	auto r = run_campaign(c);
	EXPECT_TRUE(r.ok()) << campaign_text(r);
	for (const auto& [p, tally] : r.tallies) EXPECT_EQ(tally.vacuous, 0u) << to_string(p);
}

TEST(Checks, CatchBrokenClaims) {
	// A bipartite-only check given a 3-partite instance must fail rather than pass silently.
	EXPECT_TRUE(checks::k2_reduction(fixture("ex_2_5")).failure);
	EXPECT_FALSE(checks::k2_reduction(fixture("k2_hall_fail")).failure);
	for (const auto& name : fixture_names()) {
		const auto h = fixture(name);
		EXPECT_FALSE(checks::theorem21(h).failure) << name;
		EXPECT_FALSE(checks::theorem26(h).failure) << name;
		EXPECT_FALSE(checks::theorem27(h).failure) << name;
		EXPECT_FALSE(checks::defect_equivalence(h).failure) << name;
	}
}

TEST(Checks, ViolatorProblemDetectsBadWitness) {
	auto h = fixture("ex_2_8");
	auto m = testing::family(h, {{"1", "3"}, {"2", "4"}});
	auto r = hall_deficiency(h, m);
	EXPECT_FALSE(checks::violator_problem(h, m, r));
	auto bad = r;
	bad.violator->members = {0};
	EXPECT_TRUE(checks::violator_problem(h, m, bad));
	bad.violator.reset();
	EXPECT_TRUE(checks::violator_problem(h, m, bad));
}

TEST(Campaign, K2ReductionDrawsItsOwnBipartiteInstances) {
	CampaignConfig c;
	c.trials = 3;
	c.k_values = {3};
	c.properties = {Property::K2Reduction, Property::Thm27};
	auto r = run_campaign(c);
	EXPECT_TRUE(r.ok()) << campaign_text(r);
}

} // namespace
} // namespace khall
