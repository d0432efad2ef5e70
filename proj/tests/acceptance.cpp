// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails. argv[1], when given, is the khall executable used for
// the byte-identical output check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "khall/khall.hpp"

using namespace khall;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
	bool ok = true;
	std::string detail;

	void require(bool cond, const std::string& what) {
		if (!cond && ok) {
			ok = false;
			detail = what;
		}
	}
};

VertexSet set_of(const KPartiteHypergraph& h, std::initializer_list<const char*> labels) {
	VertexSet s;
	for (auto l : labels) s.push_back(*h.find(l));
	std::sort(s.begin(), s.end());
	return s;
}

Outcome example_2_5() {
	Outcome o;
	auto start = Clock::now();
	auto h = fixture("ex_2_5");
	auto r = analyze(h);
	o.require(r.theorem21.has_value(), "prefix criterion not applicable");
	if (!o.ok) return o;
	const auto& v = *r.theorem21;
	o.require(!v.unique && v.analyses.size() == 2, "expected at least two prefix perfect matchings");
	if (!o.ok) return o;
	Matching m1{set_of(h, {"x1", "y2"}), set_of(h, {"x2", "y1"})};
	Matching m2{set_of(h, {"x1", "y1"}), set_of(h, {"x2", "y2"})};
	std::sort(m1.begin(), m1.end());
	for (const auto& a : v.analyses) {
		if (a.prefix_matching == m1) {
			o.require(a.hall.deficiency == 1, "N(M1) deficiency is not 1");
			o.require(a.hall.violator && a.hall.violator->neighborhood == set_of(h, {"z2"}), "N(A) for M1 is not {z2}");
		} else if (a.prefix_matching == m2) {
			o.require(a.hall.deficiency == 0, "M2 deficiency is not 0");
			Matching expected{set_of(h, {"x1", "y1", "z1"}), set_of(h, {"x2", "y2", "z2"})};
			o.require(a.extension == expected, "extension of M2 is not {x1,y1,z1},{x2,y2,z2}");
		} else {
			o.require(false, "unexpected prefix matching");
		}
	}
	o.require(r.duality && r.duality->alpha_prime == 2, "alpha' is not 2");
	auto elapsed = seconds_since(start);
	o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
	std::ostringstream d;
	d << "pm_count>=2, deficiencies " << v.analyses[0].hall.deficiency << "/" << v.analyses[1].hall.deficiency
	  << ", alpha'=" << (r.duality ? r.duality->alpha_prime : 0) << ", " << elapsed * 1000 << " ms";
	if (o.ok) o.detail = d.str();
	return o;
}

Outcome example_2_8() {
	Outcome o;
	auto start = Clock::now();
	auto h = fixture("ex_2_8");
	auto r = analyze(h);
	o.require(r.theorem21.has_value() && r.duality.has_value(), "analysis incomplete");
	if (!o.ok) return o;
	const auto& v = *r.theorem21;
	const auto& d = *r.duality;
	Matching pm{set_of(h, {"1", "3"}), set_of(h, {"2", "4"})};
	o.require(v.unique && v.analyses.size() == 1, "prefix perfect matching is not unique");
	o.require(v.analyses.at(0).prefix_matching == pm, "prefix perfect matching is not {1,3},{2,4}");
	o.require(v.analyses.at(0).hall.deficiency == 1, "deficiency is not 1");
	o.require(d.alpha_prime == 1, "alpha' is not 1");
	o.require(d.beta == 2, "beta is not 2");
	o.require(!d.konig_equality && !d.has_t_matching, "equality flags are not both false");
	auto elapsed = seconds_since(start);
	o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
	if (o.ok) o.detail = "unique PM, deficiency 1, alpha'=1, beta=2, " + std::to_string(elapsed * 1000) + " ms";
	return o;
}

Outcome campaign_criterion(CampaignConfig c, Property p, bool forbid_vacuous, double time_limit_s) {
	Outcome o;
	c.properties = {p};
	auto r = run_campaign(c);
	const auto& t = r.tallies.at(p);
	o.require(t.pass + t.fail == c.trials, "tally does not add up");
	o.require(t.fail == 0, std::to_string(t.fail) + " failures, first: "
		+ (t.first_failure ? t.first_failure->message + "\n" + t.first_failure->instance : std::string()));
	if (forbid_vacuous) o.require(t.vacuous == 0, std::to_string(t.vacuous) + " vacuous trials");
	o.require(r.wall_clock_ms < time_limit_s * 1000, "took " + std::to_string(r.wall_clock_ms) + " ms");
	if (o.ok)
		o.detail = std::to_string(t.pass) + "/" + std::to_string(c.trials) + " pass, " + std::to_string(t.vacuous)
			+ " vacuous, " + std::to_string(static_cast<long long>(r.wall_clock_ms)) + " ms";
	return o;
}

CampaignConfig planted_corpus() {
	CampaignConfig c;
	c.trials = 500;
	c.seed = 2024;
	c.k_values = {2, 3, 4};
	c.t_values = {1, 2, 3, 4, 5};
	c.modes = {InstanceMode::UniquePlanted};
	return c;
}

std::string run_capture(const std::string& cmd, int& status) {
	std::string out;
	FILE* pipe = popen(cmd.c_str(), "r");
	if (!pipe) {
		status = -1;
		return out;
	}
	std::array<char, 4096> buf{};
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
	status = pclose(pipe);
	return out;
}

Outcome determinism(const std::string& exe) {
	Outcome o;
	std::vector<std::string> outputs;
	if (!exe.empty()) {
		const std::vector<std::string> cmds{
			exe + " generate planted --k 3 --t 4 --seed 7",
			exe + " generate random --sizes 3,3,3 --p 0.4 --seed 11",
			exe + " analyze fixture:ex_2_5 --json",
			exe + " analyze fixture:ex_2_8 --json",
			exe + " verify --trials 30 --seed 42 --json",
		};
		for (const auto& cmd : cmds) {
			int s1 = 0, s2 = 0;
			auto a = run_capture(cmd, s1);
			auto b = run_capture(cmd, s2);
			o.require(s1 == 0 && s2 == 0, "nonzero exit from: " + cmd);
			o.require(!a.empty() && a == b, "outputs differ for: " + cmd);
		}
	}
	// Library-level repeat of the same pipeline.
	GeneratorParams p;
	p.k = 3;
	p.part_sizes = {4, 4, 5};
	auto g1 = gen_planted_unique(p, 7), g2 = gen_planted_unique(p, 7);
	o.require(serialize_instance(g1.graph, g1.metadata) == serialize_instance(g2.graph, g2.metadata), "generate differs");
	o.require(analysis_json(g1.graph, analyze(g1.graph)).dump(2) == analysis_json(g2.graph, analyze(g2.graph)).dump(2),
		"analysis differs");
	CampaignConfig c;
	c.trials = 20;
	c.seed = 3;
	o.require(campaign_json(run_campaign(c)).dump(2) == campaign_json(run_campaign(c)).dump(2), "campaign differs");
	if (o.ok) o.detail = exe.empty() ? "library outputs identical (CLI not checked)" : "CLI and library outputs identical";
	return o;
}

} // namespace

int main(int argc, char** argv) {
	const std::string exe = argc > 1 ? argv[1] : "";

	CampaignConfig random_corpus;
	random_corpus.trials = 500;
	random_corpus.seed = 2025;
	random_corpus.k_values = {2, 3, 4};
	random_corpus.t_values = {1, 2, 3, 4, 5};
	random_corpus.modes = {InstanceMode::Random};

	CampaignConfig defect_corpus;
	defect_corpus.trials = 200;
	defect_corpus.seed = 2026;
	defect_corpus.k_values = {2, 3, 4};
	defect_corpus.t_values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
	defect_corpus.modes = {InstanceMode::UniquePlanted};

	CampaignConfig bipartite_corpus;
	bipartite_corpus.trials = 200;
	bipartite_corpus.seed = 2027;
	bipartite_corpus.k_values = {2};
	bipartite_corpus.t_values = {1, 2, 3, 4, 5, 6, 7, 8};

	const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
		{"1 non-unique counterexample reproduced", example_2_5},
		{"2 Konig counterexample reproduced", example_2_8},
		{"3 unique prefix matching: zero deficiency iff alpha' >= t",
			[] { return campaign_criterion(planted_corpus(), Property::Thm21, true, 60); }},
		{"4 extension has size t - deficiency",
			[] { return campaign_criterion(planted_corpus(), Property::Thm26, true, 60); }},
		{"5 alpha' = t iff alpha' = beta = t",
			[&] { return campaign_criterion(random_corpus, Property::Thm27, false, 60); }},
		{"6 matching-based deficiency equals subset oracle",
			[&] { return campaign_criterion(defect_corpus, Property::DefectEquivalence, true, 60); }},
		{"7 bipartite reduction to Hall and Konig",
			[&] { return campaign_criterion(bipartite_corpus, Property::K2Reduction, false, 60); }},
		{"8 byte-identical outputs across runs", [&] { return determinism(exe); }},
	};

	int failed = 0;
	for (const auto& [name, run] : criteria) {
		Outcome o;
		try {
			o = run();
		} catch (const std::exception& e) {
			o.ok = false;
			o.detail = std::string("exception: ") + e.what();
		}
		if (!o.ok) ++failed;
		std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << o.detail << ")" << std::endl;
	}
	std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << std::endl;
	return failed ? 1 : 0;
}
