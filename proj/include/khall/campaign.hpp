#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "khall/bipartite.hpp"
#include "khall/exact.hpp"
#include "khall/generate.hpp"
#include "khall/io.hpp"
#include "khall/matching.hpp"
#include "khall/report.hpp"

namespace khall {

enum class Property { Thm21, Thm26, Thm27, DefectEquivalence, K2Reduction };
enum class InstanceMode { UniquePlanted, Random };

inline constexpr std::array all_properties{
	Property::Thm21, Property::Thm26, Property::Thm27, Property::DefectEquivalence, Property::K2Reduction};

constexpr std::string_view to_string(Property p) {
	switch (p) {
	case Property::Thm21: return "thm21";
	case Property::Thm26: return "thm26";
	case Property::Thm27: return "thm27";
	case Property::DefectEquivalence: return "defect-equivalence";
	case Property::K2Reduction: return "k2-reduction";
	}
	return "unknown";
}

constexpr std::string_view to_string(InstanceMode m) {
	return m == InstanceMode::UniquePlanted ? "unique-planted" : "random";
}

inline Property parse_property(std::string_view s) {
	for (auto p : all_properties)
		if (to_string(p) == s) return p;
	throw Error(ErrorCode::InvalidParams, "unknown property '" + std::string(s) + "'");
}

inline InstanceMode parse_mode(std::string_view s) {
	if (s == "unique-planted" || s == "planted") return InstanceMode::UniquePlanted;
	if (s == "random") return InstanceMode::Random;
	throw Error(ErrorCode::InvalidParams, "unknown mode '" + std::string(s) + "'");
}

struct CampaignConfig {
	std::size_t trials = 100;
	std::uint64_t seed = 0;
	std::vector<std::size_t> k_values{2, 3, 4};
	std::vector<std::size_t> t_values{1, 2, 3, 4};
	std::vector<InstanceMode> modes{InstanceMode::UniquePlanted, InstanceMode::Random};
	std::vector<Property> properties{all_properties.begin(), all_properties.end()};
};

inline void validate_config(const CampaignConfig& c) {
	auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidParams, msg); };
	if (c.trials == 0) fail("trials must be at least 1");
	if (c.k_values.empty() || c.t_values.empty() || c.modes.empty() || c.properties.empty())
		fail("k, t, modes and properties must be nonempty");
	for (auto k : c.k_values)
		if (k < 2 || k > 6) fail("campaign k values must be in [2, 6]");
	for (auto t : c.t_values)
		if (t < 1 || t > 10) fail("campaign t values must be in [1, 10]");
}

struct CampaignFailure {
	std::size_t trial = 0;
	std::uint64_t trial_seed = 0;
	std::string message;
	std::string instance;
};

struct PropertyTally {
	std::size_t pass = 0;
	std::size_t fail = 0;
	/// Passing trials where the property's hypothesis did not apply.
	std::size_t vacuous = 0;
	std::optional<CampaignFailure> first_failure;
};

struct CampaignReport {
	CampaignConfig config;
	std::map<Property, PropertyTally> tallies;
	double wall_clock_ms = 0.0;

	bool ok() const {
		return std::all_of(tallies.begin(), tallies.end(), [](const auto& kv) { return kv.second.fail == 0; });
	}
};

/// Outcome of one property check on one instance.
struct CheckResult {
	bool vacuous = false;
	std::optional<std::string> failure;

	static CheckResult pass() { return {}; }
	static CheckResult skip() { return {true, std::nullopt}; }
	static CheckResult fail(std::string msg) { return {false, std::move(msg)}; }
};

namespace checks {

inline constexpr SolverLimits unlimited{0, 0, true};

inline std::optional<Theorem21Report> try_verdict(const KPartiteHypergraph& h) {
	try {
		return theorem21_verdict(h);
	} catch (const Error& e) {
		if (e.code() != ErrorCode::NotApplicable) throw;
		return std::nullopt;
	}
}

/// With a unique prefix perfect matching, zero deficiency iff α' >= t;
/// otherwise zero deficiency for some prefix matching still implies α' >= t.
inline CheckResult theorem21(const KPartiteHypergraph& h) {
	auto v = try_verdict(h);
	if (!v) return CheckResult::skip();
	const std::size_t alpha = alpha_prime(h, unlimited).value;
	const bool has_t = alpha >= v->t;
	const bool some_zero = std::any_of(v->analyses.begin(), v->analyses.end(),
		[](const PrefixMatchingAnalysis& a) { return a.hall.deficiency == 0; });
	if (v->unique) {
		if (some_zero != has_t)
			return CheckResult::fail("unique prefix matching: deficiency " + std::to_string(v->chosen().hall.deficiency)
				+ " but alpha'=" + std::to_string(alpha) + ", t=" + std::to_string(v->t));
		auto expected = has_t ? Conclusion::MatchingOfSizeTExists : Conclusion::NoMatchingOfSizeT;
		if (v->conclusion != expected) return CheckResult::fail("conclusion disagrees with exact alpha'");
	} else {
		if (some_zero && !has_t) return CheckResult::fail("zero deficiency but alpha' < t");
		auto expected = some_zero ? Conclusion::MatchingOfSizeTExists : Conclusion::Inconclusive;
		if (v->conclusion != expected) return CheckResult::fail("non-unique case reported a definite negative");
	}
	if (v->perfect_matching && !(has_t && h.part_size(h.k() - 1) == v->t))
		return CheckResult::fail("perfect matching flag set without a perfect matching");
	return CheckResult::pass();
}

/// Every extension is a matching of H of size exactly t - deficiency whose
/// prefix traces are elements of the prefix matching it came from.
inline CheckResult theorem26(const KPartiteHypergraph& h) {
	auto v = try_verdict(h);
	if (!v) return CheckResult::skip();
	for (const auto& a : v->analyses) {
		if (a.extension.size() != a.hall.t - a.hall.deficiency)
			return CheckResult::fail("extension has size " + std::to_string(a.extension.size()) + ", expected "
				+ std::to_string(a.hall.t - a.hall.deficiency));
		for (const auto& e : a.extension) {
			if (!h.contains_edge(e)) return CheckResult::fail("extension uses a non-edge");
			auto trace = prefix_trace(e);
			if (std::find(a.prefix_matching.begin(), a.prefix_matching.end(), trace) == a.prefix_matching.end())
				return CheckResult::fail("extension edge does not extend an element of the prefix matching");
		}
		if (!pairwise_disjoint(a.extension)) return CheckResult::fail("extension edges intersect");
	}
	return CheckResult::pass();
}

/// α' = t iff α' = β = t, with α' and β from independent searches, plus
/// weak duality and witness validity.
inline CheckResult theorem27(const KPartiteHypergraph& h) {
	auto d = konig_report(h, unlimited);
	if (d.alpha_prime > d.beta) return CheckResult::fail("weak duality violated");
	if (d.max_matching_witness.size() != d.alpha_prime || !is_matching(h, d.max_matching_witness))
		return CheckResult::fail("invalid maximum matching witness");
	if (d.min_cover_witness.size() != d.beta || !is_vertex_cover(h, d.min_cover_witness))
		return CheckResult::fail("invalid minimum cover witness");
	auto sizes = h.part_sizes();
	if (d.alpha_prime > *std::min_element(sizes.begin(), sizes.end()))
		return CheckResult::fail("alpha' exceeds the smallest part");
	if (d.has_t_matching != d.konig_equality)
		return CheckResult::fail("alpha'=" + std::to_string(d.alpha_prime) + " beta=" + std::to_string(d.beta)
			+ " t=" + std::to_string(d.t) + " breaks the equivalence");
	return CheckResult::pass();
}

inline std::optional<std::string> violator_problem(const KPartiteHypergraph& h, const Matching& m, const HallReport& r) {
	if (r.deficiency == 0) return r.violator ? std::optional<std::string>("violator reported with zero deficiency") : std::nullopt;
	if (!r.violator) return "missing violator";
	Matching subset;
	for (auto i : r.violator->members) {
		if (i >= m.size()) return "violator index out of range";
		subset.push_back(m[i]);
	}
	auto n = neighborhood_of_set(h, subset);
	if (n != r.violator->neighborhood) return "violator neighborhood is wrong";
	if (n.size() + r.deficiency != subset.size()) return "violator does not attain the deficiency";
	return std::nullopt;
}

/// Matching-based deficiency equals the exhaustive subset maximum, and both
/// violators attain it.
inline CheckResult defect_equivalence(const KPartiteHypergraph& h) {
	auto prefix = prefix_subhypergraph(h);
	auto pms = enumerate_perfect_matchings(prefix, 2);
	if (pms.matchings.empty()) return CheckResult::skip();
	for (const auto& m : pms.matchings) {
		auto fast = hall_deficiency(h, m);
		auto slow = hall_subset_oracle(h, m);
		if (fast.deficiency != slow.deficiency || fast.max_sdr != slow.max_sdr)
			return CheckResult::fail("deficiency " + std::to_string(fast.deficiency) + " vs oracle "
				+ std::to_string(slow.deficiency));
		if (auto p = violator_problem(h, m, fast)) return CheckResult::fail("matching-based: " + *p);
		if (auto p = violator_problem(h, m, slow)) return CheckResult::fail("oracle: " + *p);
	}
	return CheckResult::pass();
}

/// For bipartite instances the prefix criterion must agree with classical
/// Hall (by matching and by subset enumeration), and α' = β.
inline CheckResult k2_reduction(const KPartiteHypergraph& h) {
	if (h.k() != 2) return CheckResult::fail("k2-reduction needs a bipartite instance");
	auto v = try_verdict(h);
	const bool positive = v && v->conclusion == Conclusion::MatchingOfSizeTExists;

	const std::size_t left = h.part_size(0), right = h.part_size(1);
	std::vector<std::vector<std::size_t>> adj(left);
	for (const auto& e : h.edges()) adj[e[0].local].push_back(e[1].local);
	const bool by_matching = max_bipartite_matching(adj, right).size == left;

	bool by_subsets = true;
	for (std::uint64_t s = 1; s < (std::uint64_t{1} << left) && by_subsets; ++s) {
		std::vector<bool> hit(right, false);
		std::size_t a = 0, n = 0;
		for (std::size_t i = 0; i < left; ++i)
			if (s >> i & 1) {
				++a;
				for (auto r : adj[i])
					if (!hit[r]) {
						hit[r] = true;
						++n;
					}
			}
		if (n < a) by_subsets = false;
	}
	if (positive != by_matching || by_matching != by_subsets)
		return CheckResult::fail(std::string("prefix criterion ") + (positive ? "positive" : "negative")
			+ ", matching Hall " + (by_matching ? "holds" : "fails") + ", subset Hall " + (by_subsets ? "holds" : "fails"));
	auto d = konig_report(h, unlimited);
	if (d.alpha_prime != d.beta)
		return CheckResult::fail("bipartite alpha'=" + std::to_string(d.alpha_prime) + " != beta=" + std::to_string(d.beta));
	return CheckResult::pass();
}

} // namespace checks

namespace detail {

template <typename T>
const T& pick(const std::vector<T>& values, const CounterStream& s, std::uint64_t counter) {
	return values[static_cast<std::size_t>(s.below(counter, values.size()))];
}

inline const std::vector<double> campaign_densities{0.2, 0.4, 0.6, 0.8};
inline const std::vector<double> campaign_probabilities{0.15, 0.3, 0.5};
inline const std::vector<std::size_t> campaign_attachments{1, 2, 3};

// Sizes near t, clamped to at least one vertex.
inline std::size_t near(std::size_t t, const CounterStream& s, std::uint64_t counter) {
	std::size_t lo = t > 1 ? t - 1 : 1;
	return lo + static_cast<std::size_t>(s.below(counter, t + 2 - lo));
}

} // namespace detail

/// The instance a trial checks for the general properties.
inline GeneratedInstance campaign_instance(const CampaignConfig& c, std::uint64_t trial_seed) {
	CounterStream s(trial_seed, 11);
	const std::size_t k = detail::pick(c.k_values, s, 0);
	const std::size_t t = detail::pick(c.t_values, s, 1);
	const InstanceMode mode = detail::pick(c.modes, s, 2);
	GeneratorParams p;
	p.k = k;
	p.part_sizes.assign(k, t);
	p.part_sizes.back() = detail::near(t, s, 3);
	if (mode == InstanceMode::UniquePlanted) {
		p.trace_density = detail::pick(detail::campaign_densities, s, 4);
		p.attachments_max = detail::pick(detail::campaign_attachments, s, 5);
		return gen_planted_unique(p, trial_seed);
	}
	// Random instances keep equal prefix sizes on even draws so the prefix
	// criterion has something to say; odd draws vary every size.
	if (s.below(6, 2) == 1)
		for (std::size_t i = 1; i + 1 < k; ++i) p.part_sizes[i] = detail::near(t, s, 10 + i);
	p.edge_probability = detail::pick(detail::campaign_probabilities, s, 7);
	return gen_random(p, trial_seed);
}

/// A random bipartite instance for the k = 2 reduction.
inline GeneratedInstance campaign_bipartite_instance(const CampaignConfig& c, std::uint64_t trial_seed) {
	CounterStream s(trial_seed, 12);
	const std::size_t t = detail::pick(c.t_values, s, 0);
	GeneratorParams p;
	p.k = 2;
	p.part_sizes = {t, detail::near(t, s, 1)};
	p.edge_probability = detail::pick(detail::campaign_probabilities, s, 2);
	return gen_random(p, trial_seed);
}

/**
 * Runs every configured property on `trials` generated instances. Trial i
 * uses a seed derived from (seed, i) only, so results do not depend on
 * evaluation order and any failure can be replayed from its instance.
 */
inline CampaignReport run_campaign(const CampaignConfig& config) {
	validate_config(config);
	const auto start = std::chrono::steady_clock::now();
	CampaignReport report;
	report.config = config;
	for (auto p : config.properties) report.tallies[p];

	for (std::size_t trial = 0; trial < config.trials; ++trial) {
		const std::uint64_t trial_seed = derive_seed(config.seed, trial);
		std::optional<GeneratedInstance> general, bipartite;
		for (auto p : config.properties) {
			const GeneratedInstance* inst = nullptr;
			if (p == Property::K2Reduction) {
				if (!bipartite) bipartite = campaign_bipartite_instance(config, trial_seed);
				inst = &*bipartite;
			} else {
				if (!general) general = campaign_instance(config, trial_seed);
				inst = &*general;
			}
			CheckResult r;
			try {
				switch (p) {
				case Property::Thm21: r = checks::theorem21(inst->graph); break;
				case Property::Thm26: r = checks::theorem26(inst->graph); break;
				case Property::Thm27: r = checks::theorem27(inst->graph); break;
				case Property::DefectEquivalence: r = checks::defect_equivalence(inst->graph); break;
				case Property::K2Reduction: r = checks::k2_reduction(inst->graph); break;
				}
			} catch (const std::exception& e) {
				r = CheckResult::fail(std::string("exception: ") + e.what());
			}
			auto& tally = report.tallies[p];
			if (r.failure) {
				++tally.fail;
				if (!tally.first_failure)
					tally.first_failure = CampaignFailure{trial, trial_seed, *r.failure,
						serialize_instance(inst->graph, inst->metadata)};
			} else {
				++tally.pass;
				if (r.vacuous) ++tally.vacuous;
			}
		}
	}
	report.wall_clock_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return report;
}

inline ReportJson campaign_json(const CampaignReport& r, bool include_timing = false) {
	ReportJson j;
	j["report_version"] = report_format_version;
	j["seed"] = r.config.seed;
	j["trials"] = r.config.trials;
	j["k"] = r.config.k_values;
	j["t"] = r.config.t_values;
	j["modes"] = ReportJson::array();
	for (auto m : r.config.modes) j["modes"].push_back(to_string(m));
	ReportJson props = ReportJson::object();
	for (auto p : r.config.properties) {
		const auto& tally = r.tallies.at(p);
		ReportJson t;
		t["pass"] = tally.pass;
		t["fail"] = tally.fail;
		t["vacuous"] = tally.vacuous;
		if (tally.first_failure) {
			ReportJson f;
			f["trial"] = tally.first_failure->trial;
			f["trial_seed"] = tally.first_failure->trial_seed;
			f["message"] = tally.first_failure->message;
			f["instance"] = tally.first_failure->instance;
			t["first_failure"] = f;
		} else {
			t["first_failure"] = nullptr;
		}
		props[std::string(to_string(p))] = t;
	}
	j["properties"] = props;
	j["ok"] = r.ok();
	if (include_timing) j["wall_clock_ms"] = r.wall_clock_ms;
	return j;
}

inline std::string campaign_text(const CampaignReport& r) {
	std::ostringstream out;
	out << "seed " << r.config.seed << ", " << r.config.trials << " trials\n";
	for (auto p : r.config.properties) {
		const auto& t = r.tallies.at(p);
		out << "  " << to_string(p) << ": " << t.pass << "/" << r.config.trials << " pass";
		if (t.vacuous) out << " (" << t.vacuous << " vacuous)";
		if (t.fail) out << ", " << t.fail << " FAIL";
		out << '\n';
		if (t.first_failure) {
			out << "    first failure: trial " << t.first_failure->trial << " (seed " << t.first_failure->trial_seed
				<< "): " << t.first_failure->message << '\n';
			out << t.first_failure->instance;
		}
	}
	out << "wall clock " << static_cast<long long>(r.wall_clock_ms) << " ms\n";
	out << (r.ok() ? "all properties hold\n" : "FAILURES\n");
	return out.str();
}

} // namespace khall
