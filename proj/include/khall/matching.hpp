#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khall/bipartite.hpp"
#include "khall/error.hpp"
#include "khall/hypergraph.hpp"

namespace khall {

/// A set of pairwise disjoint edges, of H or of a generated subhypergraph.
using Matching = std::vector<VertexSet>;

struct PerfectMatchingEnumeration {
	std::vector<Matching> matchings;
	/// Spanned parts have different sizes, so no perfect matching can exist.
	bool part_size_mismatch = false;
	/// The search stopped at the limit; more perfect matchings may exist.
	bool truncated = false;
};

/**
 * Backtracking enumeration of perfect matchings of a part-structured
 * generated subhypergraph. Vertices of the first spanned part are covered in
 * canonical order, and candidate traces are tried in canonical order, so the
 * first matching returned is the lexicographically smallest one.
 */
inline PerfectMatchingEnumeration enumerate_perfect_matchings(const GeneratedSubhypergraph& sub, std::size_t limit) {
	if (limit == 0) throw Error(ErrorCode::InvalidParams, "enumeration limit must be at least 1");
	if (!sub.has_part_structure())
		throw Error(ErrorCode::InvalidShape, "perfect matching enumeration needs a subhypergraph on whole parts");

	PerfectMatchingEnumeration result;
	const auto& parts = *sub.parts;
	const auto& sizes = sub.part_sizes;
	if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) {
		result.part_size_mismatch = true;
		return result;
	}
	const std::size_t t = sizes.front();

	std::vector<std::vector<const VertexSet*>> by_first(t);
	for (const auto& trace : sub.traces) {
		if (trace.size() != parts.size())
			throw Error(ErrorCode::InvalidShape, "subhypergraph is not uniform over its parts");
		by_first[trace.front().local].push_back(&trace);
	}

	// used[position of part in `parts`][local]
	std::vector<std::size_t> position(parts.back() + 1, 0);
	for (std::size_t i = 0; i < parts.size(); ++i) position[parts[i]] = i;
	std::vector<std::vector<bool>> used(parts.size(), std::vector<bool>(t, false));
	Matching current;

	// Traces through each vertex outside the first part, for dead-end detection.
	std::vector<std::vector<std::vector<const VertexSet*>>> through(parts.size(), std::vector<std::vector<const VertexSet*>>(t));
	for (const auto& trace : sub.traces)
		for (std::size_t i = 1; i < trace.size(); ++i) through[position[trace[i].part]][trace[i].local].push_back(&trace);
	auto is_free = [&](const VertexSet* trace) {
		return std::none_of(trace->begin(), trace->end(), [&](VertexId v) { return used[position[v.part]][v.local]; });
	};
	// Some uncovered vertex can no longer be covered by any free trace.
	auto stuck = [&] {
		for (std::size_t p = 1; p < parts.size(); ++p)
			for (std::size_t v = 0; v < t; ++v)
				if (!used[p][v] && std::none_of(through[p][v].begin(), through[p][v].end(), is_free)) return true;
		return false;
	};

	auto search = [&](auto&& self, std::size_t row) -> bool {
		if (row == t) {
			result.matchings.push_back(current);
			return result.matchings.size() >= limit;
		}
		for (const VertexSet* trace : by_first[row]) {
			if (!is_free(trace)) continue;
			for (auto v : *trace) used[position[v.part]][v.local] = true;
			current.push_back(*trace);
			bool stop = !stuck() && self(self, row + 1);
			current.pop_back();
			for (auto v : *trace) used[position[v.part]][v.local] = false;
			if (stop) return true;
		}
		return false;
	};
	result.truncated = search(search, 0);
	return result;
}

/// Family of neighborhoods (N(e_1), ..., N(e_t)) of a prefix matching; the
/// right side is the extension part V_k.
struct SdrInstance {
	Matching left;
	std::size_t right_part = 0;
	std::size_t right_size = 0;
	std::vector<VertexSet> adjacency;
};

inline SdrInstance make_sdr_instance(const KPartiteHypergraph& h, const Matching& m) {
	SdrInstance inst;
	inst.left = m;
	inst.right_part = h.k() - 1;
	inst.right_size = h.part_size(h.k() - 1);
	for (const auto& e : m) inst.adjacency.push_back(neighborhood(h, e));
	return inst;
}

/// A partial system of distinct representatives: pairs (left index, vertex).
using SdrPairs = std::vector<std::pair<std::size_t, VertexId>>;

namespace detail {

inline std::vector<std::vector<std::size_t>> local_adjacency(const SdrInstance& inst) {
	std::vector<std::vector<std::size_t>> adj(inst.adjacency.size());
	for (std::size_t i = 0; i < adj.size(); ++i)
		for (auto v : inst.adjacency[i]) adj[i].push_back(v.local);
	return adj;
}

} // namespace detail

inline SdrPairs max_bipartite_matching(const SdrInstance& inst) {
	auto adj = detail::local_adjacency(inst);
	auto m = max_bipartite_matching(adj, inst.right_size);
	SdrPairs pairs;
	for (std::size_t i = 0; i < adj.size(); ++i)
		if (m.left_to_right[i] != unmatched) pairs.emplace_back(i, VertexId{inst.right_part, m.left_to_right[i]});
	return pairs;
}

/// A subset A of the prefix matching (indices into it) with |N(A)| = |A| - deficiency.
struct HallViolator {
	std::vector<std::size_t> members;
	VertexSet neighborhood;
};

struct HallReport {
	std::size_t t = 0;
	std::size_t max_sdr = 0;
	std::size_t deficiency = 0;
	std::optional<HallViolator> violator;
};

/// Throws NotPerfectPrefixMatching unless m is a perfect matching of the
/// generated subhypergraph on V_1 ∪ … ∪ V_{k-1}.
inline void require_prefix_perfect_matching(const KPartiteHypergraph& h, const Matching& m) {
	auto prefix = prefix_subhypergraph(h);
	for (const auto& e : m)
		if (!prefix.contains_trace(e))
			throw Error(ErrorCode::NotPerfectPrefixMatching, "element is not a trace of the prefix subhypergraph");
	if (!pairwise_disjoint(m))
		throw Error(ErrorCode::NotPerfectPrefixMatching, "elements are not pairwise disjoint");
	std::size_t covered = 0;
	for (const auto& e : m) covered += e.size();
	if (covered != prefix.base.size())
		throw Error(ErrorCode::NotPerfectPrefixMatching,
			"covers " + std::to_string(covered) + " of " + std::to_string(prefix.base.size()) + " prefix vertices");
}

/**
 * Deficiency of the neighborhood family of a prefix perfect matching,
 * computed from a maximum SDR. The violator is the set of elements reachable
 * by alternating paths from elements left without a representative.
 */
inline HallReport hall_deficiency(const KPartiteHypergraph& h, const Matching& m) {
	require_prefix_perfect_matching(h, m);
	auto inst = make_sdr_instance(h, m);
	auto adj = detail::local_adjacency(inst);
	auto bm = max_bipartite_matching(adj, inst.right_size);

	HallReport report;
	report.t = m.size();
	report.max_sdr = bm.size;
	report.deficiency = report.t - report.max_sdr;
	if (report.deficiency > 0) {
		auto reach = alternating_reachable_left(adj, bm);
		HallViolator w;
		for (std::size_t i = 0; i < reach.size(); ++i)
			if (reach[i]) w.members.push_back(i);
		VertexSet n;
		for (auto i : w.members) n.insert(n.end(), inst.adjacency[i].begin(), inst.adjacency[i].end());
		w.neighborhood = detail::normalized(std::move(n));
		report.violator = std::move(w);
	}
	return report;
}

inline constexpr std::size_t subset_oracle_max_t = 20;

/// Exhaustive max over all A ⊆ M of |A| - |N(A)|. The first subset in
/// bitmask order attaining the maximum is reported as the violator.
inline HallReport hall_subset_oracle(const KPartiteHypergraph& h, const Matching& m) {
	if (m.size() > subset_oracle_max_t)
		throw Error(ErrorCode::TooLarge,
			"subset oracle is limited to t <= " + std::to_string(subset_oracle_max_t) + ", got " + std::to_string(m.size()));
	require_prefix_perfect_matching(h, m);

	const std::size_t t = m.size();
	const std::size_t right = h.part_size(h.k() - 1);
	const std::size_t words = (right + 63) / 64;
	std::vector<std::vector<std::uint64_t>> masks(t, std::vector<std::uint64_t>(words, 0));
	for (std::size_t i = 0; i < t; ++i)
		for (auto v : neighborhood(h, m[i])) masks[i][v.local / 64] |= std::uint64_t{1} << (v.local % 64);

	std::size_t best = 0;
	std::uint64_t best_subset = 0;
	std::vector<std::uint64_t> acc(words);
	for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << t); ++subset) {
		std::fill(acc.begin(), acc.end(), 0);
		for (std::size_t i = 0; i < t; ++i)
			if (subset >> i & 1)
				for (std::size_t w = 0; w < words; ++w) acc[w] |= masks[i][w];
		std::size_t n = 0;
		for (auto w : acc) n += static_cast<std::size_t>(std::popcount(w));
		std::size_t a = static_cast<std::size_t>(std::popcount(subset));
		if (a > n && a - n > best) {
			best = a - n;
			best_subset = subset;
		}
	}

	HallReport report;
	report.t = t;
	report.deficiency = best;
	report.max_sdr = t - best;
	if (best > 0) {
		HallViolator w;
		Matching chosen;
		for (std::size_t i = 0; i < t; ++i)
			if (best_subset >> i & 1) {
				w.members.push_back(i);
				chosen.push_back(m[i]);
			}
		w.neighborhood = neighborhood_of_set(h, chosen);
		report.violator = std::move(w);
	}
	return report;
}

/**
 * Completes each prefix element e_i that received a representative v in a
 * maximum SDR to the edge e_i ∪ {v}. The result is a matching of H of size
 * t - deficiency(M); with zero deficiency it has size t = |V_1|.
 */
inline Matching extend_matching(const KPartiteHypergraph& h, const Matching& m) {
	require_prefix_perfect_matching(h, m);
	auto inst = make_sdr_instance(h, m);
	Matching out;
	for (const auto& [i, v] : max_bipartite_matching(inst)) {
		VertexSet e = m[i];
		e.push_back(v);
		out.push_back(detail::normalized(std::move(e)));
	}
	return out;
}

enum class Conclusion {
	MatchingOfSizeTExists,
	NoMatchingOfSizeT,
	Inconclusive,
};

constexpr std::string_view to_string(Conclusion c) {
	switch (c) {
	case Conclusion::MatchingOfSizeTExists: return "matching_of_size_t_exists";
	case Conclusion::NoMatchingOfSizeT: return "no_matching_of_size_t";
	case Conclusion::Inconclusive: return "inconclusive";
	}
	return "unknown";
}

struct PrefixMatchingAnalysis {
	Matching prefix_matching;
	HallReport hall;
	Matching extension;
};

struct Theorem21Report {
	std::size_t t = 0;
	bool unique = false;
	/// One entry per enumerated prefix perfect matching, canonical order first.
	std::vector<PrefixMatchingAnalysis> analyses;
	Conclusion conclusion = Conclusion::Inconclusive;
	/// Index into `analyses` whose extension is reported as the witness.
	std::size_t witness_index = 0;
	bool perfect_matching = false;

	const Matching& witness() const { return analyses.at(witness_index).extension; }
	const PrefixMatchingAnalysis& chosen() const { return analyses.front(); }
};

/**
 * Decides whether H has a matching of size t = |V_1| from the prefix
 * perfect matchings. With a unique prefix perfect matching the Hall
 * condition on its neighborhoods is necessary and sufficient. Without
 * uniqueness only sufficiency holds, so an all-deficient outcome is
 * reported as inconclusive.
 *
 * Throws NotApplicable when prefix part sizes differ or the prefix has no
 * perfect matching.
 */
inline Theorem21Report theorem21_verdict(const KPartiteHypergraph& h, std::size_t enumeration_limit = 2) {
	auto prefix = prefix_subhypergraph(h);
	auto pms = enumerate_perfect_matchings(prefix, enumeration_limit);
	if (pms.part_size_mismatch) throw Error(ErrorCode::NotApplicable, "prefix parts have different sizes");
	if (pms.matchings.empty()) throw Error(ErrorCode::NotApplicable, "prefix subhypergraph has no perfect matching");

	Theorem21Report r;
	r.t = h.part_size(0);
	r.unique = pms.matchings.size() == 1;
	for (auto& m : pms.matchings) {
		PrefixMatchingAnalysis a;
		a.hall = hall_deficiency(h, m);
		a.extension = extend_matching(h, m);
		a.prefix_matching = std::move(m);
		r.analyses.push_back(std::move(a));
	}

	auto sufficient = std::find_if(r.analyses.begin(), r.analyses.end(),
		[](const PrefixMatchingAnalysis& a) { return a.hall.deficiency == 0; });
	if (sufficient != r.analyses.end()) {
		r.conclusion = Conclusion::MatchingOfSizeTExists;
		r.witness_index = static_cast<std::size_t>(sufficient - r.analyses.begin());
	} else {
		r.conclusion = r.unique ? Conclusion::NoMatchingOfSizeT : Conclusion::Inconclusive;
		auto best = std::max_element(r.analyses.begin(), r.analyses.end(),
			[](const PrefixMatchingAnalysis& a, const PrefixMatchingAnalysis& b) {
				return a.extension.size() < b.extension.size();
			});
		r.witness_index = static_cast<std::size_t>(best - r.analyses.begin());
	}
	r.perfect_matching = r.conclusion == Conclusion::MatchingOfSizeTExists && h.part_size(h.k() - 1) == r.t;
	return r;
}

} // namespace khall
