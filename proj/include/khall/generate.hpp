#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "khall/error.hpp"
#include "khall/hypergraph.hpp"
#include "khall/matching.hpp"
#include "khall/random.hpp"

namespace khall {

struct GeneratorParams {
	std::size_t k = 3;
	std::vector<std::size_t> part_sizes;
	/// Random mode: independent inclusion probability of each k-tuple.
	double edge_probability = 0.3;
	/// Planted mode: inclusion probability of each admissible off-diagonal trace.
	double trace_density = 0.4;
	/// Planted mode: each trace is completed by this many distinct V_k vertices.
	std::size_t attachments_min = 1;
	std::size_t attachments_max = 2;
};

struct GeneratedInstance {
	KPartiteHypergraph graph;
	/// The instance has no edges at all.
	bool degenerate = false;
	std::size_t retries = 0;
	nlohmann::json metadata = nlohmann::json::object();
};

inline constexpr std::size_t max_generated_tuples = 1'000'000;

inline void validate_params(const GeneratorParams& p) {
	auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidParams, msg); };
	if (p.k < 2 || p.k > 26) fail("k must be in [2, 26]");
	if (p.part_sizes.size() != p.k) fail("part_sizes must list exactly k sizes");
	std::size_t tuples = 1;
	for (auto s : p.part_sizes) {
		if (s == 0) fail("part sizes must be positive");
		if (tuples > max_generated_tuples / s) fail("instance too large to generate");
		tuples *= s;
	}
	if (!(p.edge_probability >= 0.0 && p.edge_probability <= 1.0)) fail("edge probability must be in [0, 1]");
	if (!(p.trace_density >= 0.0 && p.trace_density <= 1.0)) fail("trace density must be in [0, 1]");
	if (p.attachments_min < 1 || p.attachments_min > p.attachments_max)
		fail("attachments must satisfy 1 <= min <= max");
}

/// Generated vertex labels: part letter followed by a 1-based index ("a1", "b3").
inline std::string vertex_label(std::size_t part, std::size_t local) {
	return std::string(1, static_cast<char>('a' + part)) + std::to_string(local + 1);
}

namespace detail {

inline RawInstance labelled_parts(const std::vector<std::size_t>& sizes) {
	RawInstance raw;
	for (std::size_t p = 0; p < sizes.size(); ++p) {
		raw.parts.emplace_back();
		for (std::size_t i = 0; i < sizes[p]; ++i) raw.parts.back().push_back(vertex_label(p, i));
	}
	return raw;
}

// Odometer over all tuples (i_0, ..., i_{n-1}) with i_j < sizes[j], in lexicographic order.
template <typename Fn>
void for_each_tuple(const std::vector<std::size_t>& sizes, Fn&& fn) {
	std::vector<std::size_t> tuple(sizes.size(), 0);
	std::uint64_t index = 0;
	while (true) {
		fn(index++, tuple);
		std::size_t j = sizes.size();
		while (j > 0) {
			--j;
			if (++tuple[j] < sizes[j]) break;
			tuple[j] = 0;
			if (j == 0) return;
		}
		if (sizes.empty()) return;
	}
}

inline nlohmann::json params_json(const std::string& generator, const GeneratorParams& p, std::uint64_t seed) {
	nlohmann::json j;
	j["generator"] = generator;
	j["seed"] = seed;
	j["k"] = p.k;
	j["part_sizes"] = p.part_sizes;
	if (generator == "random") {
		j["edge_probability"] = p.edge_probability;
	} else {
		j["trace_density"] = p.trace_density;
		j["attachments_min"] = p.attachments_min;
		j["attachments_max"] = p.attachments_max;
	}
	return j;
}

} // namespace detail

/// Each k-tuple with one vertex per part becomes an edge with probability
/// edge_probability. The result is validated in lenient mode.
inline GeneratedInstance gen_random(const GeneratorParams& params, std::uint64_t seed) {
	validate_params(params);
	CounterStream coin(seed, 1);
	RawInstance raw = detail::labelled_parts(params.part_sizes);
	detail::for_each_tuple(params.part_sizes, [&](std::uint64_t index, const std::vector<std::size_t>& tuple) {
		if (coin.uniform(index) < params.edge_probability) {
			std::vector<std::string> edge;
			for (std::size_t p = 0; p < tuple.size(); ++p) edge.push_back(vertex_label(p, tuple[p]));
			raw.edges.push_back(std::move(edge));
		}
	});
	GeneratedInstance out{build_validate(raw, CoverageMode::Lenient)};
	out.degenerate = out.graph.edges().empty();
	out.metadata = detail::params_json("random", params, seed);
	return out;
}

inline constexpr std::size_t planted_max_retries = 100;

/**
 * Instance whose prefix subhypergraph has a unique perfect matching.
 *
 * Prefix traces are the diagonal (i, ..., i) plus random tuples whose first
 * index is at most every other index. Then the largest V_1 vertex can only
 * use its diagonal trace, and removing it leaves the same structure one size
 * smaller, so the diagonal is the only perfect matching. Every trace is
 * completed by between attachments_min and attachments_max distinct V_k
 * vertices. Uniqueness is re-checked by enumeration before returning.
 */
inline GeneratedInstance gen_planted_unique(const GeneratorParams& params, std::uint64_t seed) {
	validate_params(params);
	const std::size_t k = params.k;
	const std::size_t t = params.part_sizes.front();
	for (std::size_t p = 0; p + 1 < k; ++p)
		if (params.part_sizes[p] != t) throw Error(ErrorCode::InvalidParams, "planted mode needs equal prefix part sizes");
	const std::size_t last = params.part_sizes.back();
	const std::vector<std::size_t> prefix_sizes(params.part_sizes.begin(), params.part_sizes.end() - 1);

	for (std::size_t attempt = 0; attempt < planted_max_retries; ++attempt) {
		const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, attempt);
		CounterStream coin(s, 2), count(s, 3), pick(s, 4);

		std::vector<std::vector<std::size_t>> traces;
		detail::for_each_tuple(prefix_sizes, [&](std::uint64_t index, const std::vector<std::size_t>& tuple) {
			const std::size_t first = tuple.front();
			bool diagonal = std::all_of(tuple.begin(), tuple.end(), [&](std::size_t x) { return x == first; });
			bool staircase = std::all_of(tuple.begin(), tuple.end(), [&](std::size_t x) { return first <= x; });
			if (diagonal || (staircase && coin.uniform(index) < params.trace_density)) traces.push_back(tuple);
		});

		RawInstance raw = detail::labelled_parts(params.part_sizes);
		const std::size_t span = params.attachments_max - params.attachments_min + 1;
		for (std::size_t ti = 0; ti < traces.size(); ++ti) {
			std::size_t n = std::min(last, params.attachments_min + static_cast<std::size_t>(count.below(ti, span)));
			std::vector<std::size_t> pool(last);
			std::iota(pool.begin(), pool.end(), std::size_t{0});
			for (std::size_t j = 0; j < n; ++j) {
				auto r = j + static_cast<std::size_t>(pick.below(ti * last + j, last - j));
				std::swap(pool[j], pool[r]);
				std::vector<std::string> edge;
				for (std::size_t p = 0; p + 1 < k; ++p) edge.push_back(vertex_label(p, traces[ti][p]));
				edge.push_back(vertex_label(k - 1, pool[j]));
				raw.edges.push_back(std::move(edge));
			}
		}

		GeneratedInstance out{build_validate(raw, CoverageMode::Lenient)};
		auto pms = enumerate_perfect_matchings(prefix_subhypergraph(out.graph), 2);
		if (pms.matchings.size() != 1) continue;
		out.retries = attempt;
		out.degenerate = out.graph.edges().empty();
		out.metadata = detail::params_json("planted", params, seed);
		return out;
	}
	throw Error(ErrorCode::RetryExhausted,
		"no unique prefix perfect matching after " + std::to_string(planted_max_retries) + " attempts");
}

} // namespace khall
