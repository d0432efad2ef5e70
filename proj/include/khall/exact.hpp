#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "khall/error.hpp"
#include "khall/hypergraph.hpp"
#include "khall/matching.hpp"

namespace khall {

/// Size guard for the exponential solvers. `force` lifts it.
struct SolverLimits {
	std::size_t max_edges = 40;
	std::size_t max_vertices = 40;
	bool force = false;
};

namespace detail {

inline void check_limits(const KPartiteHypergraph& h, const SolverLimits& limits) {
	if (limits.force) return;
	if (h.edges().size() > limits.max_edges || h.vertex_count() > limits.max_vertices)
		throw Error(ErrorCode::TooLarge,
			"instance has " + std::to_string(h.edges().size()) + " edges and " + std::to_string(h.vertex_count())
				+ " vertices; exact solvers are limited to " + std::to_string(limits.max_edges) + " edges and "
				+ std::to_string(limits.max_vertices) + " vertices without force");
}

// Occupancy of vertices per part.
class VertexMarks {
public:
	explicit VertexMarks(const KPartiteHypergraph& h) : marks_(h.k()) {
		for (std::size_t p = 0; p < h.k(); ++p) marks_[p].assign(h.part_size(p), false);
	}
	bool any(const VertexSet& e) const {
		return std::any_of(e.begin(), e.end(), [&](VertexId v) { return marks_[v.part][v.local]; });
	}
	bool test(VertexId v) const { return marks_[v.part][v.local]; }
	void set(const VertexSet& e, bool value) {
		for (auto v : e) marks_[v.part][v.local] = value;
	}
	void set(VertexId v, bool value) { marks_[v.part][v.local] = value; }

private:
	std::vector<std::vector<bool>> marks_;
};

} // namespace detail

struct AlphaResult {
	std::size_t value = 0;
	Matching witness;
};

/**
 * Exact maximum matching size α'(H).
 *
 * Edges are taken in canonical order, which groups them by their V_1 vertex;
 * each V_1 vertex is either matched through one of its still-compatible edges
 * or left unmatched. A branch is cut when the current size plus the number of
 * remaining V_1 vertices with a compatible edge cannot beat the incumbent,
 * and the search stops once the incumbent reaches the smallest part size
 * (no matching can exceed it, in particular t = |V_1|).
 */
inline AlphaResult alpha_prime(const KPartiteHypergraph& h, const SolverLimits& limits = {}) {
	detail::check_limits(h, limits);

	const std::size_t rows = h.part_size(0);
	std::vector<std::vector<const Hyperedge*>> by_row(rows);
	for (const auto& e : h.edges()) by_row[e.front().local].push_back(&e);

	auto sizes = h.part_sizes();
	const std::size_t cap = *std::min_element(sizes.begin(), sizes.end());

	detail::VertexMarks used(h);
	AlphaResult best;
	Matching current;

	auto remaining_bound = [&](std::size_t row) {
		std::size_t n = 0;
		for (std::size_t r = row; r < rows; ++r)
			if (std::any_of(by_row[r].begin(), by_row[r].end(), [&](const Hyperedge* e) { return !used.any(*e); })) ++n;
		return n;
	};

	auto search = [&](auto&& self, std::size_t row) -> bool {
		if (current.size() > best.value) {
			best.value = current.size();
			best.witness = current;
			if (best.value == cap) return true;
		}
		if (row == rows) return false;
		if (current.size() + remaining_bound(row) <= best.value) return false;
		for (const Hyperedge* e : by_row[row]) {
			if (used.any(*e)) continue;
			used.set(*e, true);
			current.push_back(*e);
			bool done = self(self, row + 1);
			current.pop_back();
			used.set(*e, false);
			if (done) return true;
		}
		return self(self, row + 1);
	};
	search(search, 0);
	return best;
}

struct BetaResult {
	std::size_t value = 0;
	VertexSet witness;
};

/**
 * Exact minimum vertex cover size β(H).
 *
 * Branches on the k vertices of the first uncovered edge in canonical order.
 * The incumbent starts as V_1, which covers every edge. A branch is cut when
 * the chosen vertices plus a greedy packing of pairwise disjoint uncovered
 * edges (each needs its own cover vertex) cannot beat the incumbent.
 */
inline BetaResult beta(const KPartiteHypergraph& h, const SolverLimits& limits = {}) {
	detail::check_limits(h, limits);

	BetaResult best{h.part_size(0), h.part_vertices(0)};
	detail::VertexMarks chosen(h);
	VertexSet current;

	auto covered = [&](const Hyperedge& e) { return chosen.any(e); };

	auto packing_bound = [&](const Hyperedge* skip_before) {
		detail::VertexMarks blocked(h);
		std::size_t n = 0;
		for (const auto& e : h.edges()) {
			if (&e < skip_before || covered(e) || blocked.any(e)) continue;
			blocked.set(e, true);
			++n;
		}
		return n;
	};

	auto search = [&](auto&& self, std::size_t from) -> void {
		const auto& edges = h.edges();
		std::size_t i = from;
		while (i < edges.size() && covered(edges[i])) ++i;
		if (i == edges.size()) {
			if (current.size() < best.value) {
				best.value = current.size();
				best.witness = detail::normalized(current);
			}
			return;
		}
		if (current.size() + packing_bound(&edges[i]) >= best.value) return;
		for (auto v : edges[i]) {
			chosen.set(v, true);
			current.push_back(v);
			self(self, i + 1);
			current.pop_back();
			chosen.set(v, false);
		}
	};
	search(search, 0);
	return best;
}

/// α', β and t = |V_1| computed by independent searches, with both witnesses.
struct DualityReport {
	std::size_t alpha_prime = 0;
	std::size_t beta = 0;
	std::size_t t = 0;
	Matching max_matching_witness;
	VertexSet min_cover_witness;
	bool has_t_matching = false;
	bool konig_equality = false;
};

inline DualityReport konig_report(const KPartiteHypergraph& h, const SolverLimits& limits = {}) {
	auto a = alpha_prime(h, limits);
	auto b = beta(h, limits);
	DualityReport r;
	r.alpha_prime = a.value;
	r.beta = b.value;
	r.t = h.part_size(0);
	r.max_matching_witness = std::move(a.witness);
	r.min_cover_witness = std::move(b.witness);
	r.has_t_matching = r.alpha_prime == r.t;
	r.konig_equality = r.alpha_prime == r.t && r.beta == r.t;
	return r;
}

} // namespace khall
