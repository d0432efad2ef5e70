#pragma once

// Brute-force reference computations for tests. They only read the edge list
// and part sizes and share no search code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "khall/hypergraph.hpp"

namespace khall::oracle {

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
	for (auto x : a)
		for (auto y : b)
			if (x == y) return false;
	return true;
}

/// Largest set of pairwise disjoint edges, by plain include/exclude recursion.
inline std::size_t max_matching(const std::vector<VertexSet>& edges) {
	std::vector<const VertexSet*> chosen;
	std::size_t best = 0;
	auto rec = [&](auto&& self, std::size_t i) -> void {
		best = std::max(best, chosen.size());
		if (i == edges.size()) return;
		if (std::all_of(chosen.begin(), chosen.end(), [&](const VertexSet* c) { return disjoint(*c, edges[i]); })) {
			chosen.push_back(&edges[i]);
			self(self, i + 1);
			chosen.pop_back();
		}
		self(self, i + 1);
	};
	rec(rec, 0);
	return best;
}

inline std::size_t max_matching(const KPartiteHypergraph& h) { return max_matching(h.edges()); }

/// Smallest vertex subset meeting every edge, by enumerating all subsets.
inline std::size_t min_vertex_cover(const KPartiteHypergraph& h) {
	auto vs = h.vertices();
	const std::size_t n = vs.size();
	std::size_t best = n;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
		auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
		if (size >= best) continue;
		bool ok = true;
		for (const auto& e : h.edges()) {
			bool hit = false;
			for (auto v : e) {
				auto idx = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
				if (mask >> idx & 1) hit = true;
			}
			if (!hit) {
				ok = false;
				break;
			}
		}
		if (ok) best = size;
	}
	return best;
}

inline std::vector<VertexSet> prefix_traces(const KPartiteHypergraph& h) {
	std::set<VertexSet> s;
	for (const auto& e : h.edges()) s.insert(VertexSet(e.begin(), e.end() - 1));
	return {s.begin(), s.end()};
}

/// Number of perfect matchings of the prefix, counting subsets of traces.
inline std::size_t prefix_perfect_matching_count(const KPartiteHypergraph& h) {
	std::size_t prefix_vertices = 0;
	for (std::size_t p = 0; p + 1 < h.k(); ++p) prefix_vertices += h.part_size(p);
	auto traces = prefix_traces(h);
	std::size_t count = 0;
	std::vector<const VertexSet*> chosen;
	auto rec = [&](auto&& self, std::size_t i, std::size_t covered) -> void {
		if (covered == prefix_vertices) {
			++count;
			return;
		}
		if (i == traces.size()) return;
		if (std::all_of(chosen.begin(), chosen.end(), [&](const VertexSet* c) { return disjoint(*c, traces[i]); })) {
			chosen.push_back(&traces[i]);
			self(self, i + 1, covered + traces[i].size());
			chosen.pop_back();
		}
		self(self, i + 1, covered);
	};
	rec(rec, 0, 0);
	return count;
}

/// max over A ⊆ M of |A| - |N(A)|, with neighborhoods read off the edge list.
inline std::size_t deficiency(const KPartiteHypergraph& h, const std::vector<VertexSet>& m) {
	std::vector<std::set<VertexId>> nbr(m.size());
	for (const auto& e : h.edges())
		for (std::size_t i = 0; i < m.size(); ++i)
			if (VertexSet(e.begin(), e.end() - 1) == m[i]) nbr[i].insert(e.back());
	std::size_t best = 0;
	for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
		std::set<VertexId> u;
		std::size_t a = 0;
		for (std::size_t i = 0; i < m.size(); ++i)
			if (mask >> i & 1) {
				++a;
				u.insert(nbr[i].begin(), nbr[i].end());
			}
		if (a > u.size()) best = std::max(best, a - u.size());
	}
	return best;
}

/// Number of permutations σ with adj[i][σ(i)] for all i.
inline std::size_t perfect_matchings_by_permutation(const std::vector<std::vector<bool>>& adj) {
	std::vector<std::size_t> perm(adj.size());
	std::iota(perm.begin(), perm.end(), std::size_t{0});
	std::size_t count = 0;
	do {
		bool ok = true;
		for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = adj[i][perm[i]];
		if (ok) ++count;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return count;
}

} // namespace khall::oracle
