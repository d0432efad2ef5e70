#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace khall {

inline constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();

/// Maximum matching of a bipartite graph given as left -> right adjacency.
struct BipartiteMatching {
	std::vector<std::size_t> left_to_right;
	std::vector<std::size_t> right_to_left;
	std::size_t size = 0;
};

namespace detail {

inline bool augment(std::span<const std::vector<std::size_t>> adjacency, std::size_t u, std::vector<bool>& visited,
	BipartiteMatching& m) {
	for (std::size_t v : adjacency[u]) {
		if (visited[v]) continue;
		visited[v] = true;
		if (m.right_to_left[v] == unmatched || augment(adjacency, m.right_to_left[v], visited, m)) {
			m.left_to_right[u] = v;
			m.right_to_left[v] = u;
			return true;
		}
	}
	return false;
}

} // namespace detail

/**
 * Augmenting-path maximum matching. Left vertices are tried in ascending
 * order and each adjacency list is scanned in the order given, so the
 * result is a deterministic function of the input.
 */
inline BipartiteMatching max_bipartite_matching(std::span<const std::vector<std::size_t>> adjacency,
	std::size_t right_count) {
	BipartiteMatching m;
	m.left_to_right.assign(adjacency.size(), unmatched);
	m.right_to_left.assign(right_count, unmatched);
	std::vector<bool> visited(right_count);
	for (std::size_t u = 0; u < adjacency.size(); ++u) {
		visited.assign(right_count, false);
		if (detail::augment(adjacency, u, visited, m)) ++m.size;
	}
	return m;
}

/**
 * Left vertices reachable by alternating paths from unmatched left vertices.
 *
 * With a maximum matching the reachable set Z satisfies |Z| - |N(Z)| equal to
 * the number of unmatched left vertices, which is the largest Hall deficiency.
 */
inline std::vector<bool> alternating_reachable_left(std::span<const std::vector<std::size_t>> adjacency,
	const BipartiteMatching& m) {
	std::vector<bool> left_seen(adjacency.size(), false);
	std::vector<bool> right_seen(m.right_to_left.size(), false);
	std::vector<std::size_t> stack;
	for (std::size_t u = 0; u < adjacency.size(); ++u) {
		if (m.left_to_right[u] == unmatched) {
			left_seen[u] = true;
			stack.push_back(u);
		}
	}
	while (!stack.empty()) {
		std::size_t u = stack.back();
		stack.pop_back();
		for (std::size_t v : adjacency[u]) {
			if (right_seen[v]) continue;
			right_seen[v] = true;
			std::size_t w = m.right_to_left[v];
			if (w != unmatched && !left_seen[w]) {
				left_seen[w] = true;
				stack.push_back(w);
			}
		}
	}
	return left_seen;
}

} // namespace khall
