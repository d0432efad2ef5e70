#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "khall/error.hpp"

namespace khall {

/// A vertex is addressed by its part and its position inside that part.
struct VertexId {
	std::size_t part = 0;
	std::size_t local = 0;

	auto operator<=>(const VertexId&) const = default;
};

/// Sorted, duplicate-free vertex list. Hyperedges, traces and submaximal
/// edges all use this representation; sorting by part first means a
/// k-partite edge is stored as one vertex per part in part order.
using VertexSet = std::vector<VertexId>;
using Hyperedge = VertexSet;

enum class CoverageMode { Strict, Lenient };

/// Label-level description of an instance before validation.
struct RawInstance {
	std::vector<std::vector<std::string>> parts;
	std::vector<std::vector<std::string>> edges;
};

namespace detail {

// Digit runs compare numerically so that "v2" < "v10".
inline bool natural_less(std::string_view a, std::string_view b) {
	auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
	std::size_t i = 0, j = 0;
	while (i < a.size() && j < b.size()) {
		if (is_digit(a[i]) && is_digit(b[j])) {
			std::size_t ie = i, je = j;
			while (ie < a.size() && is_digit(a[ie])) ++ie;
			while (je < b.size() && is_digit(b[je])) ++je;
			std::size_t is = i, js = j;
			while (is + 1 < ie && a[is] == '0') ++is;
			while (js + 1 < je && b[js] == '0') ++js;
			if (ie - is != je - js) return ie - is < je - js;
			auto cmp = a.substr(is, ie - is).compare(b.substr(js, je - js));
			if (cmp != 0) return cmp < 0;
			i = ie;
			j = je;
		} else {
			if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
			++i;
			++j;
		}
	}
	if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
	return a < b;
}

inline bool is_sorted_unique(const VertexSet& s) {
	return std::adjacent_find(s.begin(), s.end(), [](const VertexId& x, const VertexId& y) { return !(x < y); })
		== s.end();
}

inline VertexSet normalized(VertexSet s) {
	std::sort(s.begin(), s.end());
	s.erase(std::unique(s.begin(), s.end()), s.end());
	return s;
}

} // namespace detail

/**
 * A validated k-uniform k-partite hypergraph.
 *
 * Vertices inside each part are ordered by natural label order and edges are
 * sorted lexicographically by their per-part local indices. That ordering is
 * the canonical order every algorithm in the library uses for tie-breaking.
 * Instances are immutable once built.
 */
class KPartiteHypergraph {
public:
	std::size_t k() const noexcept { return parts_.size(); }
	std::size_t part_size(std::size_t part) const { return parts_.at(part).size(); }
	std::vector<std::size_t> part_sizes() const {
		std::vector<std::size_t> sizes;
		for (const auto& p : parts_) sizes.push_back(p.size());
		return sizes;
	}
	std::size_t vertex_count() const noexcept {
		std::size_t n = 0;
		for (const auto& p : parts_) n += p.size();
		return n;
	}
	const std::vector<std::vector<std::string>>& part_labels() const noexcept { return parts_; }
	const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
	CoverageMode mode() const noexcept { return mode_; }

	const std::string& label(VertexId v) const { return parts_.at(v.part).at(v.local); }

	std::optional<VertexId> find(const std::string& label) const {
		auto it = index_.find(label);
		if (it == index_.end()) return std::nullopt;
		return it->second;
	}

	bool contains_vertex(VertexId v) const noexcept { return v.part < parts_.size() && v.local < parts_[v.part].size(); }

	bool contains_edge(const Hyperedge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

	VertexSet part_vertices(std::size_t part) const {
		VertexSet out;
		for (std::size_t i = 0; i < part_size(part); ++i) out.push_back({part, i});
		return out;
	}

	VertexSet vertices() const {
		VertexSet out;
		for (std::size_t p = 0; p < k(); ++p)
			for (std::size_t i = 0; i < parts_[p].size(); ++i) out.push_back({p, i});
		return out;
	}

	/// Vertices lying in no edge; always empty for strict instances.
	VertexSet isolated_vertices() const {
		std::vector<std::vector<bool>> seen(k());
		for (std::size_t p = 0; p < k(); ++p) seen[p].assign(parts_[p].size(), false);
		for (const auto& e : edges_)
			for (auto v : e) seen[v.part][v.local] = true;
		VertexSet out;
		for (std::size_t p = 0; p < k(); ++p)
			for (std::size_t i = 0; i < seen[p].size(); ++i)
				if (!seen[p][i]) out.push_back({p, i});
		return out;
	}

	std::vector<std::string> labels(const VertexSet& s) const {
		std::vector<std::string> out;
		out.reserve(s.size());
		for (auto v : s) out.push_back(label(v));
		return out;
	}

	RawInstance to_raw() const {
		RawInstance raw{parts_, {}};
		for (const auto& e : edges_) raw.edges.push_back(labels(e));
		return raw;
	}

	friend bool operator==(const KPartiteHypergraph& a, const KPartiteHypergraph& b) {
		return a.parts_ == b.parts_ && a.edges_ == b.edges_;
	}

	friend KPartiteHypergraph build_validate(const RawInstance& raw, CoverageMode mode);

private:
	KPartiteHypergraph() = default;

	std::vector<std::vector<std::string>> parts_;
	std::vector<Hyperedge> edges_;
	std::map<std::string, VertexId> index_;
	CoverageMode mode_ = CoverageMode::Strict;
};

/**
 * Validates a label-level instance and returns it in canonical form.
 *
 * Edges are resolved by label, checked for k-uniformity and for having
 * exactly one vertex per part, then deduplicated and sorted. In strict mode
 * an isolated vertex is an error; lenient instances expose them through
 * isolated_vertices() instead.
 */
inline KPartiteHypergraph build_validate(const RawInstance& raw, CoverageMode mode = CoverageMode::Strict) {
	const std::size_t k = raw.parts.size();
	if (k < 2) throw Error(ErrorCode::InvalidShape, "k must be at least 2, got " + std::to_string(k));

	KPartiteHypergraph h;
	h.mode_ = mode;
	h.parts_ = raw.parts;
	for (std::size_t p = 0; p < k; ++p) {
		auto& part = h.parts_[p];
		if (part.empty()) throw Error(ErrorCode::InvalidShape, "part " + std::to_string(p + 1) + " is empty");
		std::sort(part.begin(), part.end(), [](const std::string& a, const std::string& b) {
			return detail::natural_less(a, b);
		});
		for (std::size_t i = 0; i < part.size(); ++i) {
			if (!h.index_.emplace(part[i], VertexId{p, i}).second)
				throw Error(ErrorCode::DuplicateVertexLabel, "label '" + part[i] + "' is declared more than once");
		}
	}

	for (const auto& labels : raw.edges) {
		auto describe = [&] {
			std::string s = "{";
			for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
			return s + "}";
		};
		if (labels.size() != k)
			throw Error(ErrorCode::NotUniform,
				"edge " + describe() + " has " + std::to_string(labels.size()) + " vertices, expected " + std::to_string(k));
		Hyperedge e;
		std::vector<std::size_t> per_part(k, 0);
		for (const auto& l : labels) {
			auto v = h.find(l);
			if (!v) throw Error(ErrorCode::UnknownVertex, "edge " + describe() + " uses undeclared vertex '" + l + "'");
			++per_part[v->part];
			e.push_back(*v);
		}
		for (std::size_t p = 0; p < k; ++p)
			if (per_part[p] != 1)
				throw Error(ErrorCode::NotPartite,
					"edge " + describe() + " has " + std::to_string(per_part[p]) + " vertices in part " + std::to_string(p + 1));
		std::sort(e.begin(), e.end());
		h.edges_.push_back(std::move(e));
	}
	std::sort(h.edges_.begin(), h.edges_.end());
	h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());

	if (mode == CoverageMode::Strict) {
		auto isolated = h.isolated_vertices();
		if (!isolated.empty())
			throw Error(ErrorCode::IsolatedVertex, "vertex '" + h.label(isolated.front()) + "' lies in no edge");
	}
	return h;
}

/// Cyclically shifts the part order so that part `shift` becomes the first
/// part; the part before it becomes the extension part V_k.
inline KPartiteHypergraph rotate_parts(const KPartiteHypergraph& h, std::size_t shift) {
	RawInstance raw = h.to_raw();
	shift %= h.k();
	std::rotate(raw.parts.begin(), raw.parts.begin() + static_cast<std::ptrdiff_t>(shift), raw.parts.end());
	return build_validate(raw, h.mode());
}

/// The family of traces e ∩ V' of all edges meeting V'.
struct GeneratedSubhypergraph {
	VertexSet base;
	std::vector<VertexSet> traces;
	/// Parts spanned by `base`, present only when `base` is a union of whole parts.
	std::optional<std::vector<std::size_t>> parts;
	std::vector<std::size_t> part_sizes;

	bool has_part_structure() const noexcept { return parts.has_value(); }
	bool contains_trace(const VertexSet& s) const { return std::binary_search(traces.begin(), traces.end(), s); }
};

inline GeneratedSubhypergraph generated_subhypergraph(const KPartiteHypergraph& h, VertexSet subset) {
	subset = detail::normalized(std::move(subset));
	if (subset.empty()) throw Error(ErrorCode::EmptySubset, "generated subhypergraph needs a nonempty vertex subset");
	for (auto v : subset)
		if (!h.contains_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex subset contains a vertex outside the instance");

	GeneratedSubhypergraph g;
	g.base = subset;
	std::set<VertexSet> traces;
	for (const auto& e : h.edges()) {
		VertexSet trace;
		std::set_intersection(e.begin(), e.end(), subset.begin(), subset.end(), std::back_inserter(trace));
		if (!trace.empty()) traces.insert(std::move(trace));
	}
	g.traces.assign(traces.begin(), traces.end());

	std::vector<std::size_t> count(h.k(), 0);
	for (auto v : subset) ++count[v.part];
	std::vector<std::size_t> spanned;
	bool whole_parts = true;
	for (std::size_t p = 0; p < h.k(); ++p) {
		if (count[p] == 0) continue;
		if (count[p] != h.part_size(p)) whole_parts = false;
		spanned.push_back(p);
	}
	if (whole_parts) {
		for (auto p : spanned) g.part_sizes.push_back(h.part_size(p));
		g.parts = std::move(spanned);
	}
	return g;
}

/// The generated subhypergraph on V_1 ∪ … ∪ V_{k-1}.
inline GeneratedSubhypergraph prefix_subhypergraph(const KPartiteHypergraph& h) {
	VertexSet prefix;
	for (std::size_t p = 0; p + 1 < h.k(); ++p) {
		auto part = h.part_vertices(p);
		prefix.insert(prefix.end(), part.begin(), part.end());
	}
	return generated_subhypergraph(h, std::move(prefix));
}

/// The trace of an edge on the prefix parts, i.e. the edge without its V_k vertex.
inline VertexSet prefix_trace(const Hyperedge& e) { return VertexSet(e.begin(), e.end() - 1); }

struct SubmaximalEdge {
	VertexSet vertices;
	std::vector<std::size_t> covered_parts;

	auto operator<=>(const SubmaximalEdge&) const = default;
};

inline std::vector<SubmaximalEdge> submaximal_edges(const KPartiteHypergraph& h) {
	std::set<VertexSet> found;
	for (const auto& e : h.edges()) {
		for (std::size_t skip = 0; skip < e.size(); ++skip) {
			VertexSet s;
			for (std::size_t i = 0; i < e.size(); ++i)
				if (i != skip) s.push_back(e[i]);
			found.insert(std::move(s));
		}
	}
	std::vector<SubmaximalEdge> out;
	for (const auto& s : found) {
		SubmaximalEdge se{s, {}};
		for (auto v : s) se.covered_parts.push_back(v.part);
		out.push_back(std::move(se));
	}
	return out;
}

/**
 * N(e) = { v : e ∪ {v} is an edge } for a (k-1)-set e with at most one
 * vertex per part. Empty when e is not a submaximal edge.
 */
inline VertexSet neighborhood(const KPartiteHypergraph& h, VertexSet sub) {
	sub = detail::normalized(std::move(sub));
	if (sub.size() + 1 != h.k())
		throw Error(ErrorCode::WrongArity,
			"expected " + std::to_string(h.k() - 1) + " vertices, got " + std::to_string(sub.size()));
	for (auto v : sub)
		if (!h.contains_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex outside the instance");
	std::size_t missing = h.k() - 1;
	for (std::size_t i = 0; i < sub.size(); ++i) {
		if (i > 0 && sub[i].part == sub[i - 1].part)
			throw Error(ErrorCode::SamePart, "'" + h.label(sub[i - 1]) + "' and '" + h.label(sub[i]) + "' share a part");
		if (sub[i].part != i && missing == h.k() - 1) missing = i;
	}

	VertexSet out;
	for (const auto& e : h.edges()) {
		bool match = true;
		for (std::size_t i = 0, j = 0; i < e.size(); ++i) {
			if (i == missing) continue;
			if (e[i] != sub[j++]) {
				match = false;
				break;
			}
		}
		if (match) out.push_back(e[missing]);
	}
	return detail::normalized(std::move(out));
}

inline VertexSet neighborhood_of_set(const KPartiteHypergraph& h, std::span<const VertexSet> family) {
	VertexSet out;
	for (const auto& sub : family) {
		auto n = neighborhood(h, sub);
		out.insert(out.end(), n.begin(), n.end());
	}
	return detail::normalized(std::move(out));
}

/// Pairwise disjointness of a family of vertex sets.
inline bool pairwise_disjoint(std::span<const VertexSet> family) {
	std::set<VertexId> seen;
	for (const auto& s : family)
		for (auto v : s)
			if (!seen.insert(v).second) return false;
	return true;
}

/// True when every element is an edge of h and the elements are pairwise disjoint.
inline bool is_matching(const KPartiteHypergraph& h, std::span<const Hyperedge> edges) {
	for (const auto& e : edges)
		if (!h.contains_edge(e)) return false;
	return pairwise_disjoint(edges);
}

inline bool is_vertex_cover(const KPartiteHypergraph& h, const VertexSet& cover) {
	for (const auto& e : h.edges()) {
		bool hit = std::any_of(e.begin(), e.end(), [&](VertexId v) {
			return std::binary_search(cover.begin(), cover.end(), v);
		});
		if (!hit) return false;
	}
	return true;
}

} // namespace khall
