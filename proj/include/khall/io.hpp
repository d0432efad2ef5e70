#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "khall/error.hpp"
#include "khall/hypergraph.hpp"

namespace khall {

inline constexpr std::string_view instance_format_version = "1";

/// A parsed instance file: the validated hypergraph plus free-form metadata.
struct InstanceDocument {
	KPartiteHypergraph graph;
	nlohmann::json metadata = nlohmann::json::object();
};

namespace detail {

inline std::vector<std::string> string_array(const nlohmann::json& j, const std::string& what) {
	if (!j.is_array()) throw Error(ErrorCode::SchemaError, what + " must be an array");
	std::vector<std::string> out;
	for (const auto& x : j) {
		if (!x.is_string()) throw Error(ErrorCode::SchemaError, what + " must contain only string labels");
		out.push_back(x.get<std::string>());
	}
	return out;
}

} // namespace detail

inline InstanceDocument parse_document(std::string_view text, CoverageMode mode = CoverageMode::Strict) {
	nlohmann::json doc;
	try {
		doc = nlohmann::json::parse(text);
	} catch (const nlohmann::json::parse_error& e) {
		throw Error(ErrorCode::SyntaxError, e.what());
	}
	if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "top level must be an object");

	static const std::set<std::string> known{"format_version", "k", "parts", "edges", "metadata"};
	for (const auto& [key, value] : doc.items())
		if (!known.count(key)) throw Error(ErrorCode::SchemaError, "unknown field '" + key + "'");
	for (const char* key : {"format_version", "k", "parts", "edges"})
		if (!doc.contains(key)) throw Error(ErrorCode::SchemaError, std::string("missing field '") + key + "'");

	const auto& version = doc["format_version"];
	if (!version.is_string() || version.get<std::string>() != instance_format_version)
		throw Error(ErrorCode::SchemaError, "format_version must be \"" + std::string(instance_format_version) + "\"");

	const auto& kj = doc["k"];
	if (!kj.is_number_integer() || kj.get<long long>() < 2) throw Error(ErrorCode::SchemaError, "k must be an integer >= 2");
	const auto k = static_cast<std::size_t>(kj.get<long long>());

	RawInstance raw;
	const auto& parts = doc["parts"];
	if (!parts.is_array() || parts.size() != k)
		throw Error(ErrorCode::SchemaError, "parts must be an array of " + std::to_string(k) + " label arrays");
	std::set<std::string> declared;
	for (std::size_t p = 0; p < k; ++p) {
		raw.parts.push_back(detail::string_array(parts[p], "parts[" + std::to_string(p) + "]"));
		declared.insert(raw.parts.back().begin(), raw.parts.back().end());
	}

	const auto& edges = doc["edges"];
	if (!edges.is_array()) throw Error(ErrorCode::SchemaError, "edges must be an array");
	for (std::size_t i = 0; i < edges.size(); ++i) {
		auto what = "edges[" + std::to_string(i) + "]";
		auto labels = detail::string_array(edges[i], what);
		if (labels.size() != k)
			throw Error(ErrorCode::SchemaError, what + " has " + std::to_string(labels.size()) + " labels, expected " + std::to_string(k));
		for (const auto& l : labels)
			if (!declared.count(l)) throw Error(ErrorCode::SchemaError, what + " uses undeclared label '" + l + "'");
		raw.edges.push_back(std::move(labels));
	}

	InstanceDocument out{build_validate(raw, mode)};
	if (doc.contains("metadata")) {
		if (!doc["metadata"].is_object()) throw Error(ErrorCode::SchemaError, "metadata must be an object");
		out.metadata = doc["metadata"];
	}
	return out;
}

inline KPartiteHypergraph parse_instance(std::string_view text, CoverageMode mode = CoverageMode::Strict) {
	return parse_document(text, mode).graph;
}

/**
 * Canonical instance text. Fields appear in a fixed order, parts and edges
 * in canonical order, one part or edge per line. Metadata is written with
 * sorted keys and only when non-empty.
 */
inline std::string serialize_instance(const KPartiteHypergraph& h,
	const nlohmann::json& metadata = nlohmann::json::object()) {
	auto list = [](const std::vector<std::string>& labels) {
		std::string s = "[";
		for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + nlohmann::json(labels[i]).dump();
		return s + "]";
	};
	auto block = [&](const std::vector<std::vector<std::string>>& rows) {
		if (rows.empty()) return std::string("[]");
		std::string s = "[\n";
		for (std::size_t i = 0; i < rows.size(); ++i) s += "    " + list(rows[i]) + (i + 1 < rows.size() ? ",\n" : "\n");
		return s + "  ]";
	};
	auto raw = h.to_raw();
	std::string out = "{\n";
	out += "  \"format_version\": \"" + std::string(instance_format_version) + "\",\n";
	out += "  \"k\": " + std::to_string(h.k()) + ",\n";
	out += "  \"parts\": " + block(raw.parts) + ",\n";
	out += "  \"edges\": " + block(raw.edges);
	if (metadata.is_object() && !metadata.empty()) out += ",\n  \"metadata\": " + metadata.dump();
	out += "\n}\n";
	return out;
}

inline const std::vector<std::string>& fixture_names() {
	static const std::vector<std::string> names{"ex_2_5", "ex_2_8", "k2_hall_fail", "k3_single_edge"};
	return names;
}

/// Built-in instances: the two worked counterexamples and two small sanity cases.
inline KPartiteHypergraph fixture(std::string_view name) {
	if (name == "ex_2_5")
		return build_validate({{{"x1", "x2"}, {"y1", "y2"}, {"z1", "z2"}},
			{{"x1", "y1", "z1"}, {"x1", "y2", "z2"}, {"x2", "y2", "z2"}, {"x2", "y1", "z2"}}});
	if (name == "ex_2_8")
		return build_validate({{{"1", "2"}, {"3", "4"}, {"5", "6"}}, {{"1", "3", "5"}, {"2", "3", "6"}, {"2", "4", "5"}}});
	if (name == "k2_hall_fail") return build_validate({{{"a", "b"}, {"c", "d"}}, {{"a", "c"}, {"b", "c"}}}, CoverageMode::Lenient);
	if (name == "k3_single_edge") return build_validate({{{"a"}, {"b"}, {"c"}}, {{"a", "b", "c"}}});
	throw Error(ErrorCode::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

} // namespace khall
