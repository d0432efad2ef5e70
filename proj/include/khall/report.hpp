#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "khall/exact.hpp"
#include "khall/hypergraph.hpp"
#include "khall/matching.hpp"

namespace khall {

inline constexpr std::string_view report_format_version = "1";

using ReportJson = nlohmann::ordered_json;

/// Everything `analyze` reports about one instance.
struct AnalysisReport {
	std::optional<Theorem21Report> theorem21;
	std::string not_applicable_reason;
	std::optional<DualityReport> duality;
	std::string duality_error;
};

inline AnalysisReport analyze(const KPartiteHypergraph& h, const SolverLimits& limits = {}) {
	AnalysisReport r;
	try {
		r.theorem21 = theorem21_verdict(h);
	} catch (const Error& e) {
		if (e.code() != ErrorCode::NotApplicable) throw;
		r.not_applicable_reason = e.what();
	}
	try {
		r.duality = konig_report(h, limits);
	} catch (const Error& e) {
		if (e.code() != ErrorCode::TooLarge) throw;
		r.duality_error = e.what();
	}
	return r;
}

inline std::string_view mode_name(CoverageMode m) { return m == CoverageMode::Strict ? "strict" : "lenient"; }

namespace detail {

inline ReportJson labels_json(const KPartiteHypergraph& h, const VertexSet& s) { return h.labels(s); }

inline ReportJson family_json(const KPartiteHypergraph& h, const std::vector<VertexSet>& family) {
	ReportJson out = ReportJson::array();
	for (const auto& s : family) out.push_back(labels_json(h, s));
	return out;
}

inline std::string braces(const KPartiteHypergraph& h, const VertexSet& s) {
	std::string out = "{";
	for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + h.label(s[i]);
	return out + "}";
}

inline std::string braces(const KPartiteHypergraph& h, const std::vector<VertexSet>& family) {
	std::string out = "{";
	for (std::size_t i = 0; i < family.size(); ++i) out += (i ? ", " : "") + braces(h, family[i]);
	return out + "}";
}

} // namespace detail

inline ReportJson instance_summary_json(const KPartiteHypergraph& h) {
	ReportJson j;
	j["k"] = h.k();
	j["part_sizes"] = h.part_sizes();
	j["edge_count"] = h.edges().size();
	j["mode"] = mode_name(h.mode());
	j["isolated_vertices"] = detail::labels_json(h, h.isolated_vertices());
	return j;
}

inline ReportJson hall_json(const KPartiteHypergraph& h, const Matching& m, const HallReport& hall) {
	ReportJson j;
	j["t"] = hall.t;
	j["max_sdr"] = hall.max_sdr;
	j["deficiency"] = hall.deficiency;
	if (hall.violator) {
		Matching members;
		for (auto i : hall.violator->members) members.push_back(m[i]);
		ReportJson v;
		v["subset"] = detail::family_json(h, members);
		v["neighborhood"] = detail::labels_json(h, hall.violator->neighborhood);
		j["violator"] = v;
	} else {
		j["violator"] = nullptr;
	}
	return j;
}

inline ReportJson theorem21_json(const KPartiteHypergraph& h, const AnalysisReport& r) {
	ReportJson j;
	if (!r.theorem21) {
		j["applicable"] = false;
		j["reason"] = r.not_applicable_reason;
		return j;
	}
	const auto& v = *r.theorem21;
	j["applicable"] = true;
	j["t"] = v.t;
	j["prefix_pm_count"] = v.unique ? "1" : ">=2";
	j["unique"] = v.unique;
	ReportJson list = ReportJson::array();
	for (const auto& a : v.analyses) {
		ReportJson item;
		item["matching"] = detail::family_json(h, a.prefix_matching);
		item["neighborhoods"] = ReportJson::array();
		for (const auto& e : a.prefix_matching) item["neighborhoods"].push_back(detail::labels_json(h, neighborhood(h, e)));
		item["hall"] = hall_json(h, a.prefix_matching, a.hall);
		item["extension"] = detail::family_json(h, a.extension);
		list.push_back(item);
	}
	j["prefix_matchings"] = list;
	j["conclusion"] = to_string(v.conclusion);
	j["witness_index"] = v.witness_index;
	j["witness"] = detail::family_json(h, v.witness());
	j["perfect_matching"] = v.perfect_matching;
	return j;
}

inline ReportJson duality_json(const KPartiteHypergraph& h, const AnalysisReport& r) {
	ReportJson j;
	if (!r.duality) {
		j["error"] = r.duality_error;
		return j;
	}
	const auto& d = *r.duality;
	j["alpha_prime"] = d.alpha_prime;
	j["beta"] = d.beta;
	j["t"] = d.t;
	j["max_matching_witness"] = detail::family_json(h, d.max_matching_witness);
	j["min_cover_witness"] = detail::labels_json(h, d.min_cover_witness);
	j["has_t_matching"] = d.has_t_matching;
	j["konig_equality"] = d.konig_equality;
	return j;
}

inline ReportJson analysis_json(const KPartiteHypergraph& h, const AnalysisReport& r) {
	ReportJson j;
	j["report_version"] = report_format_version;
	j["instance"] = instance_summary_json(h);
	j["theorem21"] = theorem21_json(h, r);
	j["duality"] = duality_json(h, r);
	return j;
}

inline std::string analysis_text(const KPartiteHypergraph& h, const AnalysisReport& r) {
	std::ostringstream out;
	out << "instance: k=" << h.k() << ", parts";
	for (auto s : h.part_sizes()) out << ' ' << s;
	out << ", " << h.edges().size() << " edges, " << mode_name(h.mode()) << '\n';
	auto isolated = h.isolated_vertices();
	if (!isolated.empty()) out << "warning: isolated vertices " << detail::braces(h, isolated) << '\n';

	if (!r.theorem21) {
		out << "prefix criterion: not applicable (" << r.not_applicable_reason << ")\n";
	} else {
		const auto& v = *r.theorem21;
		out << "prefix perfect matchings: " << (v.unique ? "1 (unique)" : ">=2 (not unique)") << ", t=" << v.t << '\n';
		for (std::size_t i = 0; i < v.analyses.size(); ++i) {
			const auto& a = v.analyses[i];
			out << "  M" << i + 1 << " = " << detail::braces(h, a.prefix_matching) << '\n';
			out << "    max SDR " << a.hall.max_sdr << ", deficiency " << a.hall.deficiency;
			if (a.hall.violator) {
				Matching members;
				for (auto m : a.hall.violator->members) members.push_back(a.prefix_matching[m]);
				out << ", violator A=" << detail::braces(h, members) << " N(A)=" << detail::braces(h, a.hall.violator->neighborhood);
			}
			out << '\n';
			out << "    extension (" << a.extension.size() << "): " << detail::braces(h, a.extension) << '\n';
		}
		out << "conclusion: " << to_string(v.conclusion);
		if (v.perfect_matching) out << " (perfect matching)";
		out << '\n';
		out << "witness: " << detail::braces(h, v.witness()) << '\n';
	}

	if (!r.duality) {
		out << "exact solvers: skipped (" << r.duality_error << ")\n";
	} else {
		const auto& d = *r.duality;
		out << "alpha'=" << d.alpha_prime << " beta=" << d.beta << " t=" << d.t << '\n';
		out << "  maximum matching " << detail::braces(h, d.max_matching_witness) << '\n';
		out << "  minimum cover " << detail::braces(h, d.min_cover_witness) << '\n';
		out << "  has_t_matching=" << (d.has_t_matching ? "true" : "false")
			<< " konig_equality=" << (d.konig_equality ? "true" : "false") << '\n';
	}
	return out.str();
}

} // namespace khall
