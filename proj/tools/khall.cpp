// khall: validate, analyze, extend, generate and verify k-partite hypergraph instances.
//
// Exit codes: 0 success, 2 input or configuration error, 3 not applicable,
// 4 I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "khall/khall.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_not_applicable = 3;
constexpr int exit_io = 4;

struct InputOptions {
	std::string path;
	bool lenient = false;
	bool strict = false;
	bool json = false;
	std::size_t rotate = 0;
};

// Thrown for unreadable files so they map to exit code 2 like other input errors.
struct InputError {
	std::string message;
};

std::string read_file(const std::string& path) {
	std::ifstream file(path, std::ios::binary);
	if (!file) throw InputError{"cannot read '" + path + "'"};
	std::stringstream buffer;
	buffer << file.rdbuf();
	return buffer.str();
}

khall::InstanceDocument load(const InputOptions& in) {
	const auto mode = in.lenient ? khall::CoverageMode::Lenient : khall::CoverageMode::Strict;
	constexpr std::string_view prefix = "fixture:";
	auto doc = in.path.rfind(prefix, 0) == 0 ? khall::InstanceDocument{khall::fixture(in.path.substr(prefix.size()))}
											 : khall::parse_document(read_file(in.path), mode);
	if (in.rotate % doc.graph.k() != 0) doc.graph = khall::rotate_parts(doc.graph, in.rotate);
	return doc;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
	cmd->add_option("input", in.path, "Instance file, or fixture:<name>")->required();
	auto* strict = cmd->add_flag("--strict", in.strict, "Reject isolated vertices (default)");
	cmd->add_flag("--lenient", in.lenient, "Accept isolated vertices with a warning")->excludes(strict);
	cmd->add_flag("--json", in.json, "Machine-readable output");
	cmd->add_option("--rotate-parts", in.rotate, "Rotate the part order left by N before analysis");
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
	std::vector<std::size_t> out;
	std::stringstream ss(text);
	std::string item;
	auto number = [&](const std::string& s) -> std::size_t {
		if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
			throw khall::Error(khall::ErrorCode::InvalidParams, "'" + text + "' is not a list of integers");
		return std::stoul(s);
	};
	while (std::getline(ss, item, ',')) {
		auto dots = item.find("..");
		if (dots == std::string::npos) {
			out.push_back(number(item));
		} else {
			auto lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
			if (lo > hi) throw khall::Error(khall::ErrorCode::InvalidParams, "empty range '" + item + "'");
			for (auto v = lo; v <= hi; ++v) out.push_back(v);
		}
	}
	if (out.empty()) throw khall::Error(khall::ErrorCode::InvalidParams, "empty list");
	return out;
}

std::vector<std::string> split(const std::string& text) {
	std::vector<std::string> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
		if (!item.empty()) out.push_back(item);
	return out;
}

int run_validate(const InputOptions& in) {
	khall::ReportJson j;
	try {
		auto doc = load(in);
		j["valid"] = true;
		j["instance"] = khall::instance_summary_json(doc.graph);
		if (in.json) {
			std::cout << j.dump(2) << '\n';
		} else {
			const auto& h = doc.graph;
			std::cout << "valid: k=" << h.k() << ", " << h.edges().size() << " edges, " << khall::mode_name(h.mode()) << '\n';
			for (auto v : h.isolated_vertices()) std::cout << "warning: isolated vertex " << h.label(v) << '\n';
		}
		return exit_ok;
	} catch (const khall::Error& e) {
		j["valid"] = false;
		j["error_code"] = khall::to_string(e.code());
		j["message"] = e.what();
	} catch (const InputError& e) {
		j["valid"] = false;
		j["error_code"] = "FileNotFound";
		j["message"] = e.message;
	}
	if (in.json)
		std::cout << j.dump(2) << '\n';
	else
		std::cerr << "invalid: " << j["message"].get<std::string>() << '\n';
	return exit_input;
}

int run_analyze(const InputOptions& in, bool force) {
	auto doc = load(in);
	khall::SolverLimits limits;
	limits.force = force;
	auto report = khall::analyze(doc.graph, limits);
	if (in.json)
		std::cout << khall::analysis_json(doc.graph, report).dump(2) << '\n';
	else
		std::cout << khall::analysis_text(doc.graph, report);
	return exit_ok;
}

int run_extend(const InputOptions& in) {
	auto doc = load(in);
	const auto& h = doc.graph;
	khall::Theorem21Report v;
	try {
		v = khall::theorem21_verdict(h);
	} catch (const khall::Error& e) {
		if (e.code() != khall::ErrorCode::NotApplicable) throw;
		std::cerr << e.what() << '\n';
		return exit_not_applicable;
	}
	const auto& chosen = v.chosen();
	if (in.json) {
		khall::ReportJson j;
		j["report_version"] = khall::report_format_version;
		j["prefix_matching"] = khall::detail::family_json(h, chosen.prefix_matching);
		j["deficiency"] = chosen.hall.deficiency;
		j["size"] = chosen.extension.size();
		j["matching"] = khall::detail::family_json(h, chosen.extension);
		std::cout << j.dump(2) << '\n';
	} else {
		std::cout << "# prefix matching " << khall::detail::braces(h, chosen.prefix_matching) << ", deficiency "
				  << chosen.hall.deficiency << ", size " << chosen.extension.size() << '\n';
		for (const auto& e : chosen.extension) {
			auto labels = h.labels(e);
			for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? " " : "") << labels[i];
			std::cout << '\n';
		}
	}
	return exit_ok;
}

struct GenerateOptions {
	std::string mode;
	std::optional<std::size_t> k, t, last;
	std::string sizes;
	double p = 0.3;
	double density = 0.4;
	std::size_t attach_min = 1, attach_max = 2;
	std::uint64_t seed = 0;
	std::string out;
};

int run_generate(const GenerateOptions& o) {
	khall::GeneratorParams params;
	params.edge_probability = o.p;
	params.trace_density = o.density;
	params.attachments_min = o.attach_min;
	params.attachments_max = o.attach_max;
	if (!o.sizes.empty()) {
		params.part_sizes = parse_size_list(o.sizes);
		params.k = params.part_sizes.size();
		if (o.k && *o.k != params.k)
			throw khall::Error(khall::ErrorCode::InvalidParams, "--k disagrees with the length of --sizes");
	} else {
		params.k = o.k.value_or(3);
		if (params.k < 2 || params.k > 26) throw khall::Error(khall::ErrorCode::InvalidParams, "k must be in [2, 26]");
		params.part_sizes.assign(params.k, o.t.value_or(3));
		if (o.last) params.part_sizes.back() = *o.last;
	}

	auto generated = o.mode == "random" ? khall::gen_random(params, o.seed) : khall::gen_planted_unique(params, o.seed);
	if (generated.degenerate) std::cerr << "warning: degenerate output (no edges)\n";
	auto text = khall::serialize_instance(generated.graph, generated.metadata);
	if (o.out.empty()) {
		std::cout << text;
		return exit_ok;
	}
	std::ofstream file(o.out, std::ios::binary);
	if (!file) {
		std::cerr << "cannot write '" << o.out << "'\n";
		return exit_io;
	}
	file << text;
	file.close();
	if (!file) {
		std::cerr << "write to '" << o.out << "' failed\n";
		return exit_io;
	}
	return exit_ok;
}

struct VerifyOptions {
	long long trials = 100;
	std::uint64_t seed = 0;
	std::string k = "2,3,4";
	std::string t = "1..4";
	std::string modes = "unique-planted,random";
	std::string properties = "thm21,thm26,thm27,defect-equivalence,k2-reduction";
	bool json = false;
	bool timing = false;
};

int run_verify(const VerifyOptions& o) {
	if (o.trials < 1) throw khall::Error(khall::ErrorCode::InvalidParams, "--trials must be at least 1");
	khall::CampaignConfig config;
	config.trials = static_cast<std::size_t>(o.trials);
	config.seed = o.seed;
	config.k_values = parse_size_list(o.k);
	config.t_values = parse_size_list(o.t);
	config.modes.clear();
	for (const auto& m : split(o.modes)) config.modes.push_back(khall::parse_mode(m));
	config.properties.clear();
	for (const auto& p : split(o.properties)) config.properties.push_back(khall::parse_property(p));

	auto report = khall::run_campaign(config);
	if (o.json)
		std::cout << khall::campaign_json(report, o.timing).dump(2) << '\n';
	else
		std::cout << khall::campaign_text(report);
	return report.ok() ? exit_ok : 1;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Prefix-matching Hall criteria for k-uniform k-partite hypergraphs"};
	app.require_subcommand(1);

	InputOptions validate_in, analyze_in, extend_in;
	bool force = false;
	auto* validate = app.add_subcommand("validate", "Check an instance file");
	add_input_options(validate, validate_in);

	auto* analyze = app.add_subcommand("analyze", "Prefix matchings, Hall deficiency, extension, alpha' and beta");
	add_input_options(analyze, analyze_in);
	analyze->add_flag("--force", force, "Lift the size guard of the exact solvers");

	auto* extend = app.add_subcommand("extend", "Print the matching obtained by extending the canonical prefix matching");
	add_input_options(extend, extend_in);

	GenerateOptions gen;
	auto* generate = app.add_subcommand("generate", "Write a generated instance");
	generate->add_option("mode", gen.mode, "random or planted")->required()->check(CLI::IsMember({"random", "planted"}));
	generate->add_option("--k", gen.k, "Number of parts");
	generate->add_option("--t", gen.t, "Size of every part (prefix parts in planted mode)");
	generate->add_option("--last-size", gen.last, "Size of the last part");
	generate->add_option("--sizes", gen.sizes, "Comma-separated part sizes");
	generate->add_option("--p", gen.p, "Edge probability (random mode)");
	generate->add_option("--density", gen.density, "Off-diagonal trace density (planted mode)");
	generate->add_option("--attach-min", gen.attach_min, "Minimum completions per trace (planted mode)");
	generate->add_option("--attach-max", gen.attach_max, "Maximum completions per trace (planted mode)");
	generate->add_option("--seed", gen.seed, "64-bit seed");
	generate->add_option("--out", gen.out, "Output path (stdout when omitted)");

	VerifyOptions ver;
	auto* verify = app.add_subcommand("verify", "Run the property campaign over generated instances");
	verify->add_option("--trials", ver.trials, "Number of trials");
	verify->add_option("--seed", ver.seed, "64-bit seed");
	verify->add_option("--k", ver.k, "k values, e.g. 2,3,4 or 2..4");
	verify->add_option("--t", ver.t, "t values, e.g. 1..4");
	verify->add_option("--modes", ver.modes, "unique-planted,random");
	verify->add_option("--properties", ver.properties, "thm21,thm26,thm27,defect-equivalence,k2-reduction");
	verify->add_flag("--json", ver.json, "Machine-readable output");
	verify->add_flag("--timing", ver.timing, "Include wall-clock time in JSON output");

	try {
		app.parse(argc, argv);
	} catch (const CLI::Success& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return exit_input;
	}

	try {
		if (*validate) return run_validate(validate_in);
		if (*analyze) return run_analyze(analyze_in, force);
		if (*extend) return run_extend(extend_in);
		if (*generate) return run_generate(gen);
		if (*verify) return run_verify(ver);
	} catch (const khall::Error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_input;
	} catch (const InputError& e) {
		std::cerr << "error: " << e.message << '\n';
		return exit_input;
	}
	return exit_input;
}
