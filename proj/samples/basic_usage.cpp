// Analyze a small instance with the library and print the results.

#include <iostream>

#include "khall/khall.hpp"

int main() {
	// Parts {x1,x2}, {y1,y2}, {z1,z2}; the prefix on the first two parts has
	// two perfect matchings, only one of which extends.
	auto h = khall::fixture("ex_2_5");

	auto verdict = khall::theorem21_verdict(h);
	for (const auto& a : verdict.analyses)
		std::cout << "prefix matching with deficiency " << a.hall.deficiency << " extends to a matching of size "
				  << a.extension.size() << '\n';
	std::cout << "conclusion: " << khall::to_string(verdict.conclusion) << '\n';

	auto duality = khall::konig_report(h);
	std::cout << "alpha'=" << duality.alpha_prime << " beta=" << duality.beta << " t=" << duality.t << '\n';

	// A planted instance: the prefix perfect matching is unique, so the Hall
	// condition decides the existence of a matching of size t.
	khall::GeneratorParams params;
	params.k = 3;
	params.part_sizes = {4, 4, 4};
	auto planted = khall::gen_planted_unique(params, 7);
	std::cout << khall::analysis_text(planted.graph, khall::analyze(planted.graph));
}
