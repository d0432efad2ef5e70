#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "khall/khall.hpp"

namespace khall::testing {

inline VertexSet vs(const KPartiteHypergraph& h, std::initializer_list<std::string> labels) {
	VertexSet out;
	for (const auto& l : labels) {
		auto v = h.find(l);
		if (!v) ADD_FAILURE() << "unknown label " << l;
		else out.push_back(*v);
	}
	std::sort(out.begin(), out.end());
	return out;
}

inline Matching family(const KPartiteHypergraph& h, std::initializer_list<std::initializer_list<std::string>> sets) {
	Matching out;
	for (auto s : sets) out.push_back(vs(h, s));
	return out;
}

template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
	try {
		fn();
	} catch (const Error& e) {
		return e.code();
	}
	ADD_FAILURE() << "expected an error";
	return ErrorCode::InvalidShape;
}

} // namespace khall::testing
