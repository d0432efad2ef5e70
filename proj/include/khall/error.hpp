#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace khall {

enum class ErrorCode {
	InvalidShape,
	NotUniform,
	NotPartite,
	DuplicateVertexLabel,
	UnknownVertex,
	IsolatedVertex,
	EmptySubset,
	WrongArity,
	SamePart,
	NotPerfectPrefixMatching,
	NotApplicable,
	TooLarge,
	SyntaxError,
	SchemaError,
	UnknownFixture,
	InvalidParams,
	RetryExhausted,
};

constexpr std::string_view to_string(ErrorCode code) {
	switch (code) {
	case ErrorCode::InvalidShape: return "InvalidShape";
	case ErrorCode::NotUniform: return "NotUniform";
	case ErrorCode::NotPartite: return "NotPartite";
	case ErrorCode::DuplicateVertexLabel: return "DuplicateVertexLabel";
	case ErrorCode::UnknownVertex: return "UnknownVertex";
	case ErrorCode::IsolatedVertex: return "IsolatedVertex";
	case ErrorCode::EmptySubset: return "EmptySubset";
	case ErrorCode::WrongArity: return "WrongArity";
	case ErrorCode::SamePart: return "SamePart";
	case ErrorCode::NotPerfectPrefixMatching: return "NotPerfectPrefixMatching";
	case ErrorCode::NotApplicable: return "NotApplicable";
	case ErrorCode::TooLarge: return "TooLarge";
	case ErrorCode::SyntaxError: return "SyntaxError";
	case ErrorCode::SchemaError: return "SchemaError";
	case ErrorCode::UnknownFixture: return "UnknownFixture";
	case ErrorCode::InvalidParams: return "InvalidParams";
	case ErrorCode::RetryExhausted: return "RetryExhausted";
	}
	return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string& message)
		: std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

	ErrorCode code() const noexcept { return code_; }

private:
	ErrorCode code_;
};

} // namespace khall
