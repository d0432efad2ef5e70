#pragma once

#include <cstdint>

namespace khall {

/**
 * Counter-based pseudorandom stream: value i is a pure function of
 * (seed, stream, i), so the order in which values are drawn never changes
 * them. Mixing uses the SplitMix64 finalizer.
 */
class CounterStream {
public:
	CounterStream(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

	static constexpr std::uint64_t mix(std::uint64_t z) {
		z += 0x9e3779b97f4a7c15ULL;
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	std::uint64_t at(std::uint64_t counter) const { return mix(key_ + counter * 0xd1342543de82ef95ULL); }

	/// Uniform in [0, 1) with 53 bits of resolution.
	double uniform(std::uint64_t counter) const { return static_cast<double>(at(counter) >> 11) * 0x1.0p-53; }

	/// Uniform in [0, n); n must be positive. Modulo bias is negligible at the
	/// sizes used here.
	std::uint64_t below(std::uint64_t counter, std::uint64_t n) const { return at(counter) % n; }

private:
	std::uint64_t key_;
};

/// Derives an independent seed for sub-task `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
	return CounterStream(seed, 0xa5a5a5a5ULL).at(index);
}

} // namespace khall
