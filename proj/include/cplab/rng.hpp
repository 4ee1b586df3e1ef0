#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace cplab {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
	z += 0x9e3779b97f4a7c15ULL;
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

/// Reproducible random stream keyed by (seed, stream_index); xoshiro256** underneath.
///
/// Equal keys give identical draws on every platform: bounded integers and unit doubles are produced here
/// rather than through <random> distributions, whose algorithms are implementation-defined.
class RngStream {
public:
	using result_type = std::uint64_t;

	RngStream(std::uint64_t seed, std::uint64_t stream_index) : seed_(seed), stream_(stream_index) {
		std::uint64_t sm = mix64(seed ^ mix64(stream_index ^ 0x6a09e667f3bcc909ULL));
		for (auto& s : state_) {
			sm += 0x9e3779b97f4a7c15ULL;
			s = mix64(sm);
		}
	}

	/// Stream index for trial `trial` at size `n`: n in the high 32 bits, trial in the low 32.
	static constexpr std::uint64_t trial_stream(std::uint64_t n, std::uint64_t trial) { return (n << 32) | (trial & 0xffffffffULL); }

	static constexpr result_type min() { return 0; }
	static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

	result_type operator()() {
		const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
		const std::uint64_t t = state_[1] << 17;
		state_[2] ^= state_[0];
		state_[3] ^= state_[1];
		state_[1] ^= state_[2];
		state_[0] ^= state_[3];
		state_[2] ^= t;
		state_[3] = rotl(state_[3], 45);
		return result;
	}

	/// Uniform integer in [0, bound); bound > 0. Lemire's multiply-and-reject.
	std::uint64_t below(std::uint64_t bound) {
		unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
		auto low = static_cast<std::uint64_t>(m);
		if (low < bound) {
			const std::uint64_t threshold = (0 - bound) % bound;
			while (low < threshold) {
				m = static_cast<unsigned __int128>((*this)()) * bound;
				low = static_cast<std::uint64_t>(m);
			}
		}
		return static_cast<std::uint64_t>(m >> 64);
	}

	/// Uniform double in [0, 1) with 53 random bits.
	double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

	bool coin() { return ((*this)() >> 63) != 0; }

	std::uint64_t seed() const { return seed_; }
	std::uint64_t stream_index() const { return stream_; }

private:
	static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

	std::uint64_t seed_;
	std::uint64_t stream_;
	std::array<std::uint64_t, 4> state_{};
};

} // namespace cplab
