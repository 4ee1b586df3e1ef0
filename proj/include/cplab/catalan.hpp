#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cplab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders an exact rational as "numerator/denominator" (integers render as "p/1").
inline std::string to_fraction_string(const Rational& r) {
	return numerator(r).str() + "/" + denominator(r).str();
}

/// Natural log of a positive big integer, accurate to double precision.
inline double log_bigint(const BigInt& v) {
	if (v <= 0) throw std::domain_error("log_bigint: non-positive argument");
	const auto bits = static_cast<std::int64_t>(msb(v)) + 1;
	if (bits <= 1000) return std::log(v.convert_to<double>());
	const std::int64_t shift = bits - 64;
	const BigInt top = v >> static_cast<unsigned>(shift);
	return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

inline BigInt binomial(std::uint32_t n, std::uint32_t k) {
	if (k > n) return 0;
	if (k > n - k) k = n - k;
	BigInt r = 1;
	for (std::uint32_t i = 1; i <= k; ++i) {
		r *= n - k + i;
		r /= i;
	}
	return r;
}

/// n-th Catalan number via binomial(2n, n) / (n + 1).
inline BigInt catalan_by_binomial(std::uint32_t n) { return binomial(2 * n, n) / (n + 1); }

/// n-th Catalan number via the convolution recurrence C_{j+1} = sum_i C_i C_{j-i}. Quadratic; for cross-checks.
inline BigInt catalan_by_recurrence(std::uint32_t n) {
	std::vector<BigInt> c(n + 1);
	c[0] = 1;
	for (std::uint32_t j = 0; j < n; ++j) {
		BigInt s = 0;
		for (std::uint32_t i = 0; i <= j; ++i) s += c[i] * c[j - i];
		c[j + 1] = s;
	}
	return c[n];
}

inline BigInt catalan(std::uint32_t n) {
	BigInt value = catalan_by_binomial(n);
#ifdef CPLAB_CHECK_CATALAN
	if (n <= 64 && value != catalan_by_recurrence(n)) throw std::logic_error("catalan: recurrence mismatch");
#endif
	return value;
}

/// log of 4^n / (sqrt(pi) n^{3/2}).
inline double catalan_asymptotic_log(std::uint32_t n) {
	if (n == 0) throw std::domain_error("catalan_asymptotic: n must be positive");
	const double dn = static_cast<double>(n);
	return dn * std::log(4.0) - 0.5 * std::log(std::numbers::pi) - 1.5 * std::log(dn);
}

/// 4^n / (sqrt(pi) n^{3/2}). Overflows to +inf past n ~ 510; use the log form there.
inline double catalan_asymptotic(std::uint32_t n) { return std::exp(catalan_asymptotic_log(n)); }

/// C_n divided by its Stirling estimate, evaluated in log space.
inline double catalan_asymptotic_ratio(std::uint32_t n) {
	return std::exp(log_bigint(catalan(n)) - catalan_asymptotic_log(n));
}

// ---------------------------------------------------------------------------
// Valid pairs: s specified arcs (x_i, x_i + 2k_i - 1) inside one matching of size n.

struct ValidPair {
	std::uint32_t n = 0;
	std::vector<std::uint32_t> x; ///< left endpoints, 1-based, strictly increasing
	std::vector<std::uint32_t> k; ///< half-lengths; arc i is (x_i, x_i + 2k_i - 1)

	std::size_t size() const { return x.size(); }
	std::uint32_t right(std::size_t i) const { return x[i] + 2 * k[i] - 1; }
};

enum class PairRejection {
	malformed,          ///< |x| != |k|, x not strictly increasing, or a zero half-length
	range,              ///< some arc leaves [1, 2n]
	duplicate_endpoint, ///< two arcs share an endpoint
	crossing,           ///< two arcs interlace
};

inline const char* to_string(PairRejection r) {
	switch (r) {
	case PairRejection::malformed: return "malformed";
	case PairRejection::range: return "range";
	case PairRejection::duplicate_endpoint: return "duplicate_endpoint";
	case PairRejection::crossing: return "crossing";
	}
	return "unknown";
}

inline std::variant<ValidPair, PairRejection> validate_pair(std::uint32_t n, std::vector<std::uint32_t> x,
															 std::vector<std::uint32_t> k) {
	if (x.size() != k.size()) return PairRejection::malformed;
	for (std::size_t i = 0; i < x.size(); ++i) {
		if (k[i] == 0) return PairRejection::malformed;
		if (i > 0 && x[i - 1] >= x[i]) return PairRejection::malformed;
	}
	const std::uint64_t points = 2ULL * n;
	for (std::size_t i = 0; i < x.size(); ++i) {
		if (x[i] < 1 || std::uint64_t{x[i]} + 2ULL * k[i] - 1 > points) return PairRejection::range;
	}
	std::vector<bool> used(points + 1, false);
	for (std::size_t i = 0; i < x.size(); ++i) {
		for (std::uint32_t p : {x[i], x[i] + 2 * k[i] - 1}) {
			if (used[p]) return PairRejection::duplicate_endpoint;
			used[p] = true;
		}
	}
	for (std::size_t i = 0; i < x.size(); ++i) {
		const std::uint32_t bi = x[i] + 2 * k[i] - 1;
		for (std::size_t j = 0; j < x.size(); ++j) {
			const std::uint32_t bj = x[j] + 2 * k[j] - 1;
			if (i != j && x[i] < x[j] && x[j] < bi && bi < bj) return PairRejection::crossing;
		}
	}
	return ValidPair{n, std::move(x), std::move(k)};
}

/// Half-sizes (m_0, ..., m_s) of the free regions left by the specified arcs. A free point belongs to
/// region i when arc i is the innermost specified arc enclosing it, and to region 0 when no arc does.
inline std::vector<std::uint32_t> gap_profile(const ValidPair& p) {
	const std::uint32_t points = 2 * p.n;
	// owner[pos] = 1 + index of innermost enclosing arc, 0 outside all arcs, -1 for endpoints.
	std::vector<int> owner(points + 1, 0);
	// Arcs sorted by left endpoint; a later arc that starts inside an earlier one is nested in it, so
	// painting in left-endpoint order leaves every point tagged with its innermost arc.
	for (std::size_t i = 0; i < p.size(); ++i) {
		for (std::uint32_t pos = p.x[i] + 1; pos < p.right(i); ++pos) owner[pos] = static_cast<int>(i) + 1;
	}
	for (std::size_t i = 0; i < p.size(); ++i) {
		owner[p.x[i]] = -1;
		owner[p.right(i)] = -1;
	}
	std::vector<std::uint32_t> counts(p.size() + 1, 0);
	for (std::uint32_t pos = 1; pos <= points; ++pos) {
		if (owner[pos] >= 0) ++counts[static_cast<std::size_t>(owner[pos])];
	}
	std::uint32_t total = 0;
	for (auto& c : counts) {
		if (c % 2 != 0) throw std::logic_error("gap_profile: odd free region");
		c /= 2;
		total += c;
	}
	if (total != p.n - p.size()) throw std::logic_error("gap_profile: regions do not sum to n - s");
	return counts;
}

/// Probability that a uniform matching of size n contains every arc of p: prod C_{m_i} / C_n.
inline Rational match_probability(const ValidPair& p) {
	BigInt num = 1;
	for (std::uint32_t m : gap_profile(p)) num *= catalan(m);
	return Rational(num, catalan(p.n));
}

} // namespace cplab
