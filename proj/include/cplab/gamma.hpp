#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cplab/catalan.hpp"

namespace cplab {

/// Number of ways to place same-side-non-crossing red and blue matchings on 2j points:
/// sum_b binom(2j, 2b) C_{j-b} C_b.
inline BigInt two_color_configurations(std::uint32_t j) {
	BigInt s = 0;
	for (std::uint32_t b = 0; b <= j; ++b) s += binomial(2 * j, 2 * b) * catalan(j - b) * catalan(b);
	return s;
}

/// gamma_m = 4 * 16^{-m} * sum_{b=0}^{m-1} binom(2m-2, 2b) C_{m-1-b} C_b, evaluated term by term.
inline Rational gamma_term(std::uint32_t m) {
	if (m == 0) throw std::invalid_argument("gamma_term: m must be >= 1");
	const BigInt num = 4 * two_color_configurations(m - 1);
	const BigInt den = BigInt(1) << (4 * m);
	return Rational(num, den);
}

struct GammaPartialSum {
	std::uint32_t M = 0;
	Rational lower; ///< sum_{m=1}^{M} gamma_m
	Rational upper; ///< lower + 1 / (4 (M - 1))
};

/// Bracket on gamma from the first M series terms.
///
/// The inner sum satisfies sum_b binom(2j, 2b) C_{j-b} C_b = C_j C_{j+1}, so gamma_m = 4 C_{m-1} C_m / 16^m.
/// Successive products obey C_m C_{m+1} = C_{m-1} C_m * 4 (2m+1)(2m-1) / ((m+2)(m+1)), which keeps every step
/// linear in the operand size. The numerator over the common denominator 16^M is accumulated by Horner's rule.
inline GammaPartialSum gamma_bounds(std::uint32_t M) {
	if (M < 2) throw std::invalid_argument("gamma_bounds: M must be >= 2");
	BigInt product = 1; // C_{m-1} C_m at m = 1
	BigInt acc = 0;
	for (std::uint32_t m = 1; m <= M; ++m) {
		acc = (acc << 4) + 4 * product;
		const std::uint64_t mm = m;
		product *= 4 * (2 * mm + 1) * (2 * mm - 1);
		product /= (mm + 2) * (mm + 1);
	}
	GammaPartialSum out;
	out.M = M;
	out.lower = Rational(acc, BigInt(1) << (4 * M));
	out.upper = out.lower + Rational(1, 4 * (BigInt(M) - 1));
	return out;
}

/// Decimal rendering of r with `digits` fractional digits, rounded toward -inf (round_up = false) or +inf.
inline std::string to_decimal_string(const Rational& r, unsigned digits, bool round_up = false) {
	BigInt scale = 1;
	for (unsigned i = 0; i < digits; ++i) scale *= 10;
	const BigInt num = numerator(r) * scale;
	const BigInt den = denominator(r);
	BigInt q = num / den; // truncates toward zero
	const BigInt rem = num - q * den;
	if (rem != 0) {
		if (round_up && num > 0) q += 1;
		if (!round_up && num < 0) q -= 1;
	}
	const bool negative = q < 0;
	if (negative) q = -q;
	std::string s = q.str();
	if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
	if (digits > 0) s.insert(s.size() - digits, ".");
	return negative ? "-" + s : s;
}

} // namespace cplab
