#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cplab/catalan.hpp"
#include "cplab/matching.hpp"
#include "cplab/rng.hpp"

namespace cplab {

// ---------------------------------------------------------------------------
// Coloring models

/// First 2n-1 points fair coins, last point fixes both color counts even.
struct Fair {
	bool operator==(const Fair&) const = default;
};
/// First 2n-1 points red with probability p, last point fixes parity as in Fair.
struct Biased {
	Rational p;
	bool operator==(const Biased&) const = default;
};
/// Uniform over colorings with exactly 2m red points.
struct FixedRed {
	std::uint32_t m = 0;
	bool operator==(const FixedRed&) const = default;
};

using ColoringModel = std::variant<Fair, Biased, FixedRed>;

/// Parses a decimal ("0.25"), fraction ("1/4") or integer literal into an exact rational.
inline Rational parse_rational(std::string_view text) {
	auto digits_only = [](std::string_view s) {
		return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
	};
	if (auto slash = text.find('/'); slash != std::string_view::npos) {
		auto num = text.substr(0, slash), den = text.substr(slash + 1);
		if (!digits_only(num) || !digits_only(den)) throw std::invalid_argument("bad rational: " + std::string(text));
		BigInt d(std::string{den});
		if (d == 0) throw std::invalid_argument("bad rational: zero denominator");
		return Rational(BigInt(std::string{num}), d);
	}
	auto dot = text.find('.');
	std::string_view whole = text.substr(0, dot);
	std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
	if (whole.empty()) whole = "0";
	if (!digits_only(whole) || (dot != std::string_view::npos && !frac.empty() && !digits_only(frac)))
		throw std::invalid_argument("bad rational: " + std::string(text));
	BigInt scale = 1;
	for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
	BigInt num = BigInt(std::string{whole}) * scale + (frac.empty() ? BigInt(0) : BigInt(std::string{frac}));
	return Rational(num, scale);
}

/// "fair", "biased:<p>" or "fixed:<m>".
inline ColoringModel parse_model(std::string_view text) {
	if (text == "fair") return Fair{};
	if (text.starts_with("biased:")) {
		Rational p = parse_rational(text.substr(7));
		if (p < 0 || p > 1) throw std::invalid_argument("biased model: p must lie in [0, 1]");
		return Biased{p};
	}
	if (text.starts_with("fixed:")) {
		auto m = text.substr(6);
		if (m.empty() || !std::all_of(m.begin(), m.end(), [](char c) { return c >= '0' && c <= '9'; }))
			throw std::invalid_argument("fixed model: m must be a nonnegative integer");
		return FixedRed{static_cast<std::uint32_t>(std::stoul(std::string{m}))};
	}
	throw std::invalid_argument("unknown model: " + std::string(text));
}

inline std::string to_string(const ColoringModel& model) {
	if (std::holds_alternative<Fair>(model)) return "fair";
	if (const auto* b = std::get_if<Biased>(&model)) {
		const Rational& p = b->p;
		return "biased:" + (denominator(p) == 1 ? numerator(p).str() : to_fraction_string(p));
	}
	return "fixed:" + std::to_string(std::get<FixedRed>(model).m);
}

inline void validate_model(std::uint32_t n, const ColoringModel& model) {
	if (const auto* b = std::get_if<Biased>(&model); b && (b->p < 0 || b->p > 1))
		throw std::invalid_argument("biased model: p must lie in [0, 1]");
	if (const auto* f = std::get_if<FixedRed>(&model); f && f->m > n)
		throw std::invalid_argument("fixed model: m exceeds n");
}

// ---------------------------------------------------------------------------
// Matchings

/// Uniform matching of size k via the cycle lemma.
///
/// A uniform arrangement of k '(' and k+1 ')' has exactly one rotation whose proper prefixes all stay
/// nonnegative: the one starting just after the first position where the running sum is minimal. Every Dyck
/// word of length 2k arises from exactly 2k+1 arrangements, so dropping the trailing ')' is uniform.
inline Matching sample_matching(std::uint32_t k, RngStream& rng) {
	const std::uint32_t len = 2 * k + 1;
	std::vector<char> seq(len, ')');
	std::fill_n(seq.begin(), k, '(');
	for (std::uint32_t i = len - 1; i > 0; --i) {
		std::swap(seq[i], seq[rng.below(i + 1)]);
	}
	int sum = 0, best = 1;
	std::uint32_t argmin = 0;
	for (std::uint32_t i = 0; i < len; ++i) {
		sum += seq[i] == '(' ? 1 : -1;
		if (sum < best) {
			best = sum;
			argmin = i;
		}
	}
	std::string word;
	word.reserve(2 * k);
	for (std::uint32_t i = 1; i < len; ++i) word.push_back(seq[(argmin + i) % len]);
	return decode_balanced(word);
}

// ---------------------------------------------------------------------------
// Colorings and representatives

enum class Color : std::uint8_t { red, blue };

using Coloring = std::vector<Color>;

inline std::string to_string(const Coloring& colors) {
	std::string s;
	s.reserve(colors.size());
	for (Color c : colors) s.push_back(c == Color::red ? 'R' : 'B');
	return s;
}

inline Coloring parse_coloring(std::string_view s) {
	Coloring c;
	c.reserve(s.size());
	for (char ch : s) {
		if (ch == 'R') c.push_back(Color::red);
		else if (ch == 'B') c.push_back(Color::blue);
		else throw std::invalid_argument("coloring: expected only 'R' and 'B'");
	}
	return c;
}

inline Coloring sample_coloring(std::uint32_t n, const ColoringModel& model, RngStream& rng) {
	validate_model(n, model);
	const std::uint32_t points = 2 * n;
	Coloring colors(points, Color::blue);
	if (const auto* fixed = std::get_if<FixedRed>(&model)) {
		std::vector<std::uint32_t> pos(points);
		for (std::uint32_t i = 0; i < points; ++i) pos[i] = i;
		for (std::uint32_t i = 0; i < 2 * fixed->m; ++i) {
			std::swap(pos[i], pos[i + rng.below(points - i)]);
			colors[pos[i]] = Color::red;
		}
		return colors;
	}
	if (points == 0) return colors;
	std::uint32_t reds = 0;
	if (std::holds_alternative<Fair>(model)) {
		for (std::uint32_t i = 0; i + 1 < points; ++i) {
			if (rng.coin()) {
				colors[i] = Color::red;
				++reds;
			}
		}
	} else {
		const double p = std::get<Biased>(model).p.convert_to<double>();
		for (std::uint32_t i = 0; i + 1 < points; ++i) {
			if (rng.unit() < p) {
				colors[i] = Color::red;
				++reds;
			}
		}
	}
	colors[points - 1] = reds % 2 == 1 ? Color::red : Color::blue;
	return colors;
}

/// One (coloring, top matching, bottom matching) triple on 2n points.
class ColoredRepresentative {
public:
	/// Places `top` on the red points and `bottom` on the blue points, each in position order.
	ColoredRepresentative(Coloring colors, Matching top, Matching bottom)
		: colors_(std::move(colors)), top_(std::move(top)), bottom_(std::move(bottom)) {
		if (colors_.size() % 2 != 0) throw std::invalid_argument("representative: odd number of points");
		std::vector<std::uint32_t> red, blue;
		for (std::uint32_t i = 0; i < colors_.size(); ++i) (colors_[i] == Color::red ? red : blue).push_back(i);
		if (red.size() != top_.points() || blue.size() != bottom_.points())
			throw std::invalid_argument("representative: matching sizes do not fit the coloring");
		partner_.assign(colors_.size(), 0);
		for (std::size_t j = 0; j < red.size(); ++j) partner_[red[j]] = red[top_.partners0()[j]];
		for (std::size_t j = 0; j < blue.size(); ++j) partner_[blue[j]] = blue[bottom_.partners0()[j]];
	}

	/// Builds from the combined arc list; every arc must join two points of one color.
	static ColoredRepresentative from_arcs(Coloring colors, const std::vector<Arc>& arcs) {
		const auto partner = detail::partner_table(arcs);
		if (partner.size() != colors.size()) throw std::invalid_argument("representative: arcs do not cover the coloring");
		std::vector<std::uint32_t> index(colors.size());
		std::uint32_t nr = 0, nb = 0;
		for (std::uint32_t i = 0; i < colors.size(); ++i) index[i] = colors[i] == Color::red ? nr++ : nb++;
		std::vector<std::uint32_t> top(nr), bottom(nb);
		for (std::uint32_t i = 0; i < colors.size(); ++i) {
			const auto j = partner[i];
			if (colors[i] != colors[j]) throw std::invalid_argument("representative: arc joins two colors");
			(colors[i] == Color::red ? top : bottom)[index[i]] = index[j];
		}
		return ColoredRepresentative(std::move(colors), Matching::from_partners(std::move(top)),
									 Matching::from_partners(std::move(bottom)));
	}

	std::uint32_t n() const { return static_cast<std::uint32_t>(colors_.size() / 2); }
	const Coloring& colors() const { return colors_; }
	const Matching& top() const { return top_; }
	const Matching& bottom() const { return bottom_; }

	/// 1-based partner of 1-based point i.
	std::uint32_t partner(std::uint32_t i) const { return partner_.at(i - 1) + 1; }
	const std::vector<std::uint32_t>& partners0() const { return partner_; }

	bool operator==(const ColoredRepresentative& o) const { return colors_ == o.colors_ && partner_ == o.partner_; }

private:
	Coloring colors_;
	Matching top_;
	Matching bottom_;
	std::vector<std::uint32_t> partner_;
};

inline ColoredRepresentative sample_representative(std::uint32_t n, const ColoringModel& model, RngStream& rng) {
	if (n == 0) throw std::invalid_argument("sample_representative: n must be >= 1");
	Coloring colors = sample_coloring(n, model, rng);
	const auto reds = static_cast<std::uint32_t>(std::count(colors.begin(), colors.end(), Color::red));
	Matching top = sample_matching(reds / 2, rng);
	Matching bottom = sample_matching(n - reds / 2, rng);
	return ColoredRepresentative(std::move(colors), std::move(top), std::move(bottom));
}

} // namespace cplab
