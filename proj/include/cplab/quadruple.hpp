#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "cplab/matching.hpp"

namespace cplab {

/// Two-sided arc specification: top arcs (x_i, x_i + k_i) and bottom arcs (y_j, y_j + l_j), spans k and l.
struct Quadruple {
	std::uint32_t n = 0;
	std::vector<std::uint32_t> x, k; ///< top: left endpoints (strictly increasing) and spans
	std::vector<std::uint32_t> y, l; ///< bottom: left endpoints (strictly increasing) and spans

	std::vector<Arc> top_arcs() const {
		std::vector<Arc> out;
		for (std::size_t i = 0; i < x.size(); ++i) out.emplace_back(x[i], x[i] + k[i]);
		return out;
	}
	std::vector<Arc> bottom_arcs() const {
		std::vector<Arc> out;
		for (std::size_t j = 0; j < y.size(); ++j) out.emplace_back(y[j], y[j] + l[j]);
		return out;
	}

	static Quadruple from_arcs(std::uint32_t n, const std::vector<Arc>& top, const std::vector<Arc>& bottom) {
		Quadruple q;
		q.n = n;
		for (auto [a, b] : top) {
			q.x.push_back(a);
			q.k.push_back(b - a);
		}
		for (auto [a, b] : bottom) {
			q.y.push_back(a);
			q.l.push_back(b - a);
		}
		q.check_shape();
		return q;
	}

	/// Throws unless sizes agree, left endpoints strictly increase and spans are positive.
	void check_shape() const {
		if (x.size() != k.size() || y.size() != l.size()) throw std::invalid_argument("quadruple: mismatched lengths");
		for (std::size_t i = 0; i < x.size(); ++i) {
			if (k[i] == 0 || (i > 0 && x[i - 1] >= x[i])) throw std::invalid_argument("quadruple: bad top arcs");
		}
		for (std::size_t j = 0; j < y.size(); ++j) {
			if (l[j] == 0 || (j > 0 && y[j - 1] >= y[j])) throw std::invalid_argument("quadruple: bad bottom arcs");
		}
	}

	/// Every arc lies within [1, 2n].
	bool in_range() const {
		for (const auto& [a, b] : top_arcs()) {
			if (a < 1 || b > 2 * n) return false;
		}
		for (const auto& [a, b] : bottom_arcs()) {
			if (a < 1 || b > 2 * n) return false;
		}
		return true;
	}
};

struct QuadrupleProfile {
	std::vector<std::uint32_t> f; ///< f_0..f_s
	std::vector<std::uint32_t> g; ///< g_0..g_t
};

namespace detail {
/// Free-point counts for one side: a point is skipped if it is an endpoint of an opposite arc, counted in
/// region i if arc i is the innermost same-side interval containing it strictly, and in region 0 if no
/// same-side closed interval contains it. Endpoints of same-side arcs are never counted.
inline std::vector<std::uint32_t> side_profile(std::uint32_t n, const std::vector<Arc>& mine, const std::vector<Arc>& theirs) {
	const std::uint32_t points = 2 * n;
	std::vector<int> owner(points + 1, 0);
	// Same-side arcs need not be non-crossing here; the innermost enclosing arc is the one with the
	// smallest span among those containing the point.
	std::vector<std::uint32_t> best_span(points + 1, UINT32_MAX);
	for (std::size_t i = 0; i < mine.size(); ++i) {
		const auto [a, b] = mine[i];
		for (std::uint32_t p = a + 1; p < b && p <= points; ++p) {
			if (b - a < best_span[p]) {
				best_span[p] = b - a;
				owner[p] = static_cast<int>(i) + 1;
			}
		}
	}
	for (const auto& [a, b] : mine) {
		if (a <= points) owner[a] = -1;
		if (b <= points) owner[b] = -1;
	}
	for (const auto& [a, b] : theirs) {
		if (a <= points) owner[a] = -1;
		if (b <= points) owner[b] = -1;
	}
	std::vector<std::uint32_t> counts(mine.size() + 1, 0);
	for (std::uint32_t p = 1; p <= points; ++p) {
		if (owner[p] >= 0) ++counts[static_cast<std::size_t>(owner[p])];
	}
	return counts;
}
} // namespace detail

inline QuadrupleProfile quadruple_profile(const Quadruple& q) {
	q.check_shape();
	const auto top = q.top_arcs();
	const auto bottom = q.bottom_arcs();
	return QuadrupleProfile{detail::side_profile(q.n, top, bottom), detail::side_profile(q.n, bottom, top)};
}

/// The three syntactic conditions: arcs within [1, 2n]; any two endpoint values (across both sides, including
/// the two ends of one arc) differ by at least 2; no two same-side arcs interlace.
inline bool is_good_quadruple(const Quadruple& q) {
	q.check_shape();
	if (!q.in_range()) return false;
	const auto top = q.top_arcs();
	const auto bottom = q.bottom_arcs();
	std::vector<std::uint32_t> ends;
	for (const auto& [a, b] : top) ends.insert(ends.end(), {a, b});
	for (const auto& [a, b] : bottom) ends.insert(ends.end(), {a, b});
	for (std::size_t i = 0; i < ends.size(); ++i) {
		for (std::size_t j = i + 1; j < ends.size(); ++j) {
			const auto d = ends[i] > ends[j] ? ends[i] - ends[j] : ends[j] - ends[i];
			if (d < 2) return false;
		}
	}
	for (const auto* side : {&top, &bottom}) {
		for (const auto& p : *side) {
			for (const auto& r : *side) {
				if (p.first < r.first && r.first < p.second && p.second < r.second) return false;
			}
		}
	}
	return true;
}

/// g(k, l): number of pairs (x, y) for which top arc (x, x+k) and bottom arc (y, y+l) interlace and form a good
/// quadruple. Only y that place an endpoint strictly inside (x, x+k) are scanned.
inline std::uint64_t count_good_pairs(std::uint32_t n, std::uint32_t k, std::uint32_t l) {
	if (k == 0 || l == 0) throw std::invalid_argument("count_good_pairs: spans must be positive");
	const std::int64_t points = 2LL * n;
	auto far = [](std::int64_t a, std::int64_t b) { return std::llabs(a - b) >= 2; };
	std::uint64_t count = 0;
	for (std::int64_t x = 1; x + k <= points; ++x) {
		const std::int64_t xr = x + k;
		auto good = [&](std::int64_t y) {
			const std::int64_t yr = y + l;
			if (y < 1 || yr > points) return false;
			const bool interlace = (x < y && y < xr && xr < yr) || (y < x && x < yr && yr < xr);
			return interlace && k >= 2 && l >= 2 && far(x, y) && far(x, yr) && far(xr, y) && far(xr, yr);
		};
		// y strictly inside the top arc, or y + l strictly inside it; the two ranges may overlap only when the
		// bottom arc would sit inside the top arc, which never interlaces, so no pair is counted twice.
		for (std::int64_t y = x + 1; y < xr; ++y) count += good(y);
		for (std::int64_t yr = x + 1; yr < xr; ++yr) count += good(yr - l);
	}
	return count;
}

} // namespace cplab
