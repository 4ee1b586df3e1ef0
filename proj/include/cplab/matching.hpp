#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cplab {

/// Point pair (a, b), 1-based.
using Arc = std::pair<std::uint32_t, std::uint32_t>;

/// Non-crossing perfect matching on points 1..2k, stored as a partner table.
class Matching {
public:
	Matching() = default;

	/// Builds from a 0-based partner table; throws if it is not a non-crossing fixed-point-free involution.
	static Matching from_partners(std::vector<std::uint32_t> partner0) {
		Matching m;
		m.partner_ = std::move(partner0);
		m.check();
		return m;
	}

	/// Builds from 1-based point pairs covering 1..2k exactly once.
	static Matching from_arcs(const std::vector<Arc>& arcs);

	std::uint32_t size() const { return static_cast<std::uint32_t>(partner_.size() / 2); }
	std::uint32_t points() const { return static_cast<std::uint32_t>(partner_.size()); }

	/// 1-based partner of 1-based point i.
	std::uint32_t partner(std::uint32_t i) const { return partner_.at(i - 1) + 1; }

	/// Arcs (a, b), a < b, in left-endpoint order.
	std::vector<Arc> arcs() const {
		std::vector<Arc> out;
		out.reserve(size());
		for (std::uint32_t i = 0; i < points(); ++i) {
			if (partner_[i] > i) out.emplace_back(i + 1, partner_[i] + 1);
		}
		return out;
	}

	/// Balanced-word encoding: '(' at left endpoints, ')' at right endpoints.
	std::string to_balanced() const {
		std::string w(points(), ')');
		for (std::uint32_t i = 0; i < points(); ++i) {
			if (partner_[i] > i) w[i] = '(';
		}
		return w;
	}

	const std::vector<std::uint32_t>& partners0() const { return partner_; }

	bool operator==(const Matching&) const = default;

private:
	void check() const {
		const std::size_t p = partner_.size();
		if (p % 2 != 0) throw std::invalid_argument("Matching: odd number of points");
		for (std::size_t i = 0; i < p; ++i) {
			const auto j = partner_[i];
			if (j >= p || j == i || partner_[j] != i) throw std::invalid_argument("Matching: partner table is not an involution");
		}
		// Non-crossing iff the balanced word pairs by stack exactly as the partner table says.
		std::vector<std::uint32_t> stack;
		for (std::uint32_t i = 0; i < p; ++i) {
			if (partner_[i] > i) {
				stack.push_back(i);
			} else {
				if (stack.empty() || stack.back() != partner_[i]) throw std::invalid_argument("Matching: arcs cross");
				stack.pop_back();
			}
		}
	}

	std::vector<std::uint32_t> partner_;
};

/// Pairs each ')' with the most recent unmatched '('. Throws on unbalanced or foreign symbols.
inline Matching decode_balanced(std::string_view word) {
	std::vector<std::uint32_t> partner(word.size());
	std::vector<std::uint32_t> stack;
	for (std::uint32_t i = 0; i < word.size(); ++i) {
		if (word[i] == '(') {
			stack.push_back(i);
		} else if (word[i] == ')') {
			if (stack.empty()) throw std::invalid_argument("decode_balanced: prefix goes negative");
			partner[i] = stack.back();
			partner[stack.back()] = i;
			stack.pop_back();
		} else {
			throw std::invalid_argument("decode_balanced: unexpected symbol");
		}
	}
	if (!stack.empty()) throw std::invalid_argument("decode_balanced: unclosed '('");
	return Matching::from_partners(std::move(partner));
}

namespace detail {
inline std::vector<std::uint32_t> partner_table(const std::vector<Arc>& arcs) {
	const std::size_t p = 2 * arcs.size();
	constexpr auto unset = static_cast<std::uint32_t>(-1);
	std::vector<std::uint32_t> partner(p, unset);
	for (auto [a, b] : arcs) {
		if (a < 1 || b < 1 || a > p || b > p || a == b) throw std::invalid_argument("not a perfect matching: point out of range");
		if (partner[a - 1] != unset || partner[b - 1] != unset) throw std::invalid_argument("not a perfect matching: duplicate point");
		partner[a - 1] = b - 1;
		partner[b - 1] = a - 1;
	}
	return partner;
}
} // namespace detail

inline Matching Matching::from_arcs(const std::vector<Arc>& arcs) {
	return from_partners(detail::partner_table(arcs));
}

/// True iff no two arcs interlace. Arcs may sit on any distinct positive points; a shared or repeated point throws.
inline bool is_noncrossing(const std::vector<Arc>& arcs) {
	std::vector<std::pair<std::uint32_t, std::size_t>> ends; // (point, arc index)
	ends.reserve(2 * arcs.size());
	for (std::size_t i = 0; i < arcs.size(); ++i) {
		const auto [a, b] = arcs[i];
		if (a < 1 || b < 1 || a == b) throw std::invalid_argument("is_noncrossing: bad arc");
		ends.emplace_back(a, i);
		ends.emplace_back(b, i);
	}
	std::sort(ends.begin(), ends.end());
	std::vector<bool> open(arcs.size(), false);
	std::vector<std::size_t> stack;
	for (std::size_t j = 0; j < ends.size(); ++j) {
		if (j > 0 && ends[j].first == ends[j - 1].first) throw std::invalid_argument("is_noncrossing: shared endpoint");
		const auto i = ends[j].second;
		if (!open[i]) {
			open[i] = true;
			stack.push_back(i);
		} else {
			if (stack.back() != i) return false;
			stack.pop_back();
		}
	}
	return true;
}

inline constexpr std::uint32_t kEnumerationCap = 10;

/// Visits every matching of size k in lexicographic order of its balanced word ('(' < ')').
inline void for_each_matching(std::uint32_t k, const std::function<void(const Matching&)>& visit,
							  std::uint32_t cap = kEnumerationCap) {
	if (k > cap) throw std::out_of_range("enumerate_matchings: size exceeds enumeration cap");
	std::string word;
	word.reserve(2 * k);
	std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t opens, std::uint32_t closes) {
		if (opens == k && closes == k) {
			visit(decode_balanced(word));
			return;
		}
		if (opens < k) {
			word.push_back('(');
			rec(opens + 1, closes);
			word.pop_back();
		}
		if (closes < opens) {
			word.push_back(')');
			rec(opens, closes + 1);
			word.pop_back();
		}
	};
	rec(0, 0);
}

inline std::vector<Matching> enumerate_matchings(std::uint32_t k, std::uint32_t cap = kEnumerationCap) {
	std::vector<Matching> out;
	for_each_matching(k, [&](const Matching& m) { out.push_back(m); }, cap);
	return out;
}

/// True iff every queried pair is an arc of m (pairs may be given in either order).
inline bool contains_arcs(const Matching& m, const std::vector<Arc>& arcs) {
	for (auto [a, b] : arcs) {
		if (a < 1 || b < 1 || a > m.points() || b > m.points()) throw std::out_of_range("contains_arcs: point out of range");
		if (m.partner(a) != b) return false;
	}
	return true;
}

} // namespace cplab
