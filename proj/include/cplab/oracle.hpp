#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cplab/catalan.hpp"
#include "cplab/graph.hpp"
#include "cplab/matching.hpp"
#include "cplab/pattern.hpp"
#include "cplab/quadruple.hpp"
#include "cplab/sampler.hpp"

// Exhaustive exact evaluation at small n. Nothing here is clever on purpose: plain nested loops over every
// coloring and every matching, exact rationals throughout.

namespace cplab::oracle {

inline constexpr std::uint32_t kPairProbabilityCap = 10;
inline constexpr std::uint32_t kModelCap = 5;
inline constexpr std::uint32_t kQuadrupleCap = 6;

/// Fraction of the C_n matchings of size n that contain every arc in `arcs`.
inline Rational exact_pair_probability(std::uint32_t n, const std::vector<Arc>& arcs) {
	if (n > kPairProbabilityCap) throw std::out_of_range("exact_pair_probability: n exceeds cap");
	for (auto [a, b] : arcs) {
		if (a < 1 || b < 1 || a > 2 * n || b > 2 * n) throw std::out_of_range("exact_pair_probability: point out of range");
	}
	BigInt hits = 0, total = 0;
	for_each_matching(n, [&](const Matching& m) {
		++total;
		if (contains_arcs(m, arcs)) ++hits;
	});
	return Rational(hits, total);
}

struct PatternQuery {
	std::string name;
	PatternGraph pattern;
	bool induced = false;
};

struct ExactExpectation {
	std::uint32_t n = 0;
	ColoringModel model;
	Rational expected_edges;
	Rational expected_isolated;
	std::map<std::string, Rational> expected_pattern_counts;
};

/// Probability of one complete coloring (bit i set = point i+1 red) under the model.
inline Rational coloring_probability(std::uint32_t n, const ColoringModel& model, std::uint32_t mask) {
	const std::uint32_t points = 2 * n;
	const auto reds = static_cast<std::uint32_t>(std::popcount(mask));
	if (const auto* fixed = std::get_if<FixedRed>(&model)) {
		if (reds != 2 * fixed->m) return 0;
		return Rational(BigInt(1), binomial(points, 2 * fixed->m));
	}
	if (reds % 2 != 0) return 0;
	if (std::holds_alternative<Fair>(model)) return Rational(BigInt(1), BigInt(1) << (points - 1));
	const Rational& p = std::get<Biased>(model).p;
	Rational prob = 1;
	for (std::uint32_t i = 0; i + 1 < points; ++i) prob *= (mask >> i) & 1U ? p : Rational(1) - p;
	return prob;
}

inline ExactExpectation exact_model_expectations(std::uint32_t n, const ColoringModel& model,
												 const std::vector<PatternQuery>& patterns = {}) {
	if (n == 0) throw std::invalid_argument("exact_model_expectations: n must be >= 1");
	if (n > kModelCap) throw std::out_of_range("exact_model_expectations: n exceeds cap");
	validate_model(n, model);
	const std::uint32_t points = 2 * n;

	std::vector<std::vector<Matching>> by_size(n + 1);
	for (std::uint32_t k = 0; k <= n; ++k) by_size[k] = enumerate_matchings(k);

	ExactExpectation out;
	out.n = n;
	out.model = model;
	for (const auto& q : patterns) out.expected_pattern_counts[q.name] = 0;

	for (std::uint32_t mask = 0; mask < (1U << points); ++mask) {
		const Rational pc = coloring_probability(n, model, mask);
		if (pc == 0) continue;
		Coloring colors(points);
		for (std::uint32_t i = 0; i < points; ++i) colors[i] = (mask >> i) & 1U ? Color::red : Color::blue;
		const std::uint32_t r = static_cast<std::uint32_t>(std::popcount(mask)) / 2;

		BigInt edges = 0, isolated = 0;
		std::vector<BigInt> pattern_sums(patterns.size(), 0);
		for (const auto& top : by_size[r]) {
			for (const auto& bottom : by_size[n - r]) {
				const auto g = build_graph(ColoredRepresentative(colors, top, bottom));
				edges += g.edge_count();
				isolated += isolated_stats(g).total;
				for (std::size_t i = 0; i < patterns.size(); ++i) pattern_sums[i] += count_pattern(g, patterns[i].pattern, patterns[i].induced);
			}
		}
		const Rational weight = pc / Rational(BigInt(by_size[r].size() * by_size[n - r].size()));
		out.expected_edges += weight * Rational(edges);
		out.expected_isolated += weight * Rational(isolated);
		for (std::size_t i = 0; i < patterns.size(); ++i) out.expected_pattern_counts[patterns[i].name] += weight * Rational(pattern_sums[i]);
	}
	return out;
}

/// True iff some representative on 2n points (any coloring with even color classes) has every top arc of q
/// as a red arc and every bottom arc as a blue arc.
inline bool is_valid_quadruple_small(const Quadruple& q) {
	q.check_shape();
	if (q.n > kQuadrupleCap) throw std::out_of_range("is_valid_quadruple_small: n exceeds cap");
	if (q.n == 0 || !q.in_range()) return false;
	const std::uint32_t points = 2 * q.n;
	const auto top = q.top_arcs();
	const auto bottom = q.bottom_arcs();

	std::vector<std::vector<Matching>> by_size(q.n + 1);
	for (std::uint32_t k = 0; k <= q.n; ++k) by_size[k] = enumerate_matchings(k);

	// Relabels arcs onto the positions of one color class; false if an endpoint has the other color.
	auto relabel = [&](const std::vector<Arc>& arcs, std::uint32_t mask, bool red, std::vector<Arc>& out) {
		std::vector<std::uint32_t> index(points + 1, 0);
		std::uint32_t next = 0;
		for (std::uint32_t p = 1; p <= points; ++p) {
			if ((((mask >> (p - 1)) & 1U) != 0) == red) index[p] = ++next;
		}
		out.clear();
		for (auto [a, b] : arcs) {
			if (index[a] == 0 || index[b] == 0) return false;
			out.emplace_back(index[a], index[b]);
		}
		return true;
	};
	auto some_matching_contains = [&](std::uint32_t size, const std::vector<Arc>& arcs) {
		return std::any_of(by_size[size].begin(), by_size[size].end(), [&](const Matching& m) { return contains_arcs(m, arcs); });
	};

	std::vector<Arc> top_rel, bottom_rel;
	for (std::uint32_t mask = 0; mask < (1U << points); ++mask) {
		const auto reds = static_cast<std::uint32_t>(std::popcount(mask));
		if (reds % 2 != 0) continue;
		if (!relabel(top, mask, true, top_rel) || !relabel(bottom, mask, false, bottom_rel)) continue;
		if (some_matching_contains(reds / 2, top_rel) && some_matching_contains(q.n - reds / 2, bottom_rel)) return true;
	}
	return false;
}

} // namespace cplab::oracle
