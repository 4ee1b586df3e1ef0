#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cplab/graph.hpp"

namespace cplab {

inline constexpr std::uint32_t kPatternVertexCap = 8;

/// Small pattern graph H on vertices 0..v-1.
class PatternGraph {
public:
	PatternGraph(std::uint32_t vertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list, std::uint32_t cap = kPatternVertexCap)
		: v_(vertices), adj_(vertices, std::vector<bool>(vertices, false)) {
		if (vertices == 0) throw std::invalid_argument("pattern: no vertices");
		if (vertices > cap) throw std::out_of_range("pattern: vertex count exceeds cap");
		for (auto [a, b] : edge_list) {
			if (a >= vertices || b >= vertices || a == b) throw std::invalid_argument("pattern: bad edge");
			if (adj_[a][b]) throw std::invalid_argument("pattern: duplicate edge");
			adj_[a][b] = adj_[b][a] = true;
			edges_.emplace_back(std::min(a, b), std::max(a, b));
		}
		automorphisms_ = count_automorphisms();
		connected_ = check_connected();
		bipartite_ = check_bipartite();
	}

	/// Parses "1-2,2-3" (1-based). The vertex count is the largest label unless `vertices` is larger.
	static PatternGraph parse(std::string_view text, std::uint32_t vertices = 0, std::uint32_t cap = kPatternVertexCap) {
		std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
		std::uint32_t maxv = vertices;
		std::size_t pos = 0;
		while (pos < text.size()) {
			auto comma = text.find(',', pos);
			auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
			auto dash = item.find('-');
			if (dash == std::string_view::npos) throw std::invalid_argument("pattern: expected 'a-b', got '" + std::string(item) + "'");
			const auto a = parse_label(item.substr(0, dash));
			const auto b = parse_label(item.substr(dash + 1));
			edges.emplace_back(a - 1, b - 1);
			maxv = std::max({maxv, a, b});
			if (comma == std::string_view::npos) break;
			pos = comma + 1;
		}
		return PatternGraph(maxv, std::move(edges), cap);
	}

	std::uint32_t vertices() const { return v_; }
	const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
	bool adjacent(std::uint32_t a, std::uint32_t b) const { return adj_[a][b]; }
	std::uint64_t automorphism_count() const { return automorphisms_; }
	bool connected() const { return connected_; }
	bool bipartite() const { return bipartite_; }

private:
	static std::uint32_t parse_label(std::string_view s) {
		if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6)
			throw std::invalid_argument("pattern: bad vertex label '" + std::string(s) + "'");
		const auto v = static_cast<std::uint32_t>(std::stoul(std::string(s)));
		if (v == 0) throw std::invalid_argument("pattern: vertex labels start at 1");
		return v;
	}

	std::uint64_t count_automorphisms() const {
		std::vector<std::uint32_t> perm(v_);
		std::iota(perm.begin(), perm.end(), 0u);
		std::uint64_t count = 0;
		do {
			bool ok = true;
			for (std::uint32_t a = 0; a < v_ && ok; ++a) {
				for (std::uint32_t b = a + 1; b < v_ && ok; ++b) ok = adj_[a][b] == adj_[perm[a]][perm[b]];
			}
			count += ok;
		} while (std::next_permutation(perm.begin(), perm.end()));
		return count;
	}

	bool check_connected() const {
		std::vector<bool> seen(v_, false);
		std::vector<std::uint32_t> stack{0};
		seen[0] = true;
		std::uint32_t reached = 1;
		while (!stack.empty()) {
			auto a = stack.back();
			stack.pop_back();
			for (std::uint32_t b = 0; b < v_; ++b) {
				if (adj_[a][b] && !seen[b]) {
					seen[b] = true;
					++reached;
					stack.push_back(b);
				}
			}
		}
		return reached == v_;
	}

	bool check_bipartite() const {
		std::vector<int> color(v_, -1);
		for (std::uint32_t s = 0; s < v_; ++s) {
			if (color[s] != -1) continue;
			color[s] = 0;
			std::vector<std::uint32_t> stack{s};
			while (!stack.empty()) {
				auto a = stack.back();
				stack.pop_back();
				for (std::uint32_t b = 0; b < v_; ++b) {
					if (!adj_[a][b]) continue;
					if (color[b] == -1) {
						color[b] = 1 - color[a];
						stack.push_back(b);
					} else if (color[b] == color[a]) {
						return false;
					}
				}
			}
		}
		return true;
	}

	std::uint32_t v_;
	std::vector<std::vector<bool>> adj_;
	std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
	std::uint64_t automorphisms_ = 0;
	bool connected_ = false;
	bool bipartite_ = false;
};

struct PatternCount {
	std::uint64_t embeddings = 0; ///< injective maps preserving the required relations
	std::uint64_t copies = 0;     ///< embeddings / |Aut(H)|
};

/// Counts copies of h in g (induced: non-edges must map to non-edges too).
///
/// Pattern vertices are placed in an order where each vertex after the first of its component has an
/// earlier neighbor; candidates for it are then the neighbors of that neighbor's image.
inline PatternCount count_pattern_detailed(const CatalanPairGraph& g, const PatternGraph& h, bool induced) {
	const std::uint32_t hv = h.vertices();
	std::vector<std::uint32_t> order;
	std::vector<int> anchor(hv, -1); // position in `order` of an earlier neighbor, or -1
	std::vector<bool> placed(hv, false);
	for (std::uint32_t root = 0; root < hv; ++root) {
		if (placed[root]) continue;
		placed[root] = true;
		std::size_t head = order.size();
		order.push_back(root);
		while (head < order.size()) {
			const auto a = order[head];
			for (std::uint32_t b = 0; b < hv; ++b) {
				if (h.adjacent(a, b) && !placed[b]) {
					placed[b] = true;
					anchor[b] = static_cast<int>(head);
					order.push_back(b);
				}
			}
			++head;
		}
	}

	std::vector<std::uint32_t> image(hv);
	std::vector<bool> used(g.n(), false);
	std::uint64_t embeddings = 0;

	auto consistent = [&](std::size_t depth, std::uint32_t cand) {
		const auto hvtx = order[depth];
		for (std::size_t d = 0; d < depth; ++d) {
			const bool need = h.adjacent(hvtx, order[d]);
			if (need || induced) {
				if (g.adjacent(cand, image[d]) != need) return false;
			}
		}
		return true;
	};

	auto recurse = [&](auto&& self, std::size_t depth) -> void {
		if (depth == hv) {
			++embeddings;
			return;
		}
		const int a = anchor[order[depth]];
		auto try_candidate = [&](std::uint32_t cand) {
			if (used[cand] || !consistent(depth, cand)) return;
			used[cand] = true;
			image[depth] = cand;
			self(self, depth + 1);
			used[cand] = false;
		};
		if (a >= 0) {
			for (auto cand : g.neighbors(image[static_cast<std::size_t>(a)])) try_candidate(cand);
		} else {
			for (std::uint32_t cand = 0; cand < g.n(); ++cand) try_candidate(cand);
		}
	};
	recurse(recurse, 0);

	if (embeddings % h.automorphism_count() != 0) throw std::logic_error("count_pattern: embeddings not divisible by |Aut(H)|");
	return PatternCount{embeddings, embeddings / h.automorphism_count()};
}

/// N_H(g) (induced = false) or N*_H(g) (induced = true): unordered copies of h.
inline std::uint64_t count_pattern(const CatalanPairGraph& g, const PatternGraph& h, bool induced) {
	return count_pattern_detailed(g, h, induced).copies;
}

} // namespace cplab
