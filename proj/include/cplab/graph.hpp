#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cplab/matching.hpp"
#include "cplab/sampler.hpp"
#include "cplab/union_find.hpp"

namespace cplab {

enum class Side : std::uint8_t { top, bottom };

enum class EdgeAlgorithm { quadratic, sweep };

/// Interlacement graph of a representative. Vertices 0..s-1 are the top (red) arcs u1..us and s..n-1 the
/// bottom (blue) arcs v1..vt, each side in left-endpoint order.
class CatalanPairGraph {
public:
	CatalanPairGraph() = default;

	/// Builds from explicit arcs and edges; edges are 0-based vertex pairs.
	CatalanPairGraph(std::vector<Side> sides, std::vector<Arc> arcs, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
		: sides_(std::move(sides)), arcs_(std::move(arcs)), adjacency_(sides_.size()) {
		if (arcs_.size() != sides_.size()) throw std::invalid_argument("graph: sides and arcs differ in size");
		for (auto [u, v] : edges) {
			if (u >= adjacency_.size() || v >= adjacency_.size() || u == v) throw std::invalid_argument("graph: bad edge");
			adjacency_[u].push_back(v);
			adjacency_[v].push_back(u);
		}
		for (auto& nb : adjacency_) {
			std::sort(nb.begin(), nb.end());
			if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw std::invalid_argument("graph: duplicate edge");
		}
		for (std::uint32_t v = 0; v < sides_.size(); ++v) top_count_ += sides_[v] == Side::top;
	}

	std::uint32_t n() const { return static_cast<std::uint32_t>(sides_.size()); }
	std::uint32_t top_count() const { return top_count_; }
	Side side(std::uint32_t v) const { return sides_[v]; }
	const std::vector<Side>& sides() const { return sides_; }
	/// Endpoints (a, b), a < b, 1-based.
	const Arc& arc(std::uint32_t v) const { return arcs_[v]; }
	const std::vector<Arc>& arcs() const { return arcs_; }
	const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adjacency_[v]; }
	std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(adjacency_[v].size()); }

	bool adjacent(std::uint32_t u, std::uint32_t v) const {
		const auto& nb = adjacency_[u];
		return std::binary_search(nb.begin(), nb.end(), v);
	}

	std::uint64_t edge_count() const {
		std::uint64_t sum = 0;
		for (const auto& nb : adjacency_) sum += nb.size();
		return sum / 2;
	}

	/// Edges (u, v) with u < v, sorted.
	std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
		std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
		for (std::uint32_t u = 0; u < n(); ++u) {
			for (auto v : adjacency_[u]) {
				if (u < v) out.emplace_back(u, v);
			}
		}
		return out;
	}

	/// "u3" / "v2" style label.
	std::string label(std::uint32_t v) const {
		return sides_[v] == Side::top ? "u" + std::to_string(v + 1) : "v" + std::to_string(v - top_count_ + 1);
	}

	bool operator==(const CatalanPairGraph&) const = default;

private:
	std::vector<Side> sides_;
	std::vector<Arc> arcs_;
	std::vector<std::vector<std::uint32_t>> adjacency_;
	std::uint32_t top_count_ = 0;
};

inline bool arcs_interlace(const Arc& p, const Arc& q) {
	return (p.first < q.first && q.first < p.second && p.second < q.second) ||
		   (q.first < p.first && p.first < q.second && q.second < p.second);
}

inline CatalanPairGraph build_graph(const ColoredRepresentative& rep, EdgeAlgorithm algorithm = EdgeAlgorithm::quadratic) {
	const std::uint32_t points = 2 * rep.n();
	const auto& partner = rep.partners0();
	std::vector<Side> sides;
	std::vector<Arc> arcs;
	std::vector<std::uint32_t> vertex_at(points); // vertex index of the arc at each point
	for (Side side : {Side::top, Side::bottom}) {
		const Color color = side == Side::top ? Color::red : Color::blue;
		for (std::uint32_t i = 0; i < points; ++i) {
			if (rep.colors()[i] == color && partner[i] > i) {
				vertex_at[i] = vertex_at[partner[i]] = static_cast<std::uint32_t>(arcs.size());
				sides.push_back(side);
				arcs.emplace_back(i + 1, partner[i] + 1);
			}
		}
	}
	const auto top = static_cast<std::uint32_t>(std::count(sides.begin(), sides.end(), Side::top));
	const auto nv = static_cast<std::uint32_t>(arcs.size());

	std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
	if (algorithm == EdgeAlgorithm::quadratic) {
		for (std::uint32_t u = 0; u < top; ++u) {
			for (std::uint32_t v = top; v < nv; ++v) {
				if (arcs_interlace(arcs[u], arcs[v])) edges.emplace_back(u, v);
			}
		}
	} else {
		// Each side's open arcs form a nested stack ordered by left endpoint. When an arc closes at b, the
		// opposite-side arcs that opened after its left endpoint a and are still open are exactly those that
		// interlace it with the closing arc opening first.
		std::vector<std::uint32_t> open[2];
		for (std::uint32_t i = 0; i < points; ++i) {
			const std::uint32_t v = vertex_at[i];
			const int mine = sides[v] == Side::top ? 0 : 1;
			if (partner[i] > i) {
				open[mine].push_back(v);
				continue;
			}
			open[mine].pop_back();
			const auto& other = open[1 - mine];
			const std::uint32_t a = arcs[v].first;
			for (auto it = other.rbegin(); it != other.rend() && arcs[*it].first > a; ++it) edges.emplace_back(v, *it);
		}
	}
	return CatalanPairGraph(std::move(sides), std::move(arcs), edges);
}

/// Component sizes, largest first.
inline std::vector<std::uint32_t> components(const CatalanPairGraph& g) {
	UnionFind uf(g.n());
	for (std::uint32_t u = 0; u < g.n(); ++u) {
		for (auto v : g.neighbors(u)) uf.unite(u, v);
	}
	std::vector<std::uint32_t> sizes;
	for (std::uint32_t v = 0; v < g.n(); ++v) {
		if (uf.find(v) == v) sizes.push_back(static_cast<std::uint32_t>(uf.component_size(v)));
	}
	std::sort(sizes.begin(), sizes.end(), std::greater<>());
	return sizes;
}

struct IsolatedStats {
	std::uint32_t total = 0;
	std::map<std::uint32_t, std::uint32_t> by_half_length; ///< m -> number of isolated arcs (a, a + 2m - 1)
};

inline IsolatedStats isolated_stats(const CatalanPairGraph& g) {
	IsolatedStats s;
	for (std::uint32_t v = 0; v < g.n(); ++v) {
		if (g.degree(v) != 0) continue;
		const auto [a, b] = g.arc(v);
		if ((b - a) % 2 == 0) throw std::logic_error("isolated_stats: isolated arc encloses an odd number of points");
		++s.total;
		++s.by_half_length[(b - a + 1) / 2];
	}
	return s;
}

/// Number of arcs (i, i + k), either side, with alpha <= k <= beta.
inline std::uint32_t arc_span_counts(const CatalanPairGraph& g, std::uint32_t alpha, std::uint32_t beta) {
	if (alpha > beta) throw std::invalid_argument("arc_span_counts: alpha > beta");
	std::uint32_t count = 0;
	for (const auto& [a, b] : g.arcs()) count += (b - a >= alpha && b - a <= beta);
	return count;
}

inline std::map<std::uint32_t, std::uint32_t> degree_histogram(const CatalanPairGraph& g) {
	std::map<std::uint32_t, std::uint32_t> h;
	for (std::uint32_t v = 0; v < g.n(); ++v) ++h[g.degree(v)];
	return h;
}

struct GraphStats {
	std::uint64_t edge_count = 0;
	IsolatedStats isolated;
	std::vector<std::uint32_t> component_sizes; ///< descending
	std::map<std::uint32_t, std::uint32_t> degree_histogram;
};

inline GraphStats graph_stats(const CatalanPairGraph& g) {
	return GraphStats{g.edge_count(), isolated_stats(g), components(g), degree_histogram(g)};
}

} // namespace cplab
