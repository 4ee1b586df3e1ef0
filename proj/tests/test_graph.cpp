#include <numeric>
#include <queue>

#include <gtest/gtest.h>

#include "cplab/graph.hpp"
#include "cplab/io.hpp"
#include "cplab/union_find.hpp"
#include "test_support.hpp"

using namespace cplab;
using cplab::testing::worked_example;

namespace {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

std::uint32_t u(std::uint32_t i) { return i - 1; }
std::uint32_t v(std::uint32_t j) { return 5 + j - 1; }

bool two_colorable(const CatalanPairGraph& g) {
	std::vector<int> color(g.n(), -1);
	for (std::uint32_t s = 0; s < g.n(); ++s) {
		if (color[s] >= 0) continue;
		color[s] = 0;
		std::queue<std::uint32_t> q;
		q.push(s);
		while (!q.empty()) {
			const auto a = q.front();
			q.pop();
			for (auto b : g.neighbors(a)) {
				if (color[b] < 0) {
					color[b] = 1 - color[a];
					q.push(b);
				} else if (color[b] == color[a]) {
					return false;
				}
			}
		}
	}
	return true;
}

CatalanPairGraph single_color(const std::string& word) {
	const auto m = decode_balanced(word);
	return build_graph(ColoredRepresentative(Coloring(m.points(), Color::red), m, Matching{}));
}

} // namespace

TEST(GoldenExample, VerticesAndEdges) {
	const auto g = build_graph(worked_example());
	ASSERT_EQ(g.n(), 9U);
	EXPECT_EQ(g.top_count(), 5U);
	EXPECT_EQ(g.edge_count(), 7U);
	const std::vector<Edge> expected{{u(1), v(2)}, {u(2), v(1)}, {u(4), v(2)}, {u(4), v(3)}, {u(4), v(4)}, {u(5), v(2)}, {u(5), v(3)}};
	EXPECT_EQ(g.edges(), expected);
	EXPECT_EQ(g.arc(u(4)), Arc(10, 16));
	EXPECT_EQ(g.arc(v(2)), Arc(6, 12));
	EXPECT_TRUE(g.adjacent(u(4), v(2)));
	EXPECT_EQ(g.label(u(4)), "u4");
	EXPECT_EQ(g.label(v(2)), "v2");
	EXPECT_EQ(g.arc(u(3)), Arc(8, 9));
}

TEST(GoldenExample, Statistics) {
	const auto g = build_graph(worked_example());
	EXPECT_EQ(components(g), (std::vector<std::uint32_t>{6, 2, 1}));
	const auto iso = isolated_stats(g);
	EXPECT_EQ(iso.total, 1U);
	EXPECT_EQ(iso.by_half_length, (std::map<std::uint32_t, std::uint32_t>{{1, 1}}));
	EXPECT_EQ(degree_histogram(g), (std::map<std::uint32_t, std::uint32_t>{{0, 1}, {1, 4}, {2, 2}, {3, 2}}));
	const std::vector<std::uint32_t> degrees{1, 1, 0, 3, 2, 1, 3, 2, 1};
	for (std::uint32_t w = 0; w < g.n(); ++w) EXPECT_EQ(g.degree(w), degrees[w]) << g.label(w);
	EXPECT_EQ(arc_span_counts(g, 1, 2), 4U);
	EXPECT_EQ(arc_span_counts(g, 1, 18), 9U);
	EXPECT_EQ(arc_span_counts(g, 7, 17), 0U);
	EXPECT_THROW(arc_span_counts(g, 3, 2), std::invalid_argument);
	const auto stats = graph_stats(g);
	EXPECT_EQ(stats.edge_count, 7U);
	EXPECT_EQ(stats.component_sizes.size(), 3U);
}

TEST(GoldenExample, SweepAgrees) {
	EXPECT_EQ(build_graph(worked_example(), EdgeAlgorithm::sweep), build_graph(worked_example()));
}

TEST(SmallGraphs, SameSideArcsNeverInterlace) {
	const auto g = single_color("((()))");
	EXPECT_EQ(g.edge_count(), 0U);
	const auto iso = isolated_stats(g);
	EXPECT_EQ(iso.total, 3U);
	EXPECT_EQ(iso.by_half_length, (std::map<std::uint32_t, std::uint32_t>{{1, 1}, {2, 1}, {3, 1}}));
}

TEST(SmallGraphs, EdgelessAndSingleEdge) {
	const auto edgeless = single_color("()()()()");
	EXPECT_EQ(components(edgeless), (std::vector<std::uint32_t>{1, 1, 1, 1}));
	EXPECT_EQ(degree_histogram(edgeless), (std::map<std::uint32_t, std::uint32_t>{{0, 4}}));

	const auto edge = build_graph(ColoredRepresentative(parse_coloring("RBRB"), decode_balanced("()"), decode_balanced("()")));
	EXPECT_EQ(components(edge), (std::vector<std::uint32_t>{2}));
	EXPECT_EQ(degree_histogram(edge), (std::map<std::uint32_t, std::uint32_t>{{1, 2}}));
	EXPECT_EQ(isolated_stats(edge).total, 0U);

	const auto one = single_color("()");
	EXPECT_EQ(isolated_stats(one).total, 1U);
	EXPECT_EQ(isolated_stats(one).by_half_length.at(1), 1U);
}

TEST(GraphJson, RoundTrip) {
	const auto g = build_graph(worked_example());
	const auto j = io::graph_to_json(g);
	EXPECT_EQ(j.at("edges").size(), 7U);
	EXPECT_EQ(j.at("edges")[0], io::json::array({1, 7}));
	EXPECT_EQ(io::graph_from_json(j), g);
	EXPECT_EQ(io::load_graph(io::representative_to_json(worked_example())), g);
	EXPECT_EQ(io::load_graph(io::json{{"graph", j}}), g);
}

TEST(GraphConstruction, RejectsBadEdges) {
	EXPECT_THROW(CatalanPairGraph({Side::top, Side::bottom}, {{1, 3}, {2, 4}}, {{0, 0}}), std::invalid_argument);
	EXPECT_THROW(CatalanPairGraph({Side::top, Side::bottom}, {{1, 3}, {2, 4}}, {{0, 1}, {1, 0}}), std::invalid_argument);
	EXPECT_THROW(CatalanPairGraph({Side::top}, {{1, 3}, {2, 4}}, {}), std::invalid_argument);
}

TEST(UnionFind, Basics) {
	UnionFind uf(5);
	EXPECT_TRUE(uf.unite(0, 1));
	EXPECT_TRUE(uf.unite(3, 4));
	EXPECT_FALSE(uf.unite(1, 0));
	EXPECT_TRUE(uf.unite(1, 4));
	EXPECT_EQ(uf.component_size(3), 4U);
	EXPECT_EQ(uf.component_size(2), 1U);
	EXPECT_EQ(uf.find(0), uf.find(4));
}

TEST(Properties, SweepMatchesQuadratic) {
	RngStream rng(2718, 0);
	const std::vector<ColoringModel> models{Fair{}, Biased{Rational(1, 5)}, FixedRed{0}};
	for (int i = 0; i < 1000; ++i) {
		const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(300));
		const auto rep = sample_representative(n, i % 7 == 0 ? models[1] : models[0], rng);
		ASSERT_EQ(build_graph(rep, EdgeAlgorithm::sweep), build_graph(rep, EdgeAlgorithm::quadratic)) << i;
	}
}

TEST(Properties, StructuralInvariants) {
	RngStream rng(1618, 0);
	for (int i = 0; i < 300; ++i) {
		const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(100));
		const auto rep = sample_representative(n, i % 2 ? ColoringModel(Fair{}) : ColoringModel(Biased{Rational(3, 4)}), rng);
		const auto g = build_graph(rep);
		ASSERT_EQ(g.n(), n);

		std::uint64_t degree_sum = 0;
		for (std::uint32_t a = 0; a < g.n(); ++a) {
			degree_sum += g.degree(a);
			for (auto b : g.neighbors(a)) {
				ASSERT_NE(g.side(a), g.side(b));
				ASSERT_TRUE(g.adjacent(b, a));
				ASSERT_EQ(arcs_interlace(g.arc(a), g.arc(b)), true);
			}
		}
		ASSERT_EQ(degree_sum, 2 * g.edge_count());
		ASSERT_TRUE(two_colorable(g));

		for (std::uint32_t a = 0; a < g.n(); ++a) {
			for (std::uint32_t b = g.top_count(); b < g.n() && a < g.top_count(); ++b) {
				ASSERT_EQ(g.adjacent(a, b), arcs_interlace(g.arc(a), g.arc(b)));
			}
		}

		const auto sizes = components(g);
		ASSERT_EQ(std::accumulate(sizes.begin(), sizes.end(), 0U), n);
		ASSERT_TRUE(std::is_sorted(sizes.rbegin(), sizes.rend()));

		const auto iso = isolated_stats(g);
		std::uint32_t binned = 0;
		for (auto [m, c] : iso.by_half_length) binned += c;
		ASSERT_EQ(binned, iso.total);

		// An arc is isolated iff every point strictly inside it is matched to another point inside it.
		for (std::uint32_t a = 0; a < g.n(); ++a) {
			const auto [lo, hi] = g.arc(a);
			bool closed = true;
			for (std::uint32_t p = lo + 1; p < hi; ++p) {
				const auto q = rep.partner(p);
				closed &= q > lo && q < hi;
			}
			ASSERT_EQ(closed, g.degree(a) == 0) << a;
		}
	}
}
