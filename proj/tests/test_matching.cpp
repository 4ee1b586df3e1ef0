#include <set>
#include <string>

#include <gtest/gtest.h>

#include "cplab/catalan.hpp"
#include "cplab/matching.hpp"

using namespace cplab;

TEST(DecodeBalanced, Examples) {
	EXPECT_EQ(decode_balanced("((()))").arcs(), (std::vector<Arc>{{1, 6}, {2, 5}, {3, 4}}));
	EXPECT_EQ(decode_balanced("()()()").arcs(), (std::vector<Arc>{{1, 2}, {3, 4}, {5, 6}}));
	EXPECT_EQ(decode_balanced("(())()").arcs(), (std::vector<Arc>{{1, 4}, {2, 3}, {5, 6}}));
	EXPECT_EQ(decode_balanced("").size(), 0U);
}

TEST(DecodeBalanced, RejectsUnbalancedWords) {
	EXPECT_THROW(decode_balanced("(()"), std::invalid_argument);
	EXPECT_THROW(decode_balanced(")("), std::invalid_argument);
	EXPECT_THROW(decode_balanced("(x)"), std::invalid_argument);
}

TEST(Matching, PartnerIsOneBased) {
	const auto m = decode_balanced("(())()");
	EXPECT_EQ(m.partner(1), 4U);
	EXPECT_EQ(m.partner(3), 2U);
	EXPECT_EQ(m.partner(6), 5U);
	EXPECT_EQ(m.size(), 3U);
	EXPECT_EQ(m.points(), 6U);
}

TEST(Matching, FromArcsRejectsCrossingAndGaps) {
	EXPECT_THROW(Matching::from_arcs({{1, 3}, {2, 4}}), std::invalid_argument);
	EXPECT_THROW(Matching::from_arcs({{1, 2}, {4, 5}}), std::invalid_argument);
	EXPECT_THROW(Matching::from_arcs({{1, 2}, {2, 3}}), std::invalid_argument);
	EXPECT_EQ(Matching::from_arcs({{2, 3}, {1, 4}}), decode_balanced("(())"));
}

TEST(IsNoncrossing, Examples) {
	EXPECT_TRUE(is_noncrossing({{1, 4}, {2, 3}}));
	EXPECT_FALSE(is_noncrossing({{1, 3}, {2, 4}}));
	EXPECT_TRUE(is_noncrossing({{1, 7}, {2, 4}, {8, 9}, {10, 16}, {11, 14}}));
	EXPECT_TRUE(is_noncrossing({{3, 5}, {6, 12}, {13, 18}, {15, 17}}));
	EXPECT_TRUE(is_noncrossing({}));
	EXPECT_TRUE(is_noncrossing({{5, 20}, {1, 3}}));
	EXPECT_FALSE(is_noncrossing({{5, 20}, {1, 7}}));
	EXPECT_THROW(is_noncrossing({{1, 3}, {3, 5}}), std::invalid_argument);
}

TEST(Enumerate, Counts) {
	EXPECT_EQ(enumerate_matchings(0).size(), 1U);
	EXPECT_EQ(enumerate_matchings(3).size(), 5U);
	EXPECT_EQ(enumerate_matchings(5).size(), 42U);
	for (std::uint32_t k = 0; k <= 10; ++k) {
		std::uint64_t count = 0;
		for_each_matching(k, [&](const Matching& m) {
			++count;
			if (k <= 7) {
				EXPECT_TRUE(is_noncrossing(m.arcs()));
			}
		});
		EXPECT_EQ(BigInt(count), catalan(k)) << k;
	}
}

TEST(Enumerate, LexicographicAndDistinct) {
	const auto all = enumerate_matchings(6);
	for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].to_balanced(), all[i].to_balanced());
	EXPECT_EQ(all.front().to_balanced(), "(((((())))))");
	EXPECT_EQ(all.back().to_balanced(), "()()()()()()");
}

TEST(Enumerate, CapIsEnforced) {
	EXPECT_THROW(enumerate_matchings(11), std::out_of_range);
	EXPECT_THROW(enumerate_matchings(4, 3), std::out_of_range);
}

TEST(Encoding, RoundTripIsBijective) {
	for (std::uint32_t k = 0; k <= 8; ++k) {
		std::set<std::string> seen;
		for_each_matching(k, [&](const Matching& m) {
			const auto w = m.to_balanced();
			EXPECT_EQ(decode_balanced(w).to_balanced(), w);
			EXPECT_EQ(decode_balanced(w), m);
			seen.insert(w);
		});
		EXPECT_EQ(BigInt(seen.size()), catalan(k));
	}
}

TEST(Encoding, OpenMarkIffPartnerIsLater) {
	for (std::uint32_t k = 1; k <= 7; ++k) {
		for_each_matching(k, [&](const Matching& m) {
			const auto w = m.to_balanced();
			for (std::uint32_t i = 1; i <= m.points(); ++i) {
				EXPECT_EQ(w[i - 1] == '(', m.partner(i) > i);
				EXPECT_EQ(m.partner(m.partner(i)), i);
			}
		});
	}
}

TEST(ContainsArcs, Examples) {
	const auto m = decode_balanced("((()))");
	EXPECT_TRUE(contains_arcs(m, {{2, 5}}));
	EXPECT_TRUE(contains_arcs(m, {{5, 2}}));
	EXPECT_FALSE(contains_arcs(m, {{1, 2}}));
	EXPECT_TRUE(contains_arcs(m, {}));
	EXPECT_THROW(contains_arcs(m, {{1, 7}}), std::out_of_range);
}

TEST(ContainsArcs, TenOf1430) {
	std::uint32_t hits = 0, total = 0;
	for_each_matching(8, [&](const Matching& m) {
		++total;
		hits += contains_arcs(m, {{2, 11}, {4, 7}});
	});
	EXPECT_EQ(total, 1430U);
	EXPECT_EQ(hits, 10U);
}
