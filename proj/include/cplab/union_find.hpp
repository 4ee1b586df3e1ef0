#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace cplab {

/// Disjoint sets with union by size and path halving.
class UnionFind {
public:
	explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

	std::size_t find(std::size_t v) {
		while (parent_[v] != v) {
			parent_[v] = parent_[parent_[v]];
			v = parent_[v];
		}
		return v;
	}

	bool unite(std::size_t a, std::size_t b) {
		a = find(a);
		b = find(b);
		if (a == b) return false;
		if (size_[a] < size_[b]) std::swap(a, b);
		parent_[b] = a;
		size_[a] += size_[b];
		return true;
	}

	std::size_t component_size(std::size_t v) { return size_[find(v)]; }

private:
	std::vector<std::size_t> parent_;
	std::vector<std::size_t> size_;
};

} // namespace cplab
