#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplab {

/// Raw statistics of one sampled graph. Absent optionals are metrics that were not requested.
struct RunRecord {
	std::uint32_t n = 0;
	std::uint32_t trial = 0;
	std::optional<std::uint64_t> edges;
	std::optional<std::uint64_t> isolated;
	std::optional<std::uint64_t> largest_component;
	std::optional<std::uint64_t> second_component; ///< 0 when the graph is connected
	std::optional<std::uint64_t> span_count;
	std::optional<std::uint64_t> pattern_count;
	std::map<std::uint32_t, std::uint32_t> degree_histogram;
	std::map<std::uint32_t, std::uint32_t> isolated_by_m;
};

struct MetricSummary {
	std::string metric;
	double mean = 0;
	double sd = 0;     ///< sample standard deviation (n - 1 denominator)
	double stderr_ = 0; ///< sd / sqrt(trials)
	std::size_t trials = 0;
};

struct SummaryStats {
	std::uint32_t n = 0;
	std::size_t trials = 0;
	std::vector<MetricSummary> metrics; ///< raw metrics, then the derived ratios

	const MetricSummary* find(const std::string& name) const {
		for (const auto& m : metrics) {
			if (m.metric == name) return &m;
		}
		return nullptr;
	}
	const MetricSummary& at(const std::string& name) const {
		if (const auto* m = find(name)) return *m;
		throw std::out_of_range("summary has no metric " + name);
	}
};

inline MetricSummary summarize_values(std::string name, const std::vector<double>& values) {
	if (values.size() < 2) throw std::invalid_argument("summarize: need at least two values");
	const double count = static_cast<double>(values.size());
	double mean = 0;
	for (double v : values) mean += v;
	mean /= count;
	double ss = 0;
	for (double v : values) ss += (v - mean) * (v - mean);
	const double sd = std::sqrt(ss / (count - 1));
	return MetricSummary{std::move(name), mean, sd, sd / std::sqrt(count), values.size()};
}

/// Per-metric mean, sd and standard error, followed by the ratios edges/(n ln n), isolated/n,
/// largest_component/n and second_component/n for whichever of those metrics are present.
inline SummaryStats summarize(const std::vector<RunRecord>& records) {
	if (records.size() < 2) throw std::invalid_argument("summarize: need at least two records");
	const std::uint32_t n = records.front().n;
	for (const auto& r : records) {
		if (r.n != n) throw std::invalid_argument("summarize: records mix different n");
	}
	SummaryStats out;
	out.n = n;
	out.trials = records.size();

	auto column = [&](auto member) -> std::optional<std::vector<double>> {
		std::vector<double> v;
		for (const auto& r : records) {
			const auto& field = r.*member;
			if (!field) return std::nullopt;
			v.push_back(static_cast<double>(*field));
		}
		return v;
	};
	auto scaled = [](std::vector<double> v, double by) {
		for (auto& x : v) x /= by;
		return v;
	};

	const auto edges = column(&RunRecord::edges);
	const auto isolated = column(&RunRecord::isolated);
	const auto largest = column(&RunRecord::largest_component);
	const auto second = column(&RunRecord::second_component);
	const auto spans = column(&RunRecord::span_count);
	const auto pattern = column(&RunRecord::pattern_count);

	if (edges) out.metrics.push_back(summarize_values("edges", *edges));
	if (isolated) out.metrics.push_back(summarize_values("isolated", *isolated));
	if (largest) out.metrics.push_back(summarize_values("largest_component", *largest));
	if (second) out.metrics.push_back(summarize_values("second_component", *second));
	if (spans) out.metrics.push_back(summarize_values("span_count", *spans));
	if (pattern) out.metrics.push_back(summarize_values("pattern_count", *pattern));

	const double dn = n;
	if (edges && n > 1) out.metrics.push_back(summarize_values("edges_per_n_log_n", scaled(*edges, dn * std::log(dn))));
	if (isolated) out.metrics.push_back(summarize_values("isolated_per_n", scaled(*isolated, dn)));
	if (largest) out.metrics.push_back(summarize_values("largest_per_n", scaled(*largest, dn)));
	if (second) out.metrics.push_back(summarize_values("second_per_n", scaled(*second, dn)));
	return out;
}

} // namespace cplab
