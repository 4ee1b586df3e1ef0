#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cplab/graph.hpp"
#include "cplab/io.hpp"
#include "cplab/pattern.hpp"
#include "cplab/rng.hpp"
#include "cplab/sampler.hpp"
#include "cplab/summary.hpp"

namespace cplab {

struct MetricSelection {
	bool edges = false;
	bool isolated = false;
	bool isolated_by_m = false;
	bool components = false;
	bool degrees = false;
	std::optional<std::pair<std::uint32_t, std::uint32_t>> spans; ///< (alpha, beta)
	bool pattern = false;                                           ///< uses ExperimentSpec::pattern
};

/// Parses a comma list of: edges, isolated, isolated_by_m, components, degrees, spans:<alpha>:<beta>, pattern, all.
/// "all" selects every metric that takes no parameters.
inline MetricSelection parse_metrics(std::string_view text) {
	MetricSelection sel;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		const auto comma = text.find(',', pos);
		const auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
		if (item == "edges") sel.edges = true;
		else if (item == "isolated") sel.isolated = true;
		else if (item == "isolated_by_m") sel.isolated_by_m = true;
		else if (item == "components") sel.components = true;
		else if (item == "degrees") sel.degrees = true;
		else if (item == "pattern") sel.pattern = true;
		else if (item == "all") sel.edges = sel.isolated = sel.isolated_by_m = sel.components = sel.degrees = true;
		else if (item.starts_with("spans:")) {
			const auto rest = item.substr(6);
			const auto colon = rest.find(':');
			if (colon == std::string_view::npos) throw std::invalid_argument("metric spans needs spans:<alpha>:<beta>");
			try {
				const auto alpha = static_cast<std::uint32_t>(std::stoul(std::string(rest.substr(0, colon))));
				const auto beta = static_cast<std::uint32_t>(std::stoul(std::string(rest.substr(colon + 1))));
				if (alpha < 1 || alpha > beta) throw std::invalid_argument("");
				sel.spans = {alpha, beta};
			} catch (const std::logic_error&) {
				throw std::invalid_argument("metric spans needs 1 <= alpha <= beta");
			}
		} else throw std::invalid_argument("unknown metric: " + std::string(item));
		if (comma == std::string_view::npos) break;
		pos = comma + 1;
	}
	return sel;
}

struct ExperimentSpec {
	std::vector<std::uint32_t> n_values;
	std::uint32_t trials = 1;
	ColoringModel model = Fair{};
	std::uint64_t seed = 0;
	MetricSelection metrics;
	std::optional<PatternGraph> pattern;
	bool induced = false;
	EdgeAlgorithm algorithm = EdgeAlgorithm::quadratic;
	unsigned threads = 1;

	void validate() const {
		if (n_values.empty()) throw std::invalid_argument("experiment: no n values");
		if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
		for (auto n : n_values) {
			if (n < 1) throw std::invalid_argument("experiment: n must be >= 1");
			validate_model(n, model);
		}
		if (metrics.pattern && !pattern) throw std::invalid_argument("experiment: metric 'pattern' needs a pattern");
	}
};

/// Samples the graph for (spec.seed, n, trial) and evaluates the requested metrics.
inline RunRecord run_trial(const ExperimentSpec& spec, std::uint32_t n, std::uint32_t trial) {
	RngStream rng(spec.seed, RngStream::trial_stream(n, trial));
	const auto g = build_graph(sample_representative(n, spec.model, rng), spec.algorithm);
	RunRecord r;
	r.n = n;
	r.trial = trial;
	const auto& m = spec.metrics;
	if (m.edges) r.edges = g.edge_count();
	if (m.isolated || m.isolated_by_m) {
		auto iso = isolated_stats(g);
		if (m.isolated) r.isolated = iso.total;
		if (m.isolated_by_m) r.isolated_by_m = std::move(iso.by_half_length);
	}
	if (m.components) {
		const auto sizes = components(g);
		r.largest_component = sizes.empty() ? 0 : sizes[0];
		r.second_component = sizes.size() < 2 ? 0 : sizes[1];
	}
	if (m.degrees) r.degree_histogram = degree_histogram(g);
	if (m.spans) r.span_count = arc_span_counts(g, m.spans->first, m.spans->second);
	if (m.pattern) r.pattern_count = count_pattern(g, *spec.pattern, spec.induced);
	return r;
}

/// All trials for one n, in trial order regardless of thread count.
inline std::vector<RunRecord> run_trials(const ExperimentSpec& spec, std::uint32_t n) {
	std::vector<RunRecord> records(spec.trials);
	const unsigned workers = std::max(1U, std::min<unsigned>(spec.threads, spec.trials));
	if (workers == 1) {
		for (std::uint32_t t = 0; t < spec.trials; ++t) records[t] = run_trial(spec, n, t);
		return records;
	}
	std::atomic<std::uint32_t> next{0};
	std::vector<std::exception_ptr> errors(workers);
	std::vector<std::thread> pool;
	for (unsigned w = 0; w < workers; ++w) {
		pool.emplace_back([&, w] {
			try {
				for (std::uint32_t t = next++; t < spec.trials; t = next++) records[t] = run_trial(spec, n, t);
			} catch (...) {
				errors[w] = std::current_exception();
			}
		});
	}
	for (auto& th : pool) th.join();
	for (auto& e : errors) {
		if (e) std::rethrow_exception(e);
	}
	return records;
}

struct SizeResult {
	std::uint32_t n = 0;
	std::vector<RunRecord> records;
	std::optional<SummaryStats> summary; ///< absent when trials == 1
	std::map<std::uint32_t, std::uint64_t> degree_totals;
	std::map<std::uint32_t, std::uint64_t> isolated_by_m_totals;
};

inline SizeResult run_size(const ExperimentSpec& spec, std::uint32_t n) {
	SizeResult out;
	out.n = n;
	out.records = run_trials(spec, n);
	if (out.records.size() >= 2) out.summary = summarize(out.records);
	for (const auto& r : out.records) {
		for (auto [d, c] : r.degree_histogram) out.degree_totals[d] += c;
		for (auto [m, c] : r.isolated_by_m) out.isolated_by_m_totals[m] += c;
	}
	return out;
}

/// Runs every n in order, handing each finished size to `emit` before starting the next.
inline void run_experiment(const ExperimentSpec& spec, const std::function<void(const SizeResult&)>& emit) {
	spec.validate();
	for (auto n : spec.n_values) emit(run_size(spec, n));
}

// ---------------------------------------------------------------------------
// Record output

inline std::string pattern_column(const ExperimentSpec& spec) { return spec.induced ? "induced_pattern_count" : "pattern_count"; }

inline std::string span_column(const ExperimentSpec& spec) {
	return "spans_" + std::to_string(spec.metrics.spans->first) + "_" + std::to_string(spec.metrics.spans->second);
}

/// Header: n,trial[,edges][,isolated][,largest_component,second_component][,spans_<a>_<b>][,pattern_count],seed,model
inline void write_records_csv_header(std::ostream& os, const ExperimentSpec& spec) {
	const auto& m = spec.metrics;
	os << "n,trial";
	if (m.edges) os << ",edges";
	if (m.isolated) os << ",isolated";
	if (m.components) os << ",largest_component,second_component";
	if (m.spans) os << ',' << span_column(spec);
	if (m.pattern) os << ',' << pattern_column(spec);
	os << ",seed,model\n";
}

inline void write_records_csv_rows(std::ostream& os, const ExperimentSpec& spec, const std::vector<RunRecord>& records) {
	const auto& m = spec.metrics;
	const auto model = to_string(spec.model);
	for (const auto& r : records) {
		os << r.n << ',' << r.trial;
		if (m.edges) os << ',' << *r.edges;
		if (m.isolated) os << ',' << *r.isolated;
		if (m.components) os << ',' << *r.largest_component << ',' << *r.second_component;
		if (m.spans) os << ',' << *r.span_count;
		if (m.pattern) os << ',' << *r.pattern_count;
		os << ',' << spec.seed << ',' << model << '\n';
	}
}

inline io::json spec_to_json(const ExperimentSpec& spec) {
	io::json metrics = io::json::array();
	const auto& m = spec.metrics;
	if (m.edges) metrics.push_back("edges");
	if (m.isolated) metrics.push_back("isolated");
	if (m.isolated_by_m) metrics.push_back("isolated_by_m");
	if (m.components) metrics.push_back("components");
	if (m.degrees) metrics.push_back("degrees");
	if (m.spans) metrics.push_back("spans:" + std::to_string(m.spans->first) + ":" + std::to_string(m.spans->second));
	if (m.pattern) metrics.push_back("pattern");
	io::json j{{"n_values", spec.n_values}, {"trials", spec.trials}, {"model", to_string(spec.model)},
			   {"seed", spec.seed}, {"metrics", metrics}};
	if (spec.pattern) {
		io::json edges = io::json::array();
		for (auto [a, b] : spec.pattern->edges()) edges.push_back({a + 1, b + 1});
		j["pattern"] = {{"vertices", spec.pattern->vertices()}, {"edges", edges}, {"induced", spec.induced}};
	}
	return j;
}

inline io::json record_to_json(const ExperimentSpec& spec, const RunRecord& r) {
	const auto& m = spec.metrics;
	io::json j{{"n", r.n}, {"trial", r.trial}};
	if (m.edges) j["edges"] = *r.edges;
	if (m.isolated) j["isolated"] = *r.isolated;
	if (m.components) {
		j["largest_component"] = *r.largest_component;
		j["second_component"] = *r.second_component;
	}
	if (m.spans) j[span_column(spec)] = *r.span_count;
	if (m.pattern) j[pattern_column(spec)] = *r.pattern_count;
	if (m.degrees) j["degrees"] = io::histogram_to_json(r.degree_histogram);
	if (m.isolated_by_m) j["isolated_by_m"] = io::histogram_to_json(r.isolated_by_m);
	return j;
}

inline io::json size_result_to_json(const ExperimentSpec& spec, const SizeResult& s) {
	io::json records = io::json::array();
	for (const auto& r : s.records) records.push_back(record_to_json(spec, r));
	io::json j{{"n", s.n}, {"records", records}};
	if (s.summary) j["summary"] = io::summary_to_json(*s.summary);
	if (spec.metrics.degrees) j["degree_totals"] = io::histogram_to_json(s.degree_totals);
	if (spec.metrics.isolated_by_m) j["isolated_by_m_totals"] = io::histogram_to_json(s.isolated_by_m_totals);
	return j;
}

} // namespace cplab
