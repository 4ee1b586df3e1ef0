// cplab: sampling, statistics, exact oracle and gamma bracket for random Catalan-pair graphs.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cplab/cplab.hpp"

namespace {

using cplab::io::json;
namespace fs = std::filesystem;

/// Thrown for unusable input; maps to exit code 2.
struct ValidationError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
	if (const char* env = std::getenv("CPLAB_SEED")) {
		try {
			std::size_t used = 0;
			const auto v = std::stoull(env, &used, 0);
			if (used == std::string(env).size()) return v;
		} catch (const std::exception&) {
		}
		throw ValidationError("CPLAB_SEED is not an unsigned integer");
	}
	return 0;
}

/// "100,200,300" or "start:stop:step" (inclusive), or a mix of both separated by commas.
std::vector<std::uint32_t> parse_sizes(const std::string& text) {
	std::vector<std::uint32_t> out;
	std::stringstream ss(text);
	std::string item;
	auto num = [](const std::string& s) {
		std::size_t used = 0;
		const auto v = std::stoul(s, &used);
		if (used != s.size()) throw ValidationError("bad size: " + s);
		return static_cast<std::uint32_t>(v);
	};
	try {
		while (std::getline(ss, item, ',')) {
			const auto c1 = item.find(':');
			if (c1 == std::string::npos) {
				out.push_back(num(item));
				continue;
			}
			const auto c2 = item.find(':', c1 + 1);
			const auto start = num(item.substr(0, c1));
			const auto stop = num(item.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
			const auto step = c2 == std::string::npos ? 1U : num(item.substr(c2 + 1));
			if (step == 0) throw ValidationError("size range step must be positive");
			for (std::uint32_t n = start; n <= stop; n += step) out.push_back(n);
		}
	} catch (const std::logic_error&) {
		throw ValidationError("bad size list: " + text);
	}
	if (out.empty()) throw ValidationError("empty size list");
	return out;
}

std::vector<cplab::Arc> parse_arcs(const std::string& text) {
	std::vector<cplab::Arc> arcs;
	if (text.empty()) return arcs;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		const auto dash = item.find('-');
		if (dash == std::string::npos) throw ValidationError("arc must look like 'a-b': " + item);
		try {
			arcs.emplace_back(std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1)));
		} catch (const std::logic_error&) {
			throw ValidationError("bad arc: " + item);
		}
		if (arcs.back().first >= arcs.back().second) throw ValidationError("arc endpoints must satisfy a < b: " + item);
	}
	return arcs;
}

cplab::EdgeAlgorithm parse_algorithm(const std::string& s) {
	if (s == "quadratic") return cplab::EdgeAlgorithm::quadratic;
	if (s == "sweep") return cplab::EdgeAlgorithm::sweep;
	throw ValidationError("algorithm must be quadratic or sweep");
}

/// Output sink: a file when a path is given, stdout otherwise.
class Output {
public:
	explicit Output(const std::string& path) : path_(path) {
		if (!path.empty() && path != "-") {
			file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
			if (!*file_) throw std::runtime_error("cannot open output file: " + path);
		}
	}
	std::ostream& stream() { return file_ ? *file_ : std::cout; }
	bool is_file() const { return file_ != nullptr; }
	void finish() {
		stream().flush();
		if (!stream()) throw std::runtime_error("write failed: " + (is_file() ? path_ : std::string("stdout")));
	}

private:
	std::string path_;
	std::unique_ptr<std::ofstream> file_;
};

void write_file(const fs::path& path, const std::string& content) {
	std::ofstream f(path, std::ios::binary);
	if (!f) throw std::runtime_error("cannot open output file: " + path.string());
	f << content;
	if (!f) throw std::runtime_error("write failed: " + path.string());
}

struct SamplingOptions {
	std::uint32_t n = 10;
	std::uint64_t seed = 0;
	std::uint64_t stream = 0;
	std::string model = "fair";
	std::string algorithm = "quadratic";
};

void add_sampling_options(CLI::App* cmd, SamplingOptions& o) {
	cmd->add_option("--n", o.n, "Number of vertices (arcs)");
	cmd->add_option("--seed", o.seed, "64-bit seed (default: $CPLAB_SEED or 0)");
	cmd->add_option("--stream", o.stream, "Stream index under the seed");
	cmd->add_option("--model", o.model, "fair | biased:<p> | fixed:<m>");
	cmd->add_option("--algorithm", o.algorithm, "Edge detection: quadratic | sweep");
}

cplab::ColoringModel model_or_throw(const std::string& text) {
	try {
		return cplab::parse_model(text);
	} catch (const std::invalid_argument& e) {
		throw ValidationError(e.what());
	}
}

cplab::PatternGraph pattern_or_throw(const std::string& text) {
	try {
		return cplab::PatternGraph::parse(text);
	} catch (const std::logic_error& e) {
		throw ValidationError(e.what());
	}
}

cplab::CatalanPairGraph sample_graph(const SamplingOptions& o, json* rep_out = nullptr) {
	const auto model = model_or_throw(o.model);
	if (o.n < 1) throw ValidationError("--n must be >= 1");
	try {
		cplab::validate_model(o.n, model);
	} catch (const std::invalid_argument& e) {
		throw ValidationError(e.what());
	}
	cplab::RngStream rng(o.seed, o.stream);
	const auto rep = cplab::sample_representative(o.n, model, rng);
	if (rep_out) *rep_out = cplab::io::representative_to_json(rep);
	return cplab::build_graph(rep, parse_algorithm(o.algorithm));
}

int cmd_sample(const SamplingOptions& o, const std::string& out_path) {
	json rep;
	const auto g = sample_graph(o, &rep);
	const auto stats = cplab::graph_stats(g);
	json doc{{"seed", o.seed},
			 {"stream", o.stream},
			 {"model", cplab::to_string(model_or_throw(o.model))},
			 {"representative", rep},
			 {"graph", cplab::io::graph_to_json(g)},
			 {"stats",
			  {{"edges", stats.edge_count},
			   {"isolated", stats.isolated.total},
			   {"isolated_by_m", cplab::io::histogram_to_json(stats.isolated.by_half_length)},
			   {"components", stats.component_sizes},
			   {"degrees", cplab::io::histogram_to_json(stats.degree_histogram)}}}};
	Output out(out_path);
	out.stream() << doc.dump(2) << '\n';
	out.finish();
	return 0;
}

struct ExperimentOptions {
	std::string sizes = "100";
	std::uint32_t trials = 100;
	std::uint64_t seed = 0;
	std::string model = "fair";
	std::string metrics = "edges,isolated,components";
	std::string format = "csv";
	std::string out;
	std::string pattern;
	bool induced = false;
	unsigned threads = 0;
	std::string algorithm = "quadratic";
};

int cmd_experiment(const ExperimentOptions& o) {
	cplab::ExperimentSpec spec;
	spec.n_values = parse_sizes(o.sizes);
	spec.trials = o.trials;
	spec.model = model_or_throw(o.model);
	spec.seed = o.seed;
	try {
		spec.metrics = cplab::parse_metrics(o.metrics);
	} catch (const std::invalid_argument& e) {
		throw ValidationError(e.what());
	}
	if (!o.pattern.empty()) {
		spec.pattern = pattern_or_throw(o.pattern);
		spec.metrics.pattern = true;
	}
	spec.induced = o.induced;
	spec.algorithm = parse_algorithm(o.algorithm);
	spec.threads = o.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : o.threads;
	if (o.format != "csv" && o.format != "json") throw ValidationError("--format must be csv or json");
	try {
		spec.validate();
	} catch (const std::invalid_argument& e) {
		throw ValidationError(e.what());
	}

	Output out(o.out);
	if (o.format == "json") {
		json results = json::array();
		cplab::run_experiment(spec, [&](const cplab::SizeResult& s) { results.push_back(cplab::size_result_to_json(spec, s)); });
		out.stream() << json{{"spec", cplab::spec_to_json(spec)}, {"results", results}}.dump(2) << '\n';
		out.finish();
		return 0;
	}

	const fs::path base = out.is_file() ? fs::path(o.out) : fs::path("records.csv");
	const fs::path dir = base.has_parent_path() ? base.parent_path() : fs::path(".");
	std::ostringstream summary;
	cplab::io::write_summary_csv_header(summary);
	cplab::write_records_csv_header(out.stream(), spec);
	cplab::run_experiment(spec, [&](const cplab::SizeResult& s) {
		cplab::write_records_csv_rows(out.stream(), spec, s.records);
		out.stream().flush();
		if (s.summary) cplab::io::write_summary_csv_rows(summary, *s.summary);
		const auto n = std::to_string(s.n);
		if (spec.metrics.degrees) {
			std::ostringstream os;
			cplab::io::write_histogram_csv(os, "degree", s.degree_totals);
			write_file(dir / ("degrees_" + n + ".csv"), os.str());
		}
		if (spec.metrics.isolated_by_m) {
			std::ostringstream os;
			cplab::io::write_histogram_csv(os, "m", s.isolated_by_m_totals);
			write_file(dir / ("isolated_by_m_" + n + ".csv"), os.str());
		}
	});
	out.finish();
	if (out.is_file()) {
		write_file(dir / (base.stem().string() + ".summary.csv"), summary.str());
	} else {
		std::cerr << summary.str();
	}
	return 0;
}

int cmd_gamma(std::uint32_t M, unsigned digits, const std::string& out_path) {
	if (M < 2) throw ValidationError("--M must be >= 2");
	const auto b = cplab::gamma_bounds(M);
	json doc{{"M", M},
			 {"lower", cplab::to_decimal_string(b.lower, digits, false)},
			 {"upper", cplab::to_decimal_string(b.upper, digits, true)},
			 {"width", cplab::io::rational(b.upper - b.lower)}};
	Output out(out_path);
	out.stream() << doc.dump(2) << '\n';
	out.finish();
	return 0;
}

std::vector<cplab::oracle::PatternQuery> pattern_queries(const std::vector<std::string>& patterns, bool induced) {
	std::vector<cplab::oracle::PatternQuery> qs;
	for (const auto& p : patterns) qs.push_back({p, pattern_or_throw(p), induced});
	return qs;
}

int cmd_oracle_expectations(std::uint32_t n, const std::string& model_text, const std::vector<std::string>& patterns, bool induced,
							const std::string& out_path) {
	const auto model = model_or_throw(model_text);
	if (n < 1 || n > cplab::oracle::kModelCap) throw ValidationError("--n must lie in [1, " + std::to_string(cplab::oracle::kModelCap) + "]");
	try {
		cplab::validate_model(n, model);
	} catch (const std::invalid_argument& e) {
		throw ValidationError(e.what());
	}
	const auto e = cplab::oracle::exact_model_expectations(n, model, pattern_queries(patterns, induced));
	json counts = json::object();
	for (const auto& [name, value] : e.expected_pattern_counts) counts[name] = cplab::io::rational(value);
	json doc{{"n", n},
			 {"model", cplab::to_string(model)},
			 {"expected_edges", cplab::io::rational(e.expected_edges)},
			 {"expected_isolated", cplab::io::rational(e.expected_isolated)}};
	if (!patterns.empty()) {
		doc["induced"] = induced;
		doc["expected_pattern_counts"] = counts;
	}
	Output out(out_path);
	out.stream() << doc.dump(2) << '\n';
	out.finish();
	return 0;
}

int cmd_oracle_probability(std::uint32_t n, const std::string& arcs_text, const std::string& out_path) {
	if (n > cplab::oracle::kPairProbabilityCap) throw ValidationError("--n exceeds " + std::to_string(cplab::oracle::kPairProbabilityCap));
	auto arcs = parse_arcs(arcs_text);
	for (auto [a, b] : arcs) {
		if (b > 2 * n) throw ValidationError("arc endpoint beyond 2n");
	}
	json doc{{"n", n}, {"enumerated", cplab::io::rational(cplab::oracle::exact_pair_probability(n, arcs))}};

	// Closed form, when the arcs form a valid pair (sorted by left endpoint, odd spans).
	std::sort(arcs.begin(), arcs.end());
	std::vector<std::uint32_t> x, k;
	bool odd_spans = true;
	for (auto [a, b] : arcs) {
		odd_spans = odd_spans && (b - a) % 2 == 1;
		x.push_back(a);
		k.push_back((b - a + 1) / 2);
	}
	if (odd_spans) {
		auto v = cplab::validate_pair(n, x, k);
		if (const auto* p = std::get_if<cplab::ValidPair>(&v)) {
			doc["formula"] = cplab::io::rational(cplab::match_probability(*p));
			doc["gap_profile"] = cplab::gap_profile(*p);
		} else {
			doc["rejected"] = cplab::to_string(std::get<cplab::PairRejection>(v));
		}
	} else {
		doc["rejected"] = "even_span";
	}
	Output out(out_path);
	out.stream() << doc.dump(2) << '\n';
	out.finish();
	return 0;
}

int cmd_oracle_quadruple(std::uint32_t n, const std::string& top, const std::string& bottom, const std::string& out_path) {
	if (n > cplab::oracle::kQuadrupleCap) throw ValidationError("--n exceeds " + std::to_string(cplab::oracle::kQuadrupleCap));
	auto t = parse_arcs(top), b = parse_arcs(bottom);
	std::sort(t.begin(), t.end());
	std::sort(b.begin(), b.end());
	cplab::Quadruple q;
	try {
		q = cplab::Quadruple::from_arcs(n, t, b);
	} catch (const std::invalid_argument& e) {
		throw ValidationError(e.what());
	}
	const auto profile = cplab::quadruple_profile(q);
	json doc{{"n", n},
			 {"good", cplab::is_good_quadruple(q)},
			 {"valid", cplab::oracle::is_valid_quadruple_small(q)},
			 {"f", profile.f},
			 {"g", profile.g}};
	Output out(out_path);
	out.stream() << doc.dump(2) << '\n';
	out.finish();
	return 0;
}

int cmd_count(const std::string& graph_path, const SamplingOptions& o, const std::string& pattern, bool induced, const std::string& out_path) {
	if (pattern.empty()) throw ValidationError("--pattern is required");
	const auto h = pattern_or_throw(pattern);
	cplab::CatalanPairGraph g;
	if (!graph_path.empty()) {
		std::ifstream in(graph_path);
		if (!in) throw std::runtime_error("cannot read graph file: " + graph_path);
		try {
			g = cplab::io::load_graph(json::parse(in));
		} catch (const json::exception& e) {
			throw ValidationError(std::string("graph file: ") + e.what());
		} catch (const std::invalid_argument& e) {
			throw ValidationError(std::string("graph file: ") + e.what());
		}
	} else {
		g = sample_graph(o);
	}
	const auto c = cplab::count_pattern_detailed(g, h, induced);
	json doc{{"n", g.n()},
			 {"edges", g.edge_count()},
			 {"pattern", pattern},
			 {"induced", induced},
			 {"automorphisms", h.automorphism_count()},
			 {"embeddings", c.embeddings},
			 {"count", c.copies}};
	Output out(out_path);
	out.stream() << doc.dump(2) << '\n';
	out.finish();
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Random Catalan-pair graphs: sampling, statistics, exact small-n oracle"};
	app.require_subcommand(1);

	std::string out_path;
	std::uint64_t seed = 0;
	try {
		seed = default_seed();
	} catch (const ValidationError& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}

	SamplingOptions sample_opts;
	sample_opts.seed = seed;
	auto* sample = app.add_subcommand("sample", "Sample one representative and emit it with its graph as JSON");
	add_sampling_options(sample, sample_opts);
	sample->add_option("--out", out_path, "Output path (default stdout)");

	ExperimentOptions exp_opts;
	exp_opts.seed = seed;
	auto* experiment = app.add_subcommand("experiment", "Run Monte Carlo trials over a list of sizes");
	experiment->add_option("--n", exp_opts.sizes, "Sizes: '100,200' or 'start:stop:step'");
	experiment->add_option("--trials", exp_opts.trials, "Trials per size");
	experiment->add_option("--seed", exp_opts.seed, "64-bit seed (default: $CPLAB_SEED or 0)");
	experiment->add_option("--model", exp_opts.model, "fair | biased:<p> | fixed:<m>");
	experiment->add_option("--metrics", exp_opts.metrics,
						   "Comma list: edges,isolated,isolated_by_m,components,degrees,spans:<a>:<b>,pattern,all");
	experiment->add_option("--format", exp_opts.format, "csv | json");
	experiment->add_option("--out", exp_opts.out, "Output path (default stdout)");
	experiment->add_option("--pattern", exp_opts.pattern, "Pattern edge list, e.g. '1-2,2-3'");
	experiment->add_flag("--induced", exp_opts.induced, "Count induced copies of the pattern");
	experiment->add_option("--threads", exp_opts.threads, "Worker threads (0 = hardware concurrency)");
	experiment->add_option("--algorithm", exp_opts.algorithm, "Edge detection: quadratic | sweep");

	std::uint32_t M = 10000;
	unsigned digits = 6;
	auto* gamma = app.add_subcommand("gamma", "Exact bracket on the isolated-vertex constant");
	gamma->add_option("--M", M, "Number of series terms (>= 2)");
	gamma->add_option("--digits", digits, "Decimal digits in the rendered bracket");
	gamma->add_option("--out", out_path, "Output path (default stdout)");

	auto* oracle = app.add_subcommand("oracle", "Exhaustive exact computations at small n");
	oracle->require_subcommand(1);
	std::uint32_t oracle_n = 2;
	std::string oracle_model = "fair", arcs, top, bottom;
	std::vector<std::string> oracle_patterns;
	bool oracle_induced = false;
	auto* expectations = oracle->add_subcommand("expectations", "Exact E[edges], E[isolated] (and pattern counts)");
	expectations->add_option("--n", oracle_n, "Size, at most 5");
	expectations->add_option("--model", oracle_model, "fair | biased:<p> | fixed:<m>");
	expectations->add_option("--pattern", oracle_patterns, "Pattern edge list (repeatable)");
	expectations->add_flag("--induced", oracle_induced, "Induced pattern counts");
	expectations->add_option("--out", out_path, "Output path (default stdout)");
	auto* probability = oracle->add_subcommand("probability", "Exact probability that a uniform matching contains given arcs");
	probability->add_option("--n", oracle_n, "Matching size, at most 10");
	probability->add_option("--arcs", arcs, "Arcs, e.g. '2-11,4-7'")->required();
	probability->add_option("--out", out_path, "Output path (default stdout)");
	auto* quadruple = oracle->add_subcommand("quadruple", "Good/valid check and free-point profile of a two-sided arc specification");
	quadruple->add_option("--n", oracle_n, "Size, at most 6");
	quadruple->add_option("--top", top, "Top arcs, e.g. '1-6'");
	quadruple->add_option("--bottom", bottom, "Bottom arcs, e.g. '3-8'");
	quadruple->add_option("--out", out_path, "Output path (default stdout)");

	SamplingOptions count_opts;
	count_opts.seed = seed;
	std::string graph_path, pattern;
	bool induced = false;
	auto* count = app.add_subcommand("count-subgraphs", "Count copies of a pattern in a supplied or sampled graph");
	count->add_option("--graph", graph_path, "Graph or representative JSON (as written by 'sample')");
	add_sampling_options(count, count_opts);
	count->add_option("--pattern", pattern, "Pattern edge list, e.g. '1-2,2-3'");
	count->add_flag("--induced", induced, "Count induced copies");
	count->add_option("--out", out_path, "Output path (default stdout)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	try {
		if (*sample) return cmd_sample(sample_opts, out_path);
		if (*experiment) return cmd_experiment(exp_opts);
		if (*gamma) return cmd_gamma(M, digits, out_path);
		if (*expectations) return cmd_oracle_expectations(oracle_n, oracle_model, oracle_patterns, oracle_induced, out_path);
		if (*probability) return cmd_oracle_probability(oracle_n, arcs, out_path);
		if (*quadruple) return cmd_oracle_quadruple(oracle_n, top, bottom, out_path);
		if (*count) return cmd_count(graph_path, count_opts, pattern, induced, out_path);
	} catch (const ValidationError& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const std::out_of_range& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
	return 1;
}
