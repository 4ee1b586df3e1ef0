#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "cplab/experiment.hpp"

using namespace cplab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
	const auto dir = fs::temp_directory_path() / ("cplab_test_" + std::to_string(::getpid())) / name;
	fs::remove_all(dir);
	fs::create_directories(dir);
	return dir;
}

std::string slurp(const fs::path& p) {
	std::ifstream in(p, std::ios::binary);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

int run_cli(const std::string& args, const std::string& env = "") {
	const std::string cmd = env + " \"" CPLAB_CLI_PATH "\" " + args + " >/dev/null 2>&1";
	const int status = std::system(cmd.c_str());
	return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_cli_to(const std::string& args, const fs::path& stdout_file, const std::string& env = "") {
	const std::string cmd = env + " \"" CPLAB_CLI_PATH "\" " + args + " >\"" + stdout_file.string() + "\" 2>/dev/null";
	const int status = std::system(cmd.c_str());
	return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ExperimentSpec small_spec() {
	ExperimentSpec spec;
	spec.n_values = {20, 35};
	spec.trials = 12;
	spec.seed = 99;
	spec.metrics = parse_metrics("all,spans:1:3");
	spec.pattern = PatternGraph::parse("1-2,2-3");
	spec.metrics.pattern = true;
	spec.induced = true;
	return spec;
}

std::string records_csv(const ExperimentSpec& spec) {
	std::ostringstream os;
	write_records_csv_header(os, spec);
	run_experiment(spec, [&](const SizeResult& s) {
		write_records_csv_rows(os, spec, s.records);
		if (s.summary) io::write_summary_csv_rows(os, *s.summary);
	});
	return os.str();
}

} // namespace

TEST(ParseMetrics, Names) {
	const auto all = parse_metrics("all");
	EXPECT_TRUE(all.edges && all.isolated && all.isolated_by_m && all.components && all.degrees);
	EXPECT_FALSE(all.pattern);
	EXPECT_FALSE(all.spans.has_value());
	const auto spans = parse_metrics("edges,spans:2:5");
	EXPECT_TRUE(spans.edges);
	EXPECT_EQ(spans.spans, (std::pair<std::uint32_t, std::uint32_t>{2, 5}));
	EXPECT_THROW(parse_metrics("edges,bogus"), std::invalid_argument);
	EXPECT_THROW(parse_metrics("spans:5:2"), std::invalid_argument);
	EXPECT_THROW(parse_metrics("spans:3"), std::invalid_argument);
}

TEST(Experiment, SpecValidation) {
	ExperimentSpec spec;
	EXPECT_THROW(spec.validate(), std::invalid_argument);
	spec.n_values = {5};
	spec.trials = 0;
	EXPECT_THROW(spec.validate(), std::invalid_argument);
	spec.trials = 3;
	spec.model = FixedRed{6};
	EXPECT_THROW(spec.validate(), std::invalid_argument);
	spec.model = Fair{};
	spec.metrics.pattern = true;
	EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(Experiment, CsvHeader) {
	std::ostringstream os;
	ExperimentSpec spec;
	spec.metrics = parse_metrics("edges,isolated,components");
	write_records_csv_header(os, spec);
	EXPECT_EQ(os.str(), "n,trial,edges,isolated,largest_component,second_component,seed,model\n");
	os.str("");
	write_records_csv_header(os, small_spec());
	EXPECT_EQ(os.str(), "n,trial,edges,isolated,largest_component,second_component,spans_1_3,induced_pattern_count,seed,model\n");
}

TEST(Experiment, TrialIsReproducibleFromSeedAndIndex) {
	const auto spec = small_spec();
	std::vector<RunRecord> records = run_trials(spec, 35);
	ASSERT_EQ(records.size(), 12U);
	for (std::uint32_t t = 0; t < spec.trials; ++t) {
		const auto again = run_trial(spec, 35, t);
		EXPECT_EQ(again.trial, t);
		EXPECT_EQ(again.edges, records[t].edges);
		EXPECT_EQ(again.pattern_count, records[t].pattern_count);
		EXPECT_EQ(again.degree_histogram, records[t].degree_histogram);
	}
}

TEST(Experiment, OutputIndependentOfThreadCount) {
	auto spec = small_spec();
	spec.threads = 1;
	const auto serial = records_csv(spec);
	spec.threads = 4;
	EXPECT_EQ(records_csv(spec), serial);
	spec.algorithm = EdgeAlgorithm::sweep;
	EXPECT_EQ(records_csv(spec), serial);
	spec.seed = 100;
	EXPECT_NE(records_csv(spec), serial);
}

TEST(Experiment, SizeOneIsForced) {
	ExperimentSpec spec;
	spec.n_values = {1};
	spec.trials = 10000;
	spec.metrics = parse_metrics("edges,isolated");
	std::optional<SummaryStats> summary;
	run_experiment(spec, [&](const SizeResult& s) { summary = s.summary; });
	ASSERT_TRUE(summary);
	EXPECT_EQ(summary->at("edges").mean, 0);
	EXPECT_EQ(summary->at("isolated").mean, 1);
	EXPECT_EQ(summary->at("isolated").sd, 0);
}

TEST(Experiment, SizeTwoEdgeMean) {
	ExperimentSpec spec;
	spec.n_values = {2};
	spec.trials = 1000000;
	spec.seed = 5;
	spec.metrics = parse_metrics("edges");
	std::optional<SummaryStats> summary;
	run_experiment(spec, [&](const SizeResult& s) { summary = s.summary; });
	const auto& e = summary->at("edges");
	EXPECT_NEAR(e.mean, 0.25, 4 * e.stderr_);
}

TEST(Experiment, JsonRecordCarriesHistograms) {
	auto spec = small_spec();
	spec.trials = 2;
	run_experiment(spec, [&](const SizeResult& s) {
		const auto j = size_result_to_json(spec, s);
		EXPECT_EQ(j.at("records").size(), 2U);
		EXPECT_TRUE(j.at("records")[0].contains("degrees"));
		EXPECT_TRUE(j.at("records")[0].contains("induced_pattern_count"));
		EXPECT_TRUE(j.contains("degree_totals"));
		EXPECT_TRUE(j.contains("summary"));
	});
}

TEST(Cli, ExperimentFilesAreDeterministic) {
	const auto dir = scratch("determinism");
	fs::create_directories(dir / "a");
	fs::create_directories(dir / "b");
	const std::string args = "experiment --n 30:60:15 --trials 8 --seed 7 --metrics all,spans:1:2 --pattern 1-2,2-3 --induced --threads 3";
	ASSERT_EQ(run_cli(args + " --out \"" + (dir / "a" / "rec.csv").string() + "\""), 0);
	ASSERT_EQ(run_cli(args + " --out \"" + (dir / "b" / "rec.csv").string() + "\""), 0);
	for (const char* file : {"rec.csv", "rec.summary.csv", "degrees_30.csv", "degrees_45.csv", "degrees_60.csv", "isolated_by_m_45.csv"}) {
		ASSERT_TRUE(fs::exists(dir / "a" / file)) << file;
		EXPECT_EQ(slurp(dir / "a" / file), slurp(dir / "b" / file)) << file;
	}
	const auto records = slurp(dir / "a" / "rec.csv");
	EXPECT_EQ(records.substr(0, records.find('\n')),
			  "n,trial,edges,isolated,largest_component,second_component,spans_1_2,induced_pattern_count,seed,model");
	EXPECT_EQ(std::count(records.begin(), records.end(), '\n'), 1 + 3 * 8);
	EXPECT_EQ(slurp(dir / "a" / "degrees_30.csv").substr(0, 13), "degree,count\n");
	EXPECT_EQ(slurp(dir / "a" / "rec.summary.csv").substr(0, 31), "n,metric,mean,sd,stderr,trials\n");
}

TEST(Cli, SeedFromEnvironment) {
	const auto dir = scratch("env");
	ASSERT_EQ(run_cli_to("sample --n 40", dir / "env.json", "CPLAB_SEED=123"), 0);
	ASSERT_EQ(run_cli_to("sample --n 40 --seed 123", dir / "flag.json"), 0);
	ASSERT_EQ(run_cli_to("sample --n 40 --seed 124", dir / "other.json", "CPLAB_SEED=123"), 0);
	EXPECT_EQ(slurp(dir / "env.json"), slurp(dir / "flag.json"));
	EXPECT_NE(slurp(dir / "other.json"), slurp(dir / "flag.json"));
}

TEST(Cli, SampleRoundTripsThroughCountSubgraphs) {
	const auto dir = scratch("count");
	ASSERT_EQ(run_cli("sample --n 60 --seed 3 --out \"" + (dir / "g.json").string() + "\""), 0);
	ASSERT_EQ(run_cli_to("count-subgraphs --graph \"" + (dir / "g.json").string() + "\" --pattern 1-2", dir / "c.json"), 0);
	const auto sample = io::json::parse(slurp(dir / "g.json"));
	const auto counted = io::json::parse(slurp(dir / "c.json"));
	EXPECT_EQ(sample.at("graph").at("edges").size(), counted.at("count").get<std::size_t>());
}

TEST(Cli, GammaAndOracleOutputs) {
	const auto dir = scratch("gamma");
	ASSERT_EQ(run_cli_to("gamma --M 2", dir / "g.json"), 0);
	const auto g = io::json::parse(slurp(dir / "g.json"));
	EXPECT_EQ(g.at("lower"), "0.281250");
	EXPECT_EQ(g.at("upper"), "0.531250");
	EXPECT_EQ(g.at("width"), "1/4");
	ASSERT_EQ(run_cli_to("oracle probability --n 8 --arcs 2-11,4-7", dir / "p.json"), 0);
	EXPECT_EQ(io::json::parse(slurp(dir / "p.json")).at("enumerated"), "1/143");
	ASSERT_EQ(run_cli_to("oracle expectations --n 2", dir / "e.json"), 0);
	const auto e = io::json::parse(slurp(dir / "e.json"));
	EXPECT_EQ(e.at("expected_edges"), "1/4");
	EXPECT_EQ(e.at("expected_isolated"), "3/2");
	ASSERT_EQ(run_cli_to("oracle quadruple --n 4 --top 1-6 --bottom 3-8", dir / "q.json"), 0);
	const auto q = io::json::parse(slurp(dir / "q.json"));
	EXPECT_EQ(q.at("good"), true);
	EXPECT_EQ(q.at("valid"), true);
}

TEST(Cli, ExitCodes) {
	EXPECT_EQ(run_cli("gamma --M 10"), 0);
	EXPECT_EQ(run_cli("gamma --M 1"), 2);
	EXPECT_EQ(run_cli("experiment --n 10 --trials 0"), 2);
	EXPECT_EQ(run_cli("experiment --n 10 --metrics bogus"), 2);
	EXPECT_EQ(run_cli("experiment --n 10 --model fixed:11"), 2);
	EXPECT_EQ(run_cli("experiment --n 10 --model biased:2"), 2);
	EXPECT_EQ(run_cli("experiment --n 10 --pattern 1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-9"), 2);
	EXPECT_EQ(run_cli("experiment --n 10 --format xml"), 2);
	EXPECT_EQ(run_cli("oracle expectations --n 6"), 2);
	EXPECT_EQ(run_cli("sample --n 10 --bogus-flag"), 2);
	EXPECT_EQ(run_cli("count-subgraphs --graph /nonexistent/g.json --pattern 1-2"), 1);
	EXPECT_EQ(run_cli("experiment --n 10 --trials 2 --out /nonexistent/dir/rec.csv"), 1);
}
