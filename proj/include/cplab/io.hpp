#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cplab/catalan.hpp"
#include "cplab/graph.hpp"
#include "cplab/sampler.hpp"
#include "cplab/summary.hpp"

namespace cplab::io {

using nlohmann::json;

inline json rational(const Rational& r) { return to_fraction_string(r); }

/// Shortest decimal text that round-trips the double.
inline std::string number(double v) {
	char buf[32];
	const auto res = std::to_chars(buf, buf + sizeof buf, v);
	return std::string(buf, res.ptr);
}

/// {n, colors: "RRB...", top: balanced word, bottom: balanced word}
inline json representative_to_json(const ColoredRepresentative& rep) {
	return json{{"n", rep.n()}, {"colors", to_string(rep.colors())}, {"top", rep.top().to_balanced()}, {"bottom", rep.bottom().to_balanced()}};
}

inline ColoredRepresentative representative_from_json(const json& j) {
	return ColoredRepresentative(parse_coloring(j.at("colors").get<std::string>()), decode_balanced(j.at("top").get<std::string>()),
								 decode_balanced(j.at("bottom").get<std::string>()));
}

/// {n, sides: ["top"|"bottom", ...], arcs: [[a,b], ...], edges: [[u,v], ...]}; vertex ids are 1-based.
inline json graph_to_json(const CatalanPairGraph& g) {
	json sides = json::array(), arcs = json::array(), edges = json::array();
	for (auto s : g.sides()) sides.push_back(s == Side::top ? "top" : "bottom");
	for (const auto& [a, b] : g.arcs()) arcs.push_back({a, b});
	for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
	return json{{"n", g.n()}, {"sides", sides}, {"arcs", arcs}, {"edges", edges}};
}

inline CatalanPairGraph graph_from_json(const json& j) {
	std::vector<Side> sides;
	for (const auto& s : j.at("sides")) {
		const auto text = s.get<std::string>();
		if (text == "top") sides.push_back(Side::top);
		else if (text == "bottom") sides.push_back(Side::bottom);
		else throw std::invalid_argument("graph json: side must be 'top' or 'bottom'");
	}
	std::vector<Arc> arcs;
	for (const auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<std::uint32_t>(), a.at(1).get<std::uint32_t>());
	std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
	for (const auto& e : j.at("edges")) {
		const auto u = e.at(0).get<std::uint32_t>(), v = e.at(1).get<std::uint32_t>();
		if (u == 0 || v == 0) throw std::invalid_argument("graph json: vertex ids are 1-based");
		edges.emplace_back(u - 1, v - 1);
	}
	if (j.contains("n") && j.at("n").get<std::size_t>() != sides.size()) throw std::invalid_argument("graph json: n disagrees with sides");
	return CatalanPairGraph(std::move(sides), std::move(arcs), edges);
}

/// Accepts either a graph document or a representative document (optionally nested under "representative").
inline CatalanPairGraph load_graph(const json& j) {
	if (j.contains("edges")) return graph_from_json(j);
	if (j.contains("graph")) return graph_from_json(j.at("graph"));
	if (j.contains("representative")) return build_graph(representative_from_json(j.at("representative")));
	return build_graph(representative_from_json(j));
}

template <class Map>
json histogram_to_json(const Map& h) {
	json out = json::object();
	for (const auto& [key, count] : h) out[std::to_string(key)] = count;
	return out;
}

template <class Map>
void write_histogram_csv(std::ostream& os, const std::string& key_column, const Map& h) {
	os << key_column << ",count\n";
	for (const auto& [key, count] : h) os << key << ',' << count << '\n';
}

inline json summary_to_json(const SummaryStats& s) {
	json metrics = json::array();
	for (const auto& m : s.metrics) {
		metrics.push_back({{"metric", m.metric}, {"mean", m.mean}, {"sd", m.sd}, {"stderr", m.stderr_}, {"trials", m.trials}});
	}
	return json{{"n", s.n}, {"trials", s.trials}, {"metrics", metrics}};
}

inline void write_summary_csv_header(std::ostream& os) { os << "n,metric,mean,sd,stderr,trials\n"; }

inline void write_summary_csv_rows(std::ostream& os, const SummaryStats& s) {
	for (const auto& m : s.metrics) {
		os << s.n << ',' << m.metric << ',' << number(m.mean) << ',' << number(m.sd) << ',' << number(m.stderr_) << ',' << m.trials << '\n';
	}
}

} // namespace cplab::io
