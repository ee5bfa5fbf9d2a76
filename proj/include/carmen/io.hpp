#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "carmen/entropy.hpp"
#include "carmen/game.hpp"
#include "carmen/halving.hpp"
#include "carmen/kset.hpp"
#include "carmen/query.hpp"
#include "carmen/strategy.hpp"

namespace carmen::io {

// All file formats are JSON with 1-based city indices and b_1..b_n bitstrings.
// Serialization is deterministic (insertion-ordered keys, fixed layout), so
// identical inputs produce byte-identical reports.
using json = nlohmann::ordered_json;

json parse(const std::string& text);           // input_error on bad JSON
json load_file(const std::filesystem::path&);  // input_error on IO/parse failure
void write_file(const std::filesystem::path&, const std::string& contents);
std::string dump(const json& j);               // 2-space indent, trailing newline

// {"n": int, "kind": "table"|"k_halving", "tables": [...], "k_hex": "..."}
BobStrategy strategy_from_json(const json& j);
json strategy_to_json(const BobStrategy& s);
// Compact descriptor for embedding in reports (kind plus k_hex when halving).
json strategy_descriptor(const BobStrategy& s);

// {"n": int, "k_hex": "..."}
KSet kset_from_json(const json& j);
json kset_to_json(const KSet& k);

// {"n": int, "t": int, "root": {"query":i,"if0":...,"if1":...} | {"leaf":0|1}}
DecisionTree tree_from_json(const json& j);
json tree_to_json(const DecisionTree& t);

// {"atoms": [{"p": "num/den", "tree": <tree>}, ...]}
RandomizedAlgorithm algorithm_from_json(const json& j);
json algorithm_to_json(const RandomizedAlgorithm& a);

// Report builders (CLI and bindings share these).
json outcome_to_json(const GameOutcome& o);
json complexity_report(const BobStrategy& s, const ComplexityResult& r);
json game_value_report(const GameValue& v);
json degree_report(const DegreeReport& r);
json min_max_degree_report(const MinMaxDegree& r);
json halving_report(const KSet& k, const HalvingReport& r);
json entropy_report(const BobStrategy& s, const PosteriorTable& t, double h_bits);
json reduction_report(const ReductionReport& r);
json hard_distribution_report(const KSet& k, const HardDistribution& d);
json hard_samples_report(const KSet& k, std::uint64_t seed,
                         const std::vector<ClueString>& samples);

// Uniform CSV flattening: one "key,value" row per JSON leaf in depth-first
// order, array elements addressed as path[i].
std::string to_csv(const json& report);

}  // namespace carmen::io
