#include "carmen/io.hpp"

#include <fstream>
#include <sstream>

namespace carmen {

Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw input_error("bad rational literal: " + s);
  }
}

}  // namespace carmen

namespace carmen::io {

namespace {

int require_int(const json& j, const char* key, int lo, int hi) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw input_error(std::string("missing integer field \"") + key + "\"");
  const auto v = j[key].get<std::int64_t>();
  if (v < lo || v > hi)
    throw input_error(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(v);
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw input_error(std::string("missing string field \"") + key + "\"");
  return j[key].get<std::string>();
}

json permutation_to_json(const Permutation& pi) { return json(pi.order); }

}  // namespace

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("invalid JSON");
  return j;
}

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const input_error&) {
    throw input_error("invalid JSON in " + path.string());
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path.string());
  out << contents;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

BobStrategy strategy_from_json(const json& j) {
  const int n = require_int(j, "n", 2, 31);
  const std::string kind = require_string(j, "kind");
  if (kind == "k_halving") {
    return BobStrategy::halving(KSet::from_hex(n, require_string(j, "k_hex")));
  }
  if (kind != "table") throw input_error("strategy kind must be \"table\" or \"k_halving\"");
  if (!j.contains("tables") || !j["tables"].is_array())
    throw input_error("table strategy needs a \"tables\" array");
  std::vector<BobStrategy::Table> tables(static_cast<std::size_t>(n - 1));
  for (const auto& tj : j["tables"]) {
    const int t = require_int(tj, "t", 1, n - 1);
    auto& table = tables[static_cast<std::size_t>(t - 1)];
    if (!tj.contains("entries") || !tj["entries"].is_array())
      throw input_error("strategy table needs an \"entries\" array");
    for (const auto& ej : tj["entries"]) {
      if (!ej.contains("prefix") || !ej["prefix"].is_array())
        throw input_error("table entry needs a \"prefix\" array");
      BobStrategy::Prefix prefix;
      for (const auto& c : ej["prefix"]) prefix.push_back(c.get<int>());
      const int bit = require_int(ej, "bit", 0, 1);
      if (!table.emplace(std::move(prefix), static_cast<std::uint8_t>(bit)).second)
        throw input_error("duplicate prefix in strategy table t=" + std::to_string(t));
    }
  }
  return BobStrategy::table_strategy(n, std::move(tables));
}

json strategy_to_json(const BobStrategy& s) {
  json j;
  j["n"] = s.n();
  if (s.kind() == BobStrategy::Kind::KHalving) {
    j["kind"] = "k_halving";
    j["k_hex"] = s.kset().hex();
    return j;
  }
  j["kind"] = "table";
  json tables = json::array();
  for (int t = 1; t < s.n(); ++t) {
    json tj;
    tj["t"] = t;
    json entries = json::array();
    for (const auto& [prefix, bit] : s.tables()[static_cast<std::size_t>(t - 1)]) {
      json ej;
      ej["prefix"] = prefix;
      ej["bit"] = static_cast<int>(bit);
      entries.push_back(std::move(ej));
    }
    tj["entries"] = std::move(entries);
    tables.push_back(std::move(tj));
  }
  j["tables"] = std::move(tables);
  return j;
}

json strategy_descriptor(const BobStrategy& s) {
  json d;
  d["n"] = s.n();
  d["kind"] = s.kind() == BobStrategy::Kind::KHalving ? "k_halving" : "table";
  if (s.kind() == BobStrategy::Kind::KHalving) d["k_hex"] = s.kset().hex();
  return d;
}

KSet kset_from_json(const json& j) {
  const int n = require_int(j, "n", 1, 24);
  return KSet::from_hex(n, require_string(j, "k_hex"));
}

json kset_to_json(const KSet& k) {
  json j;
  j["n"] = k.n();
  j["k_hex"] = k.hex();
  return j;
}

namespace {

int tree_nodes_from_json(const json& nj, int n, std::vector<DecisionTree::Node>& arena) {
  const int self = static_cast<int>(arena.size());
  arena.push_back({});
  if (nj.contains("leaf")) {
    arena[static_cast<std::size_t>(self)] =
        DecisionTree::Node{0, -1, -1, require_int(nj, "leaf", 0, 1)};
    return self;
  }
  const int query = require_int(nj, "query", 1, n);
  if (!nj.contains("if0") || !nj.contains("if1"))
    throw input_error("tree node needs \"if0\" and \"if1\" children");
  const int c0 = tree_nodes_from_json(nj["if0"], n, arena);
  const int c1 = tree_nodes_from_json(nj["if1"], n, arena);
  arena[static_cast<std::size_t>(self)] = DecisionTree::Node{query, c0, c1, -1};
  return self;
}

json tree_node_to_json(const DecisionTree& t, int at) {
  const auto& node = t.nodes()[static_cast<std::size_t>(at)];
  json j;
  if (node.is_leaf()) {
    j["leaf"] = node.leaf;
    return j;
  }
  j["query"] = node.query;
  j["if0"] = tree_node_to_json(t, node.if0);
  j["if1"] = tree_node_to_json(t, node.if1);
  return j;
}

}  // namespace

DecisionTree tree_from_json(const json& j) {
  const int n = require_int(j, "n", 1, 31);
  const int t = require_int(j, "t", 0, n);
  if (!j.contains("root")) throw input_error("tree needs a \"root\" node");
  std::vector<DecisionTree::Node> arena;
  tree_nodes_from_json(j["root"], n, arena);
  return DecisionTree(n, t, std::move(arena));
}

json tree_to_json(const DecisionTree& t) {
  json j;
  j["n"] = t.n();
  j["t"] = t.t();
  j["root"] = tree_node_to_json(t, 0);
  return j;
}

RandomizedAlgorithm algorithm_from_json(const json& j) {
  if (!j.contains("atoms") || !j["atoms"].is_array() || j["atoms"].empty())
    throw input_error("algorithm needs a non-empty \"atoms\" array");
  std::vector<RandomizedAlgorithm::Atom> atoms;
  for (const auto& aj : j["atoms"]) {
    if (!aj.contains("tree")) throw input_error("algorithm atom needs a \"tree\"");
    atoms.push_back({tree_from_json(aj["tree"]), rat_parse(require_string(aj, "p"))});
  }
  return RandomizedAlgorithm(std::move(atoms));
}

json algorithm_to_json(const RandomizedAlgorithm& a) {
  json j;
  json atoms = json::array();
  for (const auto& atom : a.atoms()) {
    json aj;
    aj["p"] = rat_str(atom.p);
    aj["tree"] = tree_to_json(atom.tree);
    atoms.push_back(std::move(aj));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

json outcome_to_json(const GameOutcome& o) {
  json j;
  j["pi"] = permutation_to_json(o.pi);
  j["z"] = o.z;
  j["b"] = o.b.str();
  j["suspects"] = o.suspects;
  j["cost"] = o.cost;
  return j;
}

json complexity_report(const BobStrategy& s, const ComplexityResult& r) {
  json j;
  j["n"] = r.n;
  j["strategy"] = strategy_descriptor(s);
  j["complexity"] = r.complexity;
  j["witness"] = {{"pi", permutation_to_json(r.witness_pi)}, {"z", r.witness_z}};
  return j;
}

json game_value_report(const GameValue& v) {
  json j;
  j["n"] = v.n;
  j["complexity"] = v.complexity;
  j["strategies_examined"] = v.strategies_examined;
  j["witness_index"] = v.witness_index;
  if (v.witness) j["witness_strategy"] = strategy_to_json(*v.witness);
  return j;
}

json degree_report(const DegreeReport& r) {
  json j;
  j["n"] = r.n;
  j["size"] = r.size;
  j["max_degree"] = r.max_degree;
  j["witness"] = ClueString{r.n, r.witness}.str();
  json hist;
  for (const auto& [d, c] : r.histogram) hist[std::to_string(d)] = c;
  j["histogram"] = std::move(hist);
  return j;
}

json min_max_degree_report(const MinMaxDegree& r) {
  json j;
  j["n"] = r.n;
  j["size_threshold"] = r.size_threshold;
  j["mode"] = r.exact ? "exact" : "sampled";
  j["value"] = r.value;
  if (!r.exact) j["value_is_upper_bound"] = true;
  j["witness"] = kset_to_json(r.witness);
  j["witness_size"] = r.witness.size();
  j[r.exact ? "sets_examined" : "samples"] = r.examined;
  return j;
}

json halving_report(const KSet& k, const HalvingReport& r) {
  json j;
  j["n"] = r.n;
  j["k_hex"] = k.hex();
  j["k_size"] = r.k_size;
  j["max_degree"] = r.max_degree;
  j["complexity"] = r.complexity;
  j["complexity_witness"] = {{"pi", permutation_to_json(r.complexity_witness_pi)},
                             {"z", r.complexity_witness_z}};
  json checks;
  checks["complexity_le_degree"] = r.complexity_le_degree;
  checks["halving_invariant"] = r.halving_invariant;
  checks["endgame_pair"] = r.endgame_pair;
  checks["final_in_k"] = r.final_in_k;
  checks["suspects_are_neighbors"] = r.suspects_are_neighbors;
  j["checks"] = std::move(checks);
  j["pass"] = r.pass();
  if (r.counterexample) {
    json ce;
    ce["pi"] = permutation_to_json(r.counterexample->pi);
    ce["z"] = r.counterexample->z;
    ce["check"] = r.counterexample->check;
    ce["detail"] = r.counterexample->detail;
    j["counterexample"] = std::move(ce);
  }
  return j;
}

json entropy_report(const BobStrategy& s, const PosteriorTable& t, double h_bits) {
  json j;
  j["n"] = t.n;
  j["strategy"] = strategy_descriptor(s);
  j["H_bits"] = h_bits;
  json rows = json::array();
  for (const auto& [code, row] : t.rows) {
    json rj;
    rj["b"] = ClueString{t.n, code}.str();
    rj["p"] = rat_str(Rat(row.count, t.total));
    json posterior;
    for (const auto& [city, c] : row.final_counts)
      posterior[std::to_string(city)] = rat_str(Rat(c, row.count));
    rj["posterior"] = std::move(posterior);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

json reduction_report(const ReductionReport& r) {
  json j;
  j["n"] = r.n;
  j["t"] = r.t;
  j["K_size"] = r.k_size;
  j["premise"] = r.premise;
  if (r.premise) {
    j["search_success"] = rat_str(r.search_success);
    j["search_success_value"] = rat_double(r.search_success);
    j["parity_success"] = rat_str(r.parity_success);
    j["eq1_ok"] = r.eq_pairing_ok;
    j["eq2_ok"] = r.eq_indicator_ok;
    j["pass"] = r.pass();
  }
  return j;
}

json hard_distribution_report(const KSet& k, const HardDistribution& d) {
  json j;
  j["n"] = d.n;
  j["k_hex"] = k.hex();
  j["mode"] = "exact";
  j["denominator"] = d.total;
  json rows = json::array();
  for (const auto& [code, count] : d.counts) {
    json rj;
    rj["b"] = ClueString{d.n, code}.str();
    rj["p"] = rat_str(Rat(count, d.total));
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

json hard_samples_report(const KSet& k, std::uint64_t seed,
                         const std::vector<ClueString>& samples) {
  json j;
  j["n"] = k.n();
  j["k_hex"] = k.hex();
  j["mode"] = "sampled";
  j["seed"] = seed;
  j["count"] = samples.size();
  json rows = json::array();
  bool all_in = true;
  for (const auto& b : samples) {
    rows.push_back(b.str());
    all_in &= k.contains(b);
  }
  j["samples"] = std::move(rows);
  j["all_in_k"] = all_in;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) flatten(value, path + "[" + std::to_string(i++) + "]", out);
  } else {
    const std::string v = j.is_string() ? j.get<std::string>() : j.dump();
    out += csv_escape(path) + "," + csv_escape(v) + "\n";
  }
}

}  // namespace

std::string to_csv(const json& report) {
  std::string out = "key,value\n";
  flatten(report, "", out);
  return out;
}

}  // namespace carmen::io
