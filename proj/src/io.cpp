#include "mcpp/io.hpp"

#include <json.hpp>

#include <set>

namespace mcpp {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where + ": expected a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ValidationError(where + ": unknown key \"" + it.key() + "\"");
}

Rat rational_field(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(where + ": " + e.what());
  }
  throw ValidationError(where + ": rationals must be integers or \"p/q\" strings");
}

Mono mono_field(const json& v, const std::string& where) {
  if (!v.is_array()) throw ValidationError(where + ": expected an index array");
  Mono m;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ValidationError(where + ": indices must be integers");
    m.push_back(x.get<int>());
  }
  return sorted_mono(std::move(m));
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  const json j = parse_or_throw(text);
  reject_unknown_keys(j, {"n", "blocks", "terms"}, "instance");
  if (!j.contains("n") || !j.contains("blocks"))
    throw ValidationError("instance: \"n\" and \"blocks\" are required");

  Instance inst;
  if (!j["n"].is_number_integer()) throw ValidationError("instance: \"n\" must be an integer");
  inst.partition.n = j["n"].get<int>();
  if (!j["blocks"].is_array()) throw ValidationError("instance: \"blocks\" must be an array");
  for (const auto& b : j["blocks"]) {
    const Mono blk = mono_field(b, "instance block");
    inst.partition.blocks.emplace_back(blk.begin(), blk.end());
  }
  if (j.contains("terms")) {
    if (!j["terms"].is_array()) throw ValidationError("instance: \"terms\" must be an array");
    for (const auto& t : j["terms"]) {
      reject_unknown_keys(t, {"vars", "coef"}, "term");
      if (!t.contains("vars") || !t.contains("coef"))
        throw ValidationError("term: \"vars\" and \"coef\" are required");
      inst.terms.push_back({mono_field(t["vars"], "term vars"), rational_field(t["coef"], "term coef")});
    }
  }
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.partition.n;
  j["blocks"] = json::array();
  for (const auto& b : inst.partition.blocks) j["blocks"].push_back(b);
  j["terms"] = json::array();
  for (const auto& t : inst.terms)
    j["terms"].push_back({{"vars", t.vars}, {"coef", to_string(t.coef)}});
  return j.dump(2);
}

InequalityFile parse_inequality_json(const std::string& text) {
  const json j = parse_or_throw(text);
  reject_unknown_keys(j, {"coords", "a", "delta", "space"}, "inequality");
  for (const char* key : {"coords", "a", "delta", "space"})
    if (!j.contains(key))
      throw ValidationError(std::string("inequality: \"") + key + "\" is required");

  InequalityFile f;
  if (!j["coords"].is_array()) throw ValidationError("inequality: \"coords\" must be an array");
  for (const auto& c : j["coords"]) {
    reject_unknown_keys(c, {"vars"}, "coordinate");
    if (!c.contains("vars")) throw ValidationError("coordinate: \"vars\" is required");
    f.labels.push_back(mono_field(c["vars"], "coordinate vars"));
  }
  if (!j["a"].is_array() || j["a"].size() != f.labels.size())
    throw ValidationError("inequality: \"a\" must match \"coords\" in length");
  for (const auto& v : j["a"]) f.a.push_back(rational_field(v, "inequality a"));
  f.delta = rational_field(j["delta"], "inequality delta");
  f.space = j["space"].is_string() ? j["space"].get<std::string>() : "";
  if (f.space != "JH" && f.space != "JHleq" && f.space != "MP")
    throw ValidationError("inequality: \"space\" must be JH, JHleq or MP");
  return f;
}

std::string inequality_to_json(const InequalityFile& f) {
  json j;
  j["coords"] = json::array();
  for (const auto& m : f.labels) j["coords"].push_back({{"vars", m}});
  j["a"] = json::array();
  for (const auto& v : f.a) j["a"].push_back(to_string(v));
  j["delta"] = to_string(f.delta);
  j["space"] = f.space;
  return j.dump(2);
}

std::string report_to_json(const SolveReport& r) {
  json j;
  j["optimum"] = to_string(r.optimum);
  j["argmax"] = r.argmax.x;
  j["method"] = r.method;
  j["acyclic"] = r.acyclic;
  j["stats"] = {{"hypergraph_rank", r.stats.hypergraph_rank},
                {"max_block_size", r.stats.max_block_size},
                {"family_size", r.stats.family_size},
                {"equality_rows", r.stats.equality_rows},
                {"inequality_rows", r.stats.inequality_rows},
                {"pivots", r.stats.pivots},
                {"wall_seconds", r.stats.wall_seconds}};
  return j.dump(2);
}

SolveReport report_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  reject_unknown_keys(j, {"optimum", "argmax", "method", "acyclic", "stats"}, "report");
  SolveReport r;
  r.optimum = rational_field(j.at("optimum"), "report optimum");
  for (const auto& v : j.at("argmax")) r.argmax.x.push_back(v.get<int>());
  r.method = j.at("method").get<std::string>();
  r.acyclic = j.at("acyclic").get<bool>();
  const json& s = j.at("stats");
  r.stats.hypergraph_rank = s.at("hypergraph_rank").get<size_t>();
  r.stats.max_block_size = s.at("max_block_size").get<size_t>();
  r.stats.family_size = s.at("family_size").get<size_t>();
  r.stats.equality_rows = s.at("equality_rows").get<size_t>();
  r.stats.inequality_rows = s.at("inequality_rows").get<size_t>();
  r.stats.pivots = s.at("pivots").get<long>();
  r.stats.wall_seconds = s.at("wall_seconds").get<double>();
  return r;
}

std::string report_to_text(const SolveReport& r) {
  std::ostringstream os;
  os << "optimum: " << to_string(r.optimum) << "\n";
  os << "argmax:";
  for (int v : r.argmax.x) os << ' ' << v;
  os << "\nmethod: " << r.method << "\n";
  os << "acyclic: " << (r.acyclic ? "true" : "false") << "\n";
  os << "rank: " << r.stats.hypergraph_rank << ", max block: " << r.stats.max_block_size
     << ", family size: " << r.stats.family_size << "\n";
  os << "rows: " << r.stats.equality_rows << " equalities, " << r.stats.inequality_rows
     << " inequalities; pivots: " << r.stats.pivots << "; wall: " << r.stats.wall_seconds
     << "s\n";
  return os.str();
}

}  // namespace mcpp
