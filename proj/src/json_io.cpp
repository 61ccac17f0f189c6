#include "mlsa/json_io.hpp"

#include <fstream>

#include "mlsa/error.hpp"

namespace mlsa {

namespace {

std::vector<ElementSet> sets_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorKind::kParse, std::string("missing array '") + key + "'");
  }
  std::vector<ElementSet> sets;
  for (const auto& raw : j.at(key)) {
    if (!raw.is_array()) throw Error(ErrorKind::kParse, std::string("'") + key + "' entry is not an array");
    ElementSet s;
    for (const auto& e : raw) {
      if (!e.is_number_integer()) throw Error(ErrorKind::kParse, "set element is not an integer");
      s.push_back(e.get<Element>());
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

}  // namespace

nlohmann::json family_to_json(const SetFamily& f) {
  return {{"ground_size", f.ground_size()}, {"maximal_sets", f.maximal_sets()}};
}

SetFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ground_size") || !j.at("ground_size").is_number_integer()) {
    throw Error(ErrorKind::kParse, "family JSON needs an integer 'ground_size'");
  }
  return family_from_sets(j.at("ground_size").get<int>(), sets_from_json(j, "maximal_sets"));
}

nlohmann::json packing_to_json(const Packing& a) {
  return {{"sets", a.canonical_sets()}, {"weight", a.weight()}};
}

Packing packing_from_json(const nlohmann::json& j, int ground_size) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "packing JSON must be an object");
  Packing a = packing_from_sets(ground_size, sets_from_json(j, "sets"));
  if (j.contains("weight")) {
    if (!j.at("weight").is_number_integer() || j.at("weight").get<long long>() != a.weight()) {
      throw Error(ErrorKind::kParse, "stored packing weight does not match recomputed weight " +
                                         std::to_string(a.weight()));
    }
  }
  return a;
}

nlohmann::json lower_bound_to_json(const LowerBoundInstance& inst) {
  return {{"k", inst.k},
          {"t", inst.t},
          {"girth", inst.girth},
          {"certified", inst.certified},
          {"base", {{"source", inst.base_source},
                    {"num_vertices", inst.base.num_vertices},
                    {"edges", inst.base.edges}}},
          {"family", family_to_json(inst.family)},
          {"a_solution", packing_to_json(inst.a_solution)},
          {"b_solution", packing_to_json(inst.b_solution)}};
}

LowerBoundInstance lower_bound_from_json(const nlohmann::json& j) {
  try {
    LowerBoundInstance inst;
    inst.k = j.at("k").get<int>();
    inst.t = j.at("t").get<int>();
    inst.girth = j.at("girth").get<int>();
    inst.certified = j.at("certified").get<bool>();
    inst.base_source = j.at("base").at("source").get<std::string>();
    inst.base.num_vertices = j.at("base").at("num_vertices").get<int>();
    inst.base.edges = j.at("base").at("edges").get<std::vector<std::pair<int, int>>>();
    inst.family = family_from_json(j.at("family"));
    inst.a_solution = packing_from_json(j.at("a_solution"), inst.family.ground_size());
    inst.b_solution = packing_from_json(j.at("b_solution"), inst.family.ground_size());
    return inst;
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::kParse, std::string("lower-bound JSON: ") + err.what());
  }
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw Error(ErrorKind::kParse, path + ": " + err.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace mlsa
