#include "jacring/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacring {

namespace {

nlohmann::json index_to_json(const MultiIndex& index) {
  return nlohmann::json(index.entries());
}

MultiIndex index_from_json(const nlohmann::json& j) {
  return MultiIndex(j.get<std::vector<int>>());
}

nlohmann::json terms_to_json(const Cycle& c) {
  // Sort by (dimension, s, index, m); the BasisKey map order is (index, m),
  // so re-sort explicitly.
  std::vector<std::pair<BasisKey, Rational>> terms(c.terms().begin(),
                                                   c.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const auto rank = [](const BasisKey& k) {
      return std::tuple<int, int, MultiIndex, int>{k.dimension(), k.degree(),
                                                   k.index, k.m};
    };
    return rank(a.first) < rank(b.first);
  });
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, coeff] : terms)
    out.push_back({{"coeff", rational_str(coeff)},
                   {"index", index_to_json(key.index)},
                   {"m", key.m}});
  return out;
}

void terms_from_json(const nlohmann::json& j, Cycle& c) {
  for (const auto& term : j)
    c.add(BasisKey{index_from_json(term.at("index")), term.at("m").get<int>()},
          parse_rational(term.at("coeff").get<std::string>()));
}

}  // namespace

nlohmann::json cycle_to_json(const Cycle& c) {
  return {{"genus", c.genus()}, {"terms", terms_to_json(c)}};
}

Cycle cycle_from_json(const nlohmann::json& j) {
  Cycle c(j.at("genus").get<int>());
  terms_from_json(j.at("terms"), c);
  return c;
}

nlohmann::json model_to_json(const Model& model) {
  nlohmann::json admissible = nlohmann::json::array();
  for (const MultiIndex& index : model.admissible.indexes)
    admissible.push_back(index_to_json(index));

  nlohmann::json basics = nlohmann::json::array();
  for (const auto& [key, value] : model.basics)
    basics.push_back({{"i", index_to_json(key.first)},
                      {"j", index_to_json(key.second)},
                      {"value", terms_to_json(value)}});

  nlohmann::json substitutions = nlohmann::json::array();
  for (const auto& [index, value] : model.substitutions)
    substitutions.push_back(
        {{"index", index_to_json(index)}, {"value", terms_to_json(value)}});

  nlohmann::json provenance = nlohmann::json::object();
  for (const auto& [key, note] : model.provenance) provenance[key] = note;

  return {{"admissible", admissible},
          {"basic_products", basics},
          {"genus", model.genus()},
          {"gonality", model.admissible.gonality
                           ? nlohmann::json(*model.admissible.gonality)
                           : nlohmann::json(nullptr)},
          {"provenance", provenance},
          {"substitutions", substitutions}};
}

Model model_from_json(const nlohmann::json& j) {
  Model model;
  model.admissible.genus = j.at("genus").get<int>();
  if (!j.at("gonality").is_null())
    model.admissible.gonality = j.at("gonality").get<int>();
  for (const auto& index : j.at("admissible"))
    model.admissible.indexes.insert(index_from_json(index));
  for (const auto& entry : j.at("basic_products")) {
    Cycle value(model.genus());
    terms_from_json(entry.at("value"), value);
    model.basics.emplace(make_pair_key(index_from_json(entry.at("i")),
                                       index_from_json(entry.at("j"))),
                         value);
  }
  for (const auto& entry : j.at("substitutions")) {
    Cycle value(model.genus());
    terms_from_json(entry.at("value"), value);
    model.substitutions.emplace(index_from_json(entry.at("index")), value);
  }
  for (const auto& [key, note] : j.at("provenance").items())
    model.provenance[key] = note.get<std::string>();
  return model;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace jacring
