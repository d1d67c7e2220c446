#ifndef JACRING_JSON_IO_HPP
#define JACRING_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "jacring/cycle.hpp"
#include "jacring/model.hpp"

namespace jacring {

/// Canonical JSON forms. All objects use sorted keys (nlohmann's default
/// object ordering) and rationals are serialized as "p/q" strings, so a
/// serialize -> parse -> serialize round trip is byte-identical.

/// {"genus": g, "terms": [{"coeff": "p/q", "index": [...], "m": m}, ...]}
/// with terms sorted by (dimension, s, index, m).
nlohmann::json cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const nlohmann::json& j);

/// {"admissible": [[...], ...], "basic_products": [...], "genus": g,
///  "gonality": m|null, "provenance": {...}, "substitutions": [...]}
nlohmann::json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);

std::string dump_canonical(const nlohmann::json& j);

}  // namespace jacring

#endif
