#pragma once

// JSON encodings shared by the table export and the command-line tool.

#include <json.hpp>

#include "gk/curve.hpp"
#include "gk/gf.hpp"
#include "gk/series.hpp"

namespace gk {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const nlohmann::json& j);

/// {"vars": ["y","z"], "terms": [[[i, j], coeff_index], ...]}
nlohmann::json to_json(const SparsePoly& poly);
SparsePoly poly_from_json(const nlohmann::json& j, FieldPtr field);

/// Dense coefficient indices, lowest degree first.
nlohmann::json to_json(const TruncatedSeries& s);

}  // namespace gk
