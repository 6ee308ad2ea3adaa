#pragma once
#include <json.hpp>

#include "lrc/code.hpp"

namespace lrc {

using json = nlohmann::json;

inline constexpr const char* kCodeSchema = "lrc-code/1";

json field_to_json(const FieldSpec& F);
FieldSpec field_from_json(const json& j);
json mat_to_json(const Mat& M);
// Errors: SchemaError.
Mat mat_from_json(const json& j);
json code_to_json(const LinearCode& c);
// Rebuilds k from the rank of H; declared params kept as metadata.
LinearCode code_from_json(const json& j);

}  // namespace lrc
