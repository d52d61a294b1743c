#pragma once

#include "json.hpp"
#include "loewner/driving.hpp"
#include "loewner/map.hpp"

namespace loewner {

/// Complex values travel as [re, im]; plain numbers are accepted on input.
nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// Builds a map from a JSON map spec (see docs/map_spec.md).  Throws ParseError.
Map map_from_json(const nlohmann::json& spec);
/// Inverse of map_from_json; throws NotSerializable for generic callables.
nlohmann::json map_to_json(const Map& m);

/// {"knots": [[t, lambda], ...], "mode": "const"|"linear", "horizon": T}
DrivingFunction driving_from_json(const nlohmann::json& j);
nlohmann::json driving_to_json(const DrivingFunction& d);

MeasureSpec measure_from_json(const nlohmann::json& j);
nlohmann::json measure_to_json(const MeasureSpec& m);

}  // namespace loewner
