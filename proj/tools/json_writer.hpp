#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

namespace kinematica::cli {

using Json = nlohmann::ordered_json;

// Significant digits for floats: KINEMATICA_PRECISION when set to 1..17, else 17.
int float_precision();

// Two-space indented JSON. Arrays of scalars stay on one line; floats use %.{precision}g.
void write_json(std::ostream& os, const Json& j, int precision);

}  // namespace kinematica::cli
