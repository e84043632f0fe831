#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

namespace trieig {

using Json = nlohmann::ordered_json;

/// Formats a double with 17 significant digits ("%.17g"); non-finite values
/// become "null" in JSON and "nan"/"inf" in CSV.
std::string format_number(double v);

/// Serializes `doc` with two-space indentation, floating-point numbers in
/// format_number, keys in insertion order.
void write_json(std::ostream& os, const Json& doc);

}  // namespace trieig
