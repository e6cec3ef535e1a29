#pragma once

#include <complex>
#include <string>

#include <json.hpp>

namespace zetawalk {

// Shortest decimal representation that parses back to the same double,
// capped at 15 significant digits. Keeps emitted reports byte-stable.
std::string format_double(double v);

// Deterministic serialization of an ordered_json tree: insertion field
// order, floats via format_double, 2-space indentation.
std::string dump_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json complex_to_json(std::complex<double> z);

}  // namespace zetawalk
