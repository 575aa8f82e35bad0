#pragma once

// Text output shared by the library and the command line tool.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "slh/linalg.hpp"

namespace slh::io {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// JSON text with keys in insertion order and every floating-point value
/// printed with 17 significant digits. Non-finite numbers become null.
std::string dump(const Json& j, int indent = 2);

/// Array of rows of [re, im] pairs.
Json complex_matrix_json(const CMatrix& m);
CMatrix complex_matrix_from_json(const Json& j);

/// 17 significant digits, the format used for every float in reports.
std::string format_double(double v);

}  // namespace slh::io
