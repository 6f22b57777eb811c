#pragma once

#include <json.hpp>

namespace kuni {

// Insertion-ordered so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

}  // namespace kuni
