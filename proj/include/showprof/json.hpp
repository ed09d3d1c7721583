#pragma once

#include <json.hpp>

namespace showprof {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

}  // namespace showprof
