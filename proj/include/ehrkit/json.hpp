#pragma once

#include <json.hpp>

namespace ehrkit {

// Insertion-ordered so that serialized reports are byte-stable.
using json = nlohmann::ordered_json;

}  // namespace ehrkit
