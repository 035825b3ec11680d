#pragma once

#include "eafc/artin_system.hpp"

#include <filesystem>
#include <string>

namespace eafc {

// Graph document format:
//   {"vertices": ["a","b"], "edges": [{"u":"a","v":"b","m":4}]}
// Unknown fields are rejected. Parse failures report line/column; semantic
// failures name the offending vertex or edge. The serializer emits the same
// document canonically (insertion-ordered vertices, canonical edge order),
// byte-identical across runs.
ArtinSystem parse_graph_json(const std::string& text);
ArtinSystem load_graph_file(const std::filesystem::path& path);
std::string graph_to_json(const ArtinSystem& sys);

}  // namespace eafc
