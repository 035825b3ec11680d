#include "eafc/graph_json.hpp"

#include <json.hpp>  // vendored nlohmann/json

#include <fstream>
#include <sstream>

namespace eafc {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_fail(const std::string& text, size_t byte, const std::string& msg) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "graph parse error at line " << line << ", column " << col << ": " << msg;
  throw input_error(os.str());
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw input_error("unknown field '" + it.key() + "' in " + where);
  }
}

}  // namespace

ArtinSystem parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!doc.is_object()) throw input_error("graph document must be a JSON object");
  reject_unknown_keys(doc, {"vertices", "edges"}, "graph document");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw input_error("graph document needs a 'vertices' array");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw input_error("vertex entries must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw input_error("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object()) throw input_error("edge entries must be objects");
      reject_unknown_keys(e, {"u", "v", "m"}, "edge entry");
      if (!e.contains("u") || !e.contains("v") || !e.contains("m"))
        throw input_error("edge entry needs fields u, v, m");
      if (!e["u"].is_string() || !e["v"].is_string())
        throw input_error("edge endpoints must be vertex names");
      if (!e["m"].is_number_integer())
        throw input_error("edge label m must be an integer");
      edges.emplace_back(e["u"].get<std::string>(), e["v"].get<std::string>(),
                         e["m"].get<int>());
    }
  }
  return ArtinSystem(std::move(vertices), std::move(edges));
}

ArtinSystem load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

std::string graph_to_json(const ArtinSystem& sys) {
  nlohmann::ordered_json doc;
  doc["vertices"] = sys.vertex_names();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : sys.edges()) {
    nlohmann::ordered_json je;
    je["u"] = sys.name(e.u);
    je["v"] = sys.name(e.v);
    je["m"] = e.m;
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

}  // namespace eafc
