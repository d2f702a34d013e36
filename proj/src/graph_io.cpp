#include <fstream>
#include <sstream>

#include "json.hpp"
#include "permcm/graph.hpp"

namespace permcm {

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw GraphError("graph JSON needs an integer field \"n\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 0 || n > kMaxVertices) throw GraphError("vertex count out of range");
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& pair : doc["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw GraphError("each edge must be a pair of integers");
      }
      edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.n();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump();
}

}  // namespace permcm
