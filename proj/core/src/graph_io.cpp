#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "loplab/graph.hpp"

namespace loplab {

std::string to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw std::invalid_argument("graph JSON: expected object with \"n\" and \"edges\"");
  }
  const auto& jn = doc.at("n");
  if (!jn.is_number_integer() || jn.get<long long>() < 0) {
    throw std::invalid_argument("graph JSON: \"n\" must be a nonnegative integer");
  }
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw std::invalid_argument("graph JSON: each edge must be [u, v] with u, v >= 0");
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(jn.get<std::size_t>(), std::move(edges));
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_json(g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

}  // namespace loplab
