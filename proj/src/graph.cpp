#include "cellstrat/graph.hpp"

#include <algorithm>
#include <set>

#include "cellstrat/errors.hpp"

namespace cellstrat {

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertex_index_.emplace(vertices[i], i).second) {
      throw InputError("graph: duplicate vertex '" + vertices[i] + "'");
    }
  }
  vertices_ = std::move(vertices);

  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  std::set<std::string> seen;
  for (auto& e : edges) {
    if (vertex_index_.count(e.id)) throw InputError("graph: edge id '" + e.id + "' is also a vertex id");
    if (!seen.insert(e.id).second) throw InputError("graph: duplicate edge '" + e.id + "'");
    auto t = vertex_index(e.tail);
    auto h = vertex_index(e.head);
    if (!t || !h) throw InputError("graph: edge '" + e.id + "' has an unknown endpoint");
    edges_.push_back({std::move(e.id), *t, *h});
  }
}

std::optional<std::size_t> Graph::vertex_index(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (const auto& e : edges_) out.push_back({e.id, vertices_[e.tail], vertices_[e.head]});
  return out;
}

TotallyNormalCSS graph_css(const Graph& g) {
  CategorySpec spec;
  std::map<std::string, int> dims;
  for (const auto& v : g.vertices()) {
    spec.objects.push_back(v);
    dims.emplace(v, 0);
  }
  for (const auto& e : g.edges()) {
    spec.objects.push_back(e.id);
    dims.emplace(e.id, 1);
    spec.morphisms.push_back({e.id + "/-", g.vertex(e.tail), e.id});
    spec.morphisms.push_back({e.id + "/+", g.vertex(e.head), e.id});
  }
  return TotallyNormalCSS(FiniteAcyclicCategory(std::move(spec)), dims);
}

Graph subdivide_graph(const Graph& g, int n) {
  if (n < 1) throw InputError("subdivision factor must be at least 1");
  std::vector<std::string> vertices = g.vertices();
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    std::string previous = g.vertex(e.tail);
    for (int k = 1; k <= n; ++k) {
      std::string next = (k == n) ? g.vertex(e.head) : e.id + "." + std::to_string(k);
      if (k < n) vertices.push_back(next);
      edges.push_back({n == 1 ? e.id : e.id + "/" + std::to_string(k), previous, next});
      previous = next;
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace cellstrat
