#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cellstrat/css.hpp"
#include "cellstrat/delta_set.hpp"
#include "cellstrat/poset.hpp"

namespace cellstrat {

struct EdgeSpec {
  std::string id;
  std::string tail;  // v⁻
  std::string head;  // v⁺
};

/// A finite graph; loops and multi-edges allowed. Vertices and edges are kept
/// in id order.
class Graph {
 public:
  struct Edge {
    std::string id;
    std::size_t tail;
    std::size_t head;
    bool is_loop() const noexcept { return tail == head; }
  };

  Graph() = default;
  /// Throws InputError on unknown endpoints or duplicate / clashing ids.
  Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::optional<std::size_t> vertex_index(std::string_view id) const;

  std::vector<EdgeSpec> edge_specs() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
};

/// Graph as a 1-dimensional totally normal CSS; each edge e has the endpoint
/// lifts "e/-" (from v⁻) and "e/+" (from v⁺).
TotallyNormalCSS graph_css(const Graph& g);

/// Each edge becomes a path of n edges through n - 1 new vertices "e.1", ...;
/// the new edges are "e/1", ..., "e/n". Loops become n-cycles.
Graph subdivide_graph(const Graph& g, int n);

// -- cellular model of Conf_k(X) ---------------------------------------------

/// Where one token sits: at a vertex, or inside an edge at a position in the
/// edge's token order (0 is nearest to v⁻).
struct TokenSlot {
  bool on_edge = false;
  std::size_t index = 0;
  std::size_t position = 0;

  bool operator==(const TokenSlot&) const = default;
  auto operator<=>(const TokenSlot&) const = default;
};

/// An open cell of the model: one slot per token (tokens are 1..k).
struct ConfCell {
  std::vector<TokenSlot> tokens;

  int dimension() const;
  /// Canonical id, e.g. "1@v|2@e:0|3@e:1".
  std::string id(const Graph& g) const;

  bool operator==(const ConfCell&) const = default;
  auto operator<=>(const ConfCell&) const = default;
};

/// Per token: 0 = stay, -1 = pin to v⁻ of its edge, +1 = pin to v⁺.
using PinAssignment = std::vector<int>;

/// Face category of the model with its token structure. Object i of
/// `css.category()` is `cells[i]`; morphism m goes from the cell obtained by
/// applying `pins[m]` to its target.
struct ConfigurationModel {
  Graph graph;
  int tokens = 0;
  std::vector<ConfCell> cells;
  std::vector<PinAssignment> pins;
  TotallyNormalCSS css;

  /// Cell count per dimension.
  std::vector<std::size_t> cell_counts() const;
};

/// Applies a pin assignment to `upper`. Returns nullopt when the assignment
/// is not a valid PinMorphism (wrong end, or a collision).
std::optional<ConfCell> apply_pins(const Graph& g, const ConfCell& upper, const PinAssignment& pins);

/// Token relabelling: token t moves to permutation[t-1].
ConfCell permute_tokens(const ConfCell& c, const std::vector<std::size_t>& permutation);

/// Whether the whole boundary of the cell lies in the model: no edge carries
/// two tokens and every pin assignment is collision-free.
bool is_closed_cell(const Graph& g, const ConfCell& c);

/// All configuration cells of k labelled tokens and all pin morphisms.
ConfigurationModel conf_face_category(const Graph& g, int k);

/// Sd of the model divided by the free Σ_k action. Cells are orbit
/// representatives (lexicographically least id). Throws InvariantViolation if
/// the action is not free.
DeltaSet unordered_quotient(const ConfigurationModel& model);

// -- Abrams discretized model -------------------------------------------------

/// Tuples (ordered) or sets (unordered) of k cells with pairwise disjoint
/// closures, ordered componentwise by the face relation.
struct AbramsComplex {
  Poset poset;
  std::vector<int> dims;  // aligned with poset elements
};

AbramsComplex abrams_complex(const Graph& g, int k, bool ordered);

}  // namespace cellstrat
