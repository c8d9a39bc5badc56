#ifndef DG_PLANAR_HPP
#define DG_PLANAR_HPP

#include <optional>
#include <vector>

#include "dg/diagram.hpp"

namespace dg {

// Explicit planar realization of a diagram. Vertex and edge ids are assigned
// in replay order (top path first, then per-cell interior), so realizations
// are reproducible byte for byte. All edges point left-to-right; the graph
// is acyclic in the positive direction.
struct PlanarGraph {
  struct Edge {
    std::int32_t src;
    std::int32_t dst;
    SymbolId label;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  // Both boundary paths of a cell are positive; the top path is the segment
  // of the running bottom path the cell consumed, the bottom path is what it
  // drew. Vertex lists include both endpoints.
  struct Cell {
    std::vector<std::int32_t> top_vertices;
    std::vector<std::int32_t> top_edges;
    std::vector<std::int32_t> bottom_vertices;
    std::vector<std::int32_t> bottom_edges;
    std::int32_t rel;
    Orient orient;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  std::int32_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<Cell> cells;
  std::vector<std::int32_t> top_vertices;  // diagram boundary paths
  std::vector<std::int32_t> top_edges;
  std::vector<std::int32_t> bottom_vertices;
  std::vector<std::int32_t> bottom_edges;

  friend bool operator==(const PlanarGraph&, const PlanarGraph&) = default;
};

PlanarGraph realize(const Presentation& p, const Diagram& d);

// Label of one positive path from `from` to `to`, found by depth-first
// search taking out-edges in creation order; nullopt when unreachable.
// Any choice of path is legitimate: all labels agree modulo the
// presentation, which is what makes mu well-defined.
std::optional<Word> path_label(const PlanarGraph& g, std::int32_t from,
                               std::int32_t to);

// reachable_from(g, v)[u] == true iff there is a positive path v -> u.
std::vector<char> reachable_from(const PlanarGraph& g, std::int32_t v);

}  // namespace dg

#endif  // DG_PLANAR_HPP
