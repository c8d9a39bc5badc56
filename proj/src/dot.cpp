#include "dg/dot.hpp"

#include <set>
#include <sstream>

namespace dg {

std::string to_dot(const Presentation& p, const Diagram& d) {
  PlanarGraph g = realize(p, d);
  std::ostringstream out;
  out << "digraph diagram {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle, fontsize=10, width=0.25];\n";

  std::set<std::int32_t> top_edge_set(g.top_edges.begin(), g.top_edges.end());
  std::set<std::int32_t> bottom_edge_set(g.bottom_edges.begin(),
                                         g.bottom_edges.end());

  out << "  { rank=same;";
  for (std::int32_t v : g.top_vertices) {
    out << " v" << v << ";";
  }
  out << " }\n";

  // Interior vertices of each cell form a cluster. Interior vertices belong
  // to exactly one cell (the one that created them), so clusters are
  // disjoint.
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    const auto& cell = g.cells[c];
    if (cell.bottom_vertices.size() <= 2) {
      continue;
    }
    out << "  subgraph cluster_cell" << c << " {\n";
    out << "    label=\"cell " << c << ": r" << cell.rel << " "
        << orient_char(cell.orient) << "\"; style=dashed; fontsize=9;\n";
    for (std::size_t k = 1; k + 1 < cell.bottom_vertices.size(); ++k) {
      out << "    v" << cell.bottom_vertices[k] << ";\n";
    }
    out << "  }\n";
  }

  for (std::int32_t v = 0; v < g.num_vertices; ++v) {
    out << "  v" << v << " [label=\"" << v << "\"];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    out << "  v" << edge.src << " -> v" << edge.dst << " [label=\""
        << p.symbol_name(edge.label) << "\"";
    std::int32_t id = static_cast<std::int32_t>(e);
    if (top_edge_set.contains(id)) {
      out << ", color=blue";
    } else if (bottom_edge_set.contains(id)) {
      out << ", color=red";
    } else {
      out << ", color=gray40";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dg
