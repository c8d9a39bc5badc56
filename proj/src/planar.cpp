#include "dg/planar.hpp"

#include <algorithm>

namespace dg {

PlanarGraph realize(const Presentation& p, const Diagram& d) {
  if (!is_valid(p, d)) {
    throw InvalidDiagram("realize: diagram does not replay");
  }
  PlanarGraph g;
  const std::size_t n = d.top.size();

  // Top path: vertices 0..n, edges 0..n-1.
  g.num_vertices = static_cast<std::int32_t>(n) + 1;
  for (std::size_t i = 0; i <= n; ++i) {
    g.top_vertices.push_back(static_cast<std::int32_t>(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.edges.push_back({static_cast<std::int32_t>(i),
                       static_cast<std::int32_t>(i) + 1, d.top[i]});
    g.top_edges.push_back(static_cast<std::int32_t>(i));
  }

  // Running bottom path as parallel vertex/edge id lists.
  std::vector<std::int32_t> path_v = g.top_vertices;
  std::vector<std::int32_t> path_e = g.top_edges;

  for (const Atom& a : d.atoms) {
    const std::size_t off = static_cast<std::size_t>(a.offset);
    const std::size_t in_len = in_side(p, a).size();
    const Word& out = out_side(p, a);

    PlanarGraph::Cell cell;
    cell.rel = a.rel;
    cell.orient = a.orient;
    cell.top_vertices.assign(path_v.begin() + off,
                             path_v.begin() + off + in_len + 1);
    cell.top_edges.assign(path_e.begin() + off, path_e.begin() + off + in_len);

    const std::int32_t start = path_v[off];
    const std::int32_t end = path_v[off + in_len];
    std::vector<std::int32_t> new_v;
    new_v.push_back(start);
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
      new_v.push_back(g.num_vertices++);
    }
    new_v.push_back(end);
    std::vector<std::int32_t> new_e;
    for (std::size_t k = 0; k < out.size(); ++k) {
      g.edges.push_back({new_v[k], new_v[k + 1], out[k]});
      new_e.push_back(static_cast<std::int32_t>(g.edges.size()) - 1);
    }
    cell.bottom_vertices = new_v;
    cell.bottom_edges = new_e;
    g.cells.push_back(std::move(cell));

    path_v.erase(path_v.begin() + off, path_v.begin() + off + in_len + 1);
    path_v.insert(path_v.begin() + off, new_v.begin(), new_v.end());
    path_e.erase(path_e.begin() + off, path_e.begin() + off + in_len);
    path_e.insert(path_e.begin() + off, new_e.begin(), new_e.end());
  }

  g.bottom_vertices = std::move(path_v);
  g.bottom_edges = std::move(path_e);
  return g;
}

namespace {

std::vector<std::vector<std::int32_t>> out_adjacency(const PlanarGraph& g) {
  std::vector<std::vector<std::int32_t>> adj(
      static_cast<std::size_t>(g.num_vertices));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    adj[static_cast<std::size_t>(g.edges[e].src)].push_back(
        static_cast<std::int32_t>(e));
  }
  return adj;  // edge ids ascend within each list: creation order
}

bool dfs_label(const PlanarGraph& g,
               const std::vector<std::vector<std::int32_t>>& adj,
               std::int32_t at, std::int32_t to, Word& label) {
  if (at == to) {
    return true;
  }
  for (std::int32_t e : adj[static_cast<std::size_t>(at)]) {
    label.push_back(g.edges[static_cast<std::size_t>(e)].label);
    if (dfs_label(g, adj, g.edges[static_cast<std::size_t>(e)].dst, to,
                  label)) {
      return true;
    }
    label.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Word> path_label(const PlanarGraph& g, std::int32_t from,
                               std::int32_t to) {
  if (from < 0 || from >= g.num_vertices || to < 0 || to >= g.num_vertices) {
    return std::nullopt;
  }
  auto adj = out_adjacency(g);
  Word label;
  if (dfs_label(g, adj, from, to, label)) {
    return label;
  }
  return std::nullopt;
}

std::vector<char> reachable_from(const PlanarGraph& g, std::int32_t v) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices), 0);
  if (v < 0 || v >= g.num_vertices) {
    return seen;
  }
  auto adj = out_adjacency(g);
  std::vector<std::int32_t> stack{v};
  seen[static_cast<std::size_t>(v)] = 1;
  while (!stack.empty()) {
    std::int32_t at = stack.back();
    stack.pop_back();
    for (std::int32_t e : adj[static_cast<std::size_t>(at)]) {
      std::int32_t next = g.edges[static_cast<std::size_t>(e)].dst;
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace dg
