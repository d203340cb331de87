#ifndef POLYAPPROX_GRAPH_HPP
#define POLYAPPROX_GRAPH_HPP

#include <cstddef>
#include <istream>
#include <utility>
#include <vector>

namespace polyapprox {

// Simple undirected graph: no loops, no multi-edges.
class Graph {
  public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<std::pair<int, int>> edge_list);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    bool adjacent(int u, int w) const;

  private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// Plain text format: `#` comment lines ignored; first data line `v e`;
// then e lines `u w`.  Duplicate edges, loops and out-of-range endpoints are
// rejected with the offending line number.
Graph parse_graph(std::istream& in);

std::size_t max_degree(const Graph& g);

// True iff no vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);

// Vertices of the line graph L(g) are the edges of g, adjacent when they
// share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace polyapprox

#endif
