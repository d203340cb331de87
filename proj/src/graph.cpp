#include "polyapprox/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "polyapprox/errors.hpp"

namespace polyapprox {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<int, int>> edge_list)
    : edges_(std::move(edge_list)), adjacency_(vertex_count) {
    std::set<std::pair<int, int>> seen;
    for (auto& [u, w] : edges_) {
        if (u == w) {
            throw Error("loop edge " + std::to_string(u) + "-" + std::to_string(w));
        }
        if (u < 0 || w < 0 || static_cast<std::size_t>(u) >= vertex_count ||
            static_cast<std::size_t>(w) >= vertex_count) {
            throw Error("edge endpoint out of range");
        }
        const auto key = std::minmax(u, w);
        if (!seen.insert({key.first, key.second}).second) {
            throw Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(w));
        }
        adjacency_[u].push_back(w);
        adjacency_[w].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Graph::adjacent(int u, int w) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), w);
}

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long v = -1, e = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ss(line);
        if (v < 0) {
            if (!(ss >> v >> e) || v < 0 || e < 0) {
                throw ParseError("expected header `v e`", lineno);
            }
            continue;
        }
        long u, w;
        if (!(ss >> u >> w)) {
            throw ParseError("expected edge `u w`", lineno);
        }
        if (u < 0 || w < 0 || u >= v || w >= v) {
            throw ParseError("edge endpoint out of range", lineno);
        }
        if (u == w) {
            throw ParseError("loop edge not allowed", lineno);
        }
        const auto key = std::minmax(u, w);
        if (!seen.insert({static_cast<int>(key.first), static_cast<int>(key.second)}).second) {
            throw ParseError("duplicate edge", lineno);
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(w));
    }
    if (v < 0) {
        throw ParseError("empty graph file", lineno);
    }
    if (static_cast<long>(edges.size()) != e) {
        throw ParseError("edge count does not match header", lineno);
    }
    return Graph(static_cast<std::size_t>(v), std::move(edges));
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        best = std::max(best, g.neighbors(static_cast<int>(v)).size());
    }
    return best;
}

bool is_claw_free(const Graph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(static_cast<int>(v));
        const std::size_t d = nbrs.size();
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.adjacent(nbrs[i], nbrs[j])) {
                    continue;
                }
                for (std::size_t k = j + 1; k < d; ++k) {
                    if (!g.adjacent(nbrs[i], nbrs[k]) && !g.adjacent(nbrs[j], nbrs[k])) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    std::vector<std::pair<int, int>> ledges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& a = edges[i];
            const auto& b = edges[j];
            if (a.first == b.first || a.first == b.second || a.second == b.first ||
                a.second == b.second) {
                ledges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return Graph(edges.size(), std::move(ledges));
}

}  // namespace polyapprox
