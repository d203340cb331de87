#include "polyapprox/counting.hpp"

#include <algorithm>
#include <cmath>

#include "polyapprox/approximator.hpp"
#include "polyapprox/errors.hpp"

namespace polyapprox {
namespace {

void matchings_dfs(const Graph& g, std::size_t start, std::size_t chosen, std::size_t K,
                   std::vector<char>& used, std::vector<BigInt>& counts) {
    ++counts[chosen];
    if (chosen == K) {
        return;
    }
    const auto& edges = g.edges();
    for (std::size_t i = start; i < edges.size(); ++i) {
        const auto [u, w] = edges[i];
        if (used[u] || used[w]) {
            continue;
        }
        used[u] = used[w] = 1;
        matchings_dfs(g, i + 1, chosen + 1, K, used, counts);
        used[u] = used[w] = 0;
    }
}

void independent_dfs(const Graph& g, std::size_t start, std::size_t chosen, std::size_t K,
                     std::vector<int>& blocked, std::vector<BigInt>& counts) {
    ++counts[chosen];
    if (chosen == K) {
        return;
    }
    for (std::size_t v = start; v < g.vertex_count(); ++v) {
        if (blocked[v]) {
            continue;
        }
        for (int w : g.neighbors(static_cast<int>(v))) {
            ++blocked[w];
        }
        ++blocked[v];
        independent_dfs(g, v + 1, chosen + 1, K, blocked, counts);
        --blocked[v];
        for (int w : g.neighbors(static_cast<int>(v))) {
            --blocked[w];
        }
    }
}

void unbranched_dfs(const Graph& g, std::size_t start, std::size_t chosen, std::size_t K,
                    std::vector<int>& degree, std::vector<BigInt>& counts) {
    ++counts[chosen];
    if (chosen == K) {
        return;
    }
    const auto& edges = g.edges();
    for (std::size_t i = start; i < edges.size(); ++i) {
        const auto [u, w] = edges[i];
        if (degree[u] >= 2 || degree[w] >= 2) {
            continue;
        }
        ++degree[u];
        ++degree[w];
        unbranched_dfs(g, i + 1, chosen + 1, K, degree, counts);
        --degree[u];
        --degree[w];
    }
}

std::size_t effective_delta_degree(const Graph& g) {
    return std::max<std::size_t>(max_degree(g), 2);
}

}  // namespace

BigInt CountVector::total() const {
    BigInt t = 0;
    for (const auto& c : counts) {
        t += c;
    }
    return t;
}

std::size_t max_structure_size(const Graph& g, StructureKind kind) {
    switch (kind) {
        case StructureKind::Matchings:
            return g.vertex_count() / 2;
        case StructureKind::IndependentSets:
            return g.vertex_count();
        case StructureKind::Unbranched:
            return g.edge_count();
    }
    return 0;
}

CountVector structure_counts(const Graph& g, StructureKind kind, std::size_t K) {
    // K may run up to the raw pool size (|E| or v); counts past the largest
    // realizable structure simply come out zero.
    const std::size_t limit =
        kind == StructureKind::IndependentSets ? g.vertex_count() : g.edge_count();
    if (K > limit) {
        throw KTooLarge(K, limit);
    }
    CountVector out{kind, std::vector<BigInt>(K + 1, BigInt(0))};
    switch (kind) {
        case StructureKind::Matchings: {
            std::vector<char> used(g.vertex_count(), 0);
            matchings_dfs(g, 0, 0, K, used, out.counts);
            break;
        }
        case StructureKind::IndependentSets: {
            std::vector<int> blocked(g.vertex_count(), 0);
            independent_dfs(g, 0, 0, K, blocked, out.counts);
            break;
        }
        case StructureKind::Unbranched: {
            std::vector<int> degree(g.vertex_count(), 0);
            unbranched_dfs(g, 0, 0, K, degree, out.counts);
            break;
        }
    }
    return out;
}

BigInt exact_total(const Graph& g, StructureKind kind) {
    const bool feasible = kind == StructureKind::Unbranched ? g.edge_count() <= 24
                                                            : g.vertex_count() <= 24;
    if (!feasible) {
        throw TooLargeForOracle();
    }
    return structure_counts(g, kind, polynomial_degree(g, kind)).total();
}

RootRegion delta_for(StructureKind kind, const Graph& g) {
    const double d = static_cast<double>(effective_delta_degree(g));
    switch (kind) {
        case StructureKind::Matchings:
            return RootRegion::real_rooted(1.0 / (4.0 * (d - 1.0)));
        case StructureKind::IndependentSets: {
            if (!is_claw_free(g)) {
                throw NotClawFree();
            }
            return RootRegion::real_rooted(std::pow(d - 1.0, d - 1.0) / std::pow(d, d));
        }
        case StructureKind::Unbranched:
            return RootRegion::stable(std::min(2.0 / (d * (d - 1.0) * (d - 1.0)), 0.99));
    }
    throw Error("unknown structure kind");
}

std::size_t polynomial_degree(const Graph& g, StructureKind kind) {
    // No matching exceeds the edge count either, so the declared degree (and
    // with it the coefficient demand) can stay within the enumeration pool.
    if (kind == StructureKind::Matchings) {
        return std::min(g.vertex_count() / 2, g.edge_count());
    }
    return max_structure_size(g, kind);
}

std::size_t required_k(const Graph& g, StructureKind kind, double eps) {
    return order_for_region(delta_for(kind, g), polynomial_degree(g, kind), eps);
}

PolynomialPrefix counting_prefix(const CountVector& counts, std::size_t degree) {
    PolynomialPrefix p;
    p.degree = degree;
    const std::size_t upto = std::min(counts.upto(), degree);
    p.known.reserve(upto + 1);
    for (std::size_t k = 0; k <= upto; ++k) {
        p.known.push_back(ExactComplex{Rational(counts.counts[k]), Rational(0)});
    }
    return p;
}

}  // namespace polyapprox
