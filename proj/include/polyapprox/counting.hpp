#ifndef POLYAPPROX_COUNTING_HPP
#define POLYAPPROX_COUNTING_HPP

#include <cstddef>
#include <vector>

#include "polyapprox/graph.hpp"
#include "polyapprox/prefix.hpp"
#include "polyapprox/scalar.hpp"
#include "polyapprox/transforms.hpp"

namespace polyapprox {

enum class StructureKind { Matchings, IndependentSets, Unbranched };

// Exact structure counts by size: counts[k] structures with k edges
// (Matchings, Unbranched) or k vertices (IndependentSets).
struct CountVector {
    StructureKind kind;
    std::vector<BigInt> counts;  // size K+1

    std::size_t upto() const { return counts.size() - 1; }
    BigInt total() const;
};

// Largest structure size the graph can possibly carry.
std::size_t max_structure_size(const Graph& g, StructureKind kind);

// Exact counts of all structures of size <= K by pruned depth-first
// enumeration over the fixed input edge/vertex order.
CountVector structure_counts(const Graph& g, StructureKind kind, std::size_t K);

// Full-depth brute-force total; guarded to stay at desk scale.
BigInt exact_total(const Graph& g, StructureKind kind);

// Root-region constants of the matching, independence and unbranched
// subgraph polynomials (Heilmann-Lieb, Dobrushin-Shearer, Ruelle).
// IndependentSets additionally requires a claw-free graph.
RootRegion delta_for(StructureKind kind, const Graph& g);

// Declared degree of the counting polynomial fed to the approximator.
std::size_t polynomial_degree(const Graph& g, StructureKind kind);

// The truncation order the estimation pipeline will demand; sizes the
// enumeration before running it.
std::size_t required_k(const Graph& g, StructureKind kind, double eps);

// 1 + sum_k counts[k] x^k as an exact prefix of the declared degree.
PolynomialPrefix counting_prefix(const CountVector& counts, std::size_t degree);

}  // namespace polyapprox

#endif
