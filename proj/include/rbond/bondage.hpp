#pragma once

#include <optional>
#include <vector>

#include "rbond/graph.hpp"
#include "rbond/roman.hpp"

namespace rbond {

/// Sign of gamma_r(G - v) - gamma_r(G).
enum class VertexImpact { Minus, Zero, Plus };

struct ImpactPartition {
    std::vector<int> v_minus, v_zero, v_plus;  // each ascending
};

/// classify_all plus the raw values it was derived from, so downstream
/// consumers (bounds, reports) do not re-run the n+1 solves.
struct ImpactAnalysis {
    int base_value;                  // gamma_r(G)
    std::vector<int> removed_value;  // gamma_r(G - v) per vertex
    ImpactPartition partition;
};

VertexImpact classify_vertex(const Graph& g, int v);

ImpactAnalysis analyze_impacts(const Graph& g);

ImpactPartition classify_all(const Graph& g);

/// True when removing any single vertex lowers gamma_r.
bool is_roman_vertex_critical(const Graph& g);

enum class BondageStatus { Exact, LowerBoundOnly, Undefined };

struct BondageResult {
    BondageStatus status;
    /// Exact value, or the certified lower bound cap_used + 1 when the
    /// capped search exhausted without a change. Absent when Undefined.
    std::optional<int> value;
    std::vector<int> witness_edge_indices;  // into the canonical edge list
    std::vector<Edge> witness_edges;
    int cap_used;
};

/// Smallest edge set whose removal raises gamma_r. Subsets are searched by
/// increasing cardinality, lexicographically over canonical edge indices
/// within each cardinality, and the first witness is returned, so results
/// are reproducible. When gamma_r(G) = n no edge set can ever change the
/// value and the result is Undefined without searching. Default cap:
/// 3*max_degree - 3 when max_degree >= 2, else |E|. Requires at least one
/// edge; an explicit cap must be >= 1.
BondageResult roman_bondage(const Graph& g, std::optional<int> cap = std::nullopt);

/// Constructive witness from a vertex x whose removal does not lower
/// gamma_r: for impact zero, all edges at x; for impact plus, the
/// d(x) - (gamma_r(G-x) - gamma_r(G)) smallest-index edges at x. Removal of
/// the returned set is guaranteed to raise gamma_r. Throws when removing x
/// lowers gamma_r (the construction does not apply).
std::vector<Edge> witness_from_critical_vertex(const Graph& g, int x);

/// Looks for a vertex with three neighbors of degree at most 5 (lowest
/// indices win) and returns every edge incident to those three neighbors:
/// at most 15 edges whose removal always raises gamma_r, because the three
/// vertices become isolated and must take label 1 while a single 2 on their
/// common neighbor previously served all of them. Empty when no such vertex
/// exists.
std::optional<std::vector<Edge>> witness_three_low_neighbors(const Graph& g);

}  // namespace rbond
