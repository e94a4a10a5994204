#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rbond/rational.hpp"

namespace rbond {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction:
/// every mutation-flavoured operation below returns a fresh graph. Neighbor
/// lists and the edge list are kept sorted, so lookups are binary searches
/// and the edge list doubles as the canonical edge order (smaller endpoint
/// first, lexicographic).
class Graph {
  public:
    static Graph build(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const;
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    /// Index of (u,v) in the canonical edge list, or -1 if absent.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return adj_.size() == other.adj_.size() && edges_ == other.edges_;
    }

  private:
    Graph() = default;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

struct DegreeProfile {
    int min_degree;
    int max_degree;
    Rational average_degree;  // 2|E|/|V|, exact
};

enum class SurfaceKind { Orientable, NonOrientable, Undeclared };

/// Surface embedding metadata. Never inferred from the graph itself; it is
/// either supplied by a generator or declared in corpus metadata, and is
/// trusted as-is. `chi` may be declared on its own (kind stays Undeclared);
/// when a kind is declared, genus must be too, and chi is forced to the
/// matching Euler characteristic (2-2g orientable, 2-g non-orientable).
struct EmbeddingInfo {
    SurfaceKind kind = SurfaceKind::Undeclared;
    std::optional<int> genus;
    std::optional<int> chi;

    static EmbeddingInfo orientable(int genus);
    static EmbeddingInfo non_orientable(int genus);
    static EmbeddingInfo chi_only(int chi);
    static EmbeddingInfo undeclared() { return {}; }
};

/// Girth as a proper sum type: forests have no cycle at all, and that case
/// must not leak into arithmetic as a sentinel integer.
class Girth {
  public:
    static Girth infinite() { return Girth{}; }
    static Girth finite(int length);

    bool is_finite() const { return length_.has_value(); }
    int length() const;  // throws std::logic_error when infinite

    bool operator==(const Girth& other) const { return length_ == other.length_; }

  private:
    Girth() = default;
    std::optional<int> length_;
};

/// Validates and builds: rejects out-of-range endpoints, loops, and
/// duplicates (in either orientation). Throws std::invalid_argument.
Graph build_graph(int vertex_count, const std::vector<Edge>& edges);

/// Throws std::invalid_argument on the empty graph.
DegreeProfile degree_profile(const Graph& g);

/// Private neighbors of x with respect to X: all y whose closed neighborhood
/// meets X exactly in {x}. Requires x to be a member of X.
std::vector<int> private_neighbors(const Graph& g, int x, const std::vector<int>& X);

/// Length of a shortest cycle; Girth::infinite() on forests.
Girth girth(const Graph& g);

/// Edges with exactly one endpoint in U. U must be a proper nonempty subset
/// of the vertex set.
std::vector<Edge> edge_cut(const Graph& g, const std::vector<int>& U);

/// Removes the given edges (each must exist). Vertex set is unchanged.
Graph remove_edges(const Graph& g, const std::vector<Edge>& to_remove);

/// Removes vertex v and reindexes the survivors order-preservingly
/// (w > v becomes w-1). Requires at least 2 vertices.
Graph remove_vertex(const Graph& g, int v);

/// All paths x-y-z of length 2, each unordered path once, as (x, y, z) with
/// x < z. Enumeration order: centers y ascending, then (x, z) ascending.
std::vector<std::array<int, 3>> length2_paths(const Graph& g);

bool is_connected(const Graph& g);

/// Streams every labeled graph on n vertices (1 <= n <= 7) in ascending
/// adjacency-bitmask order; bit k of the mask is the k-th pair in the
/// column-wise upper-triangle order (0,1),(0,2),(1,2),(0,3),...
/// Returns the number of graphs visited. The callback may return false to
/// stop early.
long long enumerate_small_graphs(int n, bool connected_only,
                                 const std::function<bool(const Graph&)>& visit);

}  // namespace rbond
