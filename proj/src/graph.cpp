#include "rbond/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace rbond {

namespace {

std::invalid_argument arg_error(const std::string& msg) { return std::invalid_argument(msg); }

}  // namespace

Graph Graph::build(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count < 0) throw arg_error("vertex count must be nonnegative");
    Graph g;
    g.adj_.resize(vertex_count);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw arg_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
        if (u == v) throw arg_error("loop at vertex " + std::to_string(u));
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw arg_error("duplicate edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        throw arg_error("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= vertex_count())
        throw arg_error("vertex out of range: " + std::to_string(v));
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::edge_index(int u, int v) const {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

EmbeddingInfo EmbeddingInfo::orientable(int genus) {
    if (genus < 0) throw arg_error("orientable genus must be nonnegative");
    return {SurfaceKind::Orientable, genus, 2 - 2 * genus};
}

EmbeddingInfo EmbeddingInfo::non_orientable(int genus) {
    if (genus < 1) throw arg_error("non-orientable genus must be at least 1");
    return {SurfaceKind::NonOrientable, genus, 2 - genus};
}

EmbeddingInfo EmbeddingInfo::chi_only(int chi) { return {SurfaceKind::Undeclared, {}, chi}; }

Girth Girth::finite(int length) {
    if (length < 3) throw arg_error("cycle length must be at least 3");
    Girth g;
    g.length_ = length;
    return g;
}

int Girth::length() const {
    if (!length_) throw std::logic_error("girth is infinite");
    return *length_;
}

Graph build_graph(int vertex_count, const std::vector<Edge>& edges) {
    return Graph::build(vertex_count, edges);
}

DegreeProfile degree_profile(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw arg_error("degree profile of the empty graph is undefined");
    int lo = g.degree(0), hi = g.degree(0);
    for (int v = 1; v < n; ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi, Rational(2 * g.edge_count(), n)};
}

std::vector<int> private_neighbors(const Graph& g, int x, const std::vector<int>& X) {
    if (std::find(X.begin(), X.end(), x) == X.end())
        throw arg_error("private neighbors require x to be a member of X");
    std::vector<bool> in_X(g.vertex_count(), false);
    for (int u : X) {
        if (u < 0 || u >= g.vertex_count()) throw arg_error("X contains an invalid vertex");
        in_X[u] = true;
    }
    std::vector<int> result;
    for (int y = 0; y < g.vertex_count(); ++y) {
        // N[y] ∩ X must be exactly {x}.
        if (y != x && !g.has_edge(y, x)) continue;
        bool only_x = !(y != x && in_X[y]);
        if (only_x) {
            for (int w : g.neighbors(y)) {
                if (w != x && in_X[w]) {
                    only_x = false;
                    break;
                }
            }
        }
        if (only_x) result.push_back(y);
    }
    return result;
}

Girth girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue;
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            // Nothing past half the current best can improve it.
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int cycle = dist[u] + dist[w] + 1;
                    if (best == -1 || cycle < best) best = cycle;
                }
            }
        }
        if (best == 3) break;
    }
    return best == -1 ? Girth::infinite() : Girth::finite(best);
}

std::vector<Edge> edge_cut(const Graph& g, const std::vector<int>& U) {
    std::vector<bool> in_U(g.vertex_count(), false);
    int members = 0;
    for (int u : U) {
        if (u < 0 || u >= g.vertex_count()) throw arg_error("U contains an invalid vertex");
        if (!in_U[u]) {
            in_U[u] = true;
            ++members;
        }
    }
    if (members == 0) throw arg_error("edge cut requires a nonempty U");
    if (members == g.vertex_count()) throw arg_error("edge cut requires U to be a proper subset");
    std::vector<Edge> cut;
    for (auto [u, v] : g.edges())
        if (in_U[u] != in_U[v]) cut.emplace_back(u, v);
    return cut;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& to_remove) {
    std::set<Edge> doomed;
    for (auto [u, v] : to_remove) {
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
            throw arg_error("cannot remove non-edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
        doomed.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> kept;
    kept.reserve(g.edges().size() - doomed.size());
    for (const auto& e : g.edges())
        if (!doomed.count(e)) kept.push_back(e);
    return Graph::build(g.vertex_count(), kept);
}

Graph remove_vertex(const Graph& g, int v) {
    int n = g.vertex_count();
    if (n < 2) throw arg_error("cannot remove the last vertex");
    if (v < 0 || v >= n) throw arg_error("vertex out of range: " + std::to_string(v));
    std::vector<Edge> kept;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph::build(n - 1, kept);
}

std::vector<std::array<int, 3>> length2_paths(const Graph& g) {
    std::vector<std::array<int, 3>> paths;
    for (int y = 0; y < g.vertex_count(); ++y) {
        const auto& nbrs = g.neighbors(y);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                paths.push_back({nbrs[i], y, nbrs[j]});
    }
    return paths;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw arg_error("connectivity of the empty graph is undefined");
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

long long enumerate_small_graphs(int n, bool connected_only,
                                 const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > 7) throw arg_error("exhaustive enumeration supports 1 <= n <= 7");
    // Column-wise upper-triangle pair order, matching the graph6 bit order.
    std::vector<Edge> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const int m = static_cast<int>(pairs.size());
    long long visited = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Edge> edges;
        for (int k = 0; k < m; ++k)
            if (mask >> k & 1) edges.push_back(pairs[k]);
        Graph g = Graph::build(n, edges);
        if (connected_only && !is_connected(g)) continue;
        ++visited;
        if (!visit(g)) break;
    }
    return visited;
}

}  // namespace rbond
