#include "rbond/bondage.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace rbond {

VertexImpact classify_vertex(const Graph& g, int v) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("vertex classification requires at least 2 vertices");
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    int base = gamma_r_exact(g).value;
    int removed = gamma_r_exact(remove_vertex(g, v)).value;
    if (removed < base) return VertexImpact::Minus;
    return removed == base ? VertexImpact::Zero : VertexImpact::Plus;
}

ImpactAnalysis analyze_impacts(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("vertex classification requires at least 2 vertices");
    ImpactAnalysis out;
    out.base_value = gamma_r_exact(g).value;
    out.removed_value.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int removed = gamma_r_exact(remove_vertex(g, v)).value;
        out.removed_value[v] = removed;
        if (removed < out.base_value)
            out.partition.v_minus.push_back(v);
        else if (removed == out.base_value)
            out.partition.v_zero.push_back(v);
        else
            out.partition.v_plus.push_back(v);
    }
    return out;
}

ImpactPartition classify_all(const Graph& g) { return analyze_impacts(g).partition; }

bool is_roman_vertex_critical(const Graph& g) {
    return static_cast<int>(classify_all(g).v_minus.size()) == g.vertex_count();
}

namespace {

// First subset (by cardinality, then lexicographically over edge indices)
// whose removal pushes gamma_r above base. visit returns true on a hit.
template <typename Visit>
std::optional<std::vector<int>> first_changing_subset(int edge_count, int cap, Visit&& raises) {
    std::vector<int> pick;
    for (int k = 1; k <= cap; ++k) {
        pick.resize(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if (raises(pick)) return pick;
            int i = k - 1;
            while (i >= 0 && pick[i] == edge_count - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

BondageResult roman_bondage(const Graph& g, std::optional<int> cap) {
    const int m = static_cast<int>(g.edge_count());
    if (m < 1) throw std::invalid_argument("bondage requires at least one edge");
    if (cap && *cap < 1) throw std::invalid_argument("bondage cap must be at least 1");

    const int base = gamma_r_exact(g).value;
    if (base == g.vertex_count()) {
        // Removing edges can only push gamma_r up, and n is its ceiling.
        return {BondageStatus::Undefined, std::nullopt, {}, {}, 0};
    }

    int max_degree = degree_profile(g).max_degree;
    int default_cap = max_degree >= 2 ? 3 * max_degree - 3 : m;
    int cap_used = std::min(cap.value_or(default_cap), m);

    auto raises = [&](const std::vector<int>& subset) {
        std::vector<Edge> doomed;
        doomed.reserve(subset.size());
        for (int idx : subset) doomed.push_back(g.edges()[idx]);
        return !solver_detail::rdf_within_budget(remove_edges(g, doomed), base);
    };

    if (auto hit = first_changing_subset(m, cap_used, raises)) {
        std::vector<Edge> edges;
        for (int idx : *hit) edges.push_back(g.edges()[idx]);
        return {BondageStatus::Exact, static_cast<int>(hit->size()), *hit, edges, cap_used};
    }
    return {BondageStatus::LowerBoundOnly, cap_used + 1, {}, {}, cap_used};
}

std::vector<Edge> witness_from_critical_vertex(const Graph& g, int x) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("vertex classification requires at least 2 vertices");
    if (x < 0 || x >= g.vertex_count())
        throw std::invalid_argument("vertex out of range: " + std::to_string(x));
    int base = gamma_r_exact(g).value;
    int removed = gamma_r_exact(remove_vertex(g, x)).value;
    if (removed < base)
        throw std::invalid_argument("witness construction needs a vertex whose removal does "
                                    "not lower the value");
    // Incident edges in canonical order.
    std::vector<Edge> incident;
    for (int w : g.neighbors(x)) incident.emplace_back(std::min(x, w), std::max(x, w));
    std::sort(incident.begin(), incident.end());
    if (removed == base) return incident;
    int keep = static_cast<int>(incident.size()) - (removed - base);
    if (keep < 1)
        throw std::logic_error("impact exceeds degree minus 2; construction invariant broken");
    incident.resize(keep);
    return incident;
}

std::optional<std::vector<Edge>> witness_three_low_neighbors(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<int> low;
        for (int w : g.neighbors(u)) {
            if (g.degree(w) <= 5) low.push_back(w);
            if (low.size() == 3) break;
        }
        if (low.size() < 3) continue;
        std::set<Edge> bundle;
        for (int w : low)
            for (int z : g.neighbors(w)) bundle.insert({std::min(w, z), std::max(w, z)});
        return std::vector<Edge>(bundle.begin(), bundle.end());
    }
    return std::nullopt;
}

}  // namespace rbond
