#include "rbond/roman.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rbond {

int weight(const RomanFunction& f) {
    int total = 0;
    for (auto label : f.labels) total += label;
    return total;
}

bool is_rdf(const Graph& g, const RomanFunction& f) {
    if (static_cast<int>(f.labels.size()) != g.vertex_count())
        throw std::invalid_argument("labeling length does not match vertex count");
    for (auto label : f.labels)
        if (label < 0 || label > 2) throw std::invalid_argument("labels must be 0, 1 or 2");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f.labels[v] != 0) continue;
        bool guarded = false;
        for (int w : g.neighbors(v)) {
            if (f.labels[w] == 2) {
                guarded = true;
                break;
            }
        }
        if (!guarded) return false;
    }
    return true;
}

namespace {

constexpr int kMaxSolveVertices = 64;
constexpr int kInfWeight = std::numeric_limits<int>::max() / 4;

void check_solvable(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("solver requires a nonempty graph");
    if (g.vertex_count() > kMaxSolveVertices)
        throw std::invalid_argument("exact solvers handle at most 64 vertices");
}

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint64_t> nbr(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1ull << v;
        nbr[v] |= 1ull << u;
    }
    return nbr;
}

std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Branch and bound over label assignments. `needs` tracks vertices that are
// not yet satisfied: a vertex is satisfied once it is labeled 1 or 2, or has
// a 2-labeled neighbor. A branch dies as soon as some 0-labeled vertex in
// `needs` runs out of unassigned neighbors.
struct RdfSearch {
    int n;
    int max_degree;
    std::uint64_t full;
    std::vector<std::uint64_t> nbr;
    std::vector<int> order;

    int fixed_vertex = -1;
    int fixed_label = -1;
    bool decision = false;

    std::vector<std::int8_t> label;
    std::uint64_t unassigned, twos = 0, zeros = 0, needs;
    int current = 0;
    int best = kInfWeight;
    std::vector<std::int8_t> best_label;
    bool have_best = false;
    bool decided = false;
    std::uint64_t nodes = 0;

    explicit RdfSearch(const Graph& g)
        : n(g.vertex_count()),
          nbr(neighbor_masks(g)),
          order(branch_order(g)),
          label(g.vertex_count(), -1) {
        full = n == 64 ? ~0ull : (1ull << n) - 1;
        unassigned = full;
        needs = full;
        max_degree = 0;
        for (int v = 0; v < n; ++v)
            max_degree = std::max(max_degree, std::popcount(nbr[v]));
    }

    // Admissible completion bound: each future 2 satisfies at most deg+1
    // vertices at cost 2; a lone unsatisfied vertex can always be fixed for
    // cost 1 by labeling itself, so the ratio bound collapses to the count
    // when the graph has no edges at all. A disjoint-neighborhood packing
    // bound is taken when stronger.
    int lower_bound() const {
        int unsatisfied = std::popcount(needs);
        int ratio = max_degree >= 1 ? (2 * unsatisfied + max_degree) / (max_degree + 1)
                                    : unsatisfied;
        std::uint64_t blocked = 0;
        int packing = 0;
        for (std::uint64_t rest = needs; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            bool w_unassigned = (unassigned >> w) & 1;
            std::uint64_t fixers = nbr[w] & unassigned;
            if (w_unassigned) fixers |= 1ull << w;
            if (fixers & blocked) continue;
            blocked |= fixers;
            packing += w_unassigned ? 1 : 2;
        }
        return std::max(ratio, packing);
    }

    void record_solution() {
        // Remaining vertices complete with label 0: all are satisfied.
        if (current >= best) return;
        if (decision) {  // best is pinned at budget+1
            decided = true;
            return;
        }
        best = current;
        best_label = label;
        for (auto& l : best_label)
            if (l < 0) l = 0;
        have_best = true;
    }

    void dfs(int depth) {
        ++nodes;
        if (needs == 0) {
            record_solution();
            return;
        }
        if (depth == n) return;  // some vertex left unsatisfied
        if (current + lower_bound() >= best) return;
        int v = order[depth];
        static constexpr std::int8_t kLabelOrder[3] = {2, 0, 1};
        for (std::int8_t L : kLabelOrder) {
            if (v == fixed_vertex && L != fixed_label) continue;
            std::uint64_t saved_needs = needs;
            std::uint64_t bit = 1ull << v;
            label[v] = L;
            unassigned &= ~bit;
            bool dead = false;
            if (L == 2) {
                twos |= bit;
                needs &= ~(nbr[v] | bit);
            } else {
                if (L == 1) {
                    needs &= ~bit;
                } else {
                    zeros |= bit;
                    if (nbr[v] & twos) needs &= ~bit;
                }
                // Any 0-labeled vertex whose last unassigned neighbor just
                // disappeared can never gain a guard.
                std::uint64_t at_risk = (nbr[v] | bit) & needs & zeros;
                while (at_risk) {
                    int w = std::countr_zero(at_risk);
                    at_risk &= at_risk - 1;
                    if ((nbr[w] & unassigned) == 0) {
                        dead = true;
                        break;
                    }
                }
            }
            current += L;
            if (!dead) dfs(depth + 1);
            current -= L;
            if (L == 2) twos &= ~bit;
            if (L == 0) zeros &= ~bit;
            unassigned |= bit;
            label[v] = -1;
            needs = saved_needs;
            if (decision && decided) return;
        }
    }
};

RomanSolveResult run_rdf_search(const Graph& g, int fixed_vertex, int fixed_label) {
    check_solvable(g);
    RdfSearch search(g);
    search.fixed_vertex = fixed_vertex;
    search.fixed_label = fixed_label;
    if (fixed_vertex >= 0) {
        // Solutions are recorded the moment every vertex is satisfied, which
        // can happen before the search reaches the pinned vertex; branch it
        // first so the pin always takes effect.
        auto it = std::find(search.order.begin(), search.order.end(), fixed_vertex);
        std::rotate(search.order.begin(), it, it + 1);
    }
    search.dfs(0);
    RomanSolveResult result;
    result.nodes_explored = search.nodes;
    if (!search.have_best) {
        result.status = SolveStatus::Infeasible;
        result.value = -1;
    } else {
        result.status = SolveStatus::Optimal;
        result.value = search.best;
        result.witness.labels = std::move(search.best_label);
    }
    return result;
}

}  // namespace

RomanSolveResult gamma_r_exact(const Graph& g) { return run_rdf_search(g, -1, -1); }

RomanSolveResult gamma_r_constrained(const Graph& g, int v, int label) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("constrained vertex out of range");
    if (label < 0 || label > 2) throw std::invalid_argument("labels must be 0, 1 or 2");
    return run_rdf_search(g, v, label);
}

int gamma_r_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("oracle requires a nonempty graph");
    if (n > 12) throw std::invalid_argument("oracle refuses more than 12 vertices");
    std::vector<int> labels(n, 0);
    int best = 3 * n;
    while (true) {
        int total = 0;
        for (int v = 0; v < n; ++v) total += labels[v];
        if (total < best) {
            bool valid = true;
            for (int v = 0; v < n && valid; ++v) {
                if (labels[v] != 0) continue;
                bool guarded = false;
                for (int w : g.neighbors(v)) {
                    if (labels[w] == 2) {
                        guarded = true;
                        break;
                    }
                }
                valid = guarded;
            }
            if (valid) best = total;
        }
        int v = 0;
        while (v < n && labels[v] == 2) labels[v++] = 0;
        if (v == n) break;
        ++labels[v];
    }
    return best;
}

std::vector<RomanFunction> all_gamma_r_functions(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("oracle requires a nonempty graph");
    if (n > 12) throw std::invalid_argument("oracle refuses more than 12 vertices");
    std::vector<std::int8_t> labels(n, 0);
    int best = 3 * n + 1;
    std::vector<RomanFunction> minima;
    while (true) {
        RomanFunction f{labels};
        if (is_rdf(g, f)) {
            int total = weight(f);
            if (total < best) {
                best = total;
                minima.clear();
            }
            if (total == best) minima.push_back(std::move(f));
        }
        int v = 0;
        while (v < n && labels[v] == 2) labels[v++] = 0;
        if (v == n) break;
        ++labels[v];
    }
    return minima;
}

DominationSolveResult gamma_exact(const Graph& g) {
    check_solvable(g);
    int n = g.vertex_count();
    std::vector<std::uint64_t> closed = neighbor_masks(g);
    int max_closed = 1;
    for (int v = 0; v < n; ++v) {
        closed[v] |= 1ull << v;
        max_closed = std::max(max_closed, std::popcount(closed[v]));
    }
    std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;

    std::vector<int> chosen, best_set;
    int best = kInfWeight;
    std::uint64_t nodes = 0;

    auto dfs = [&](auto&& self, std::uint64_t covered) -> void {
        ++nodes;
        if (covered == full) {
            if (static_cast<int>(chosen.size()) < best) {
                best = static_cast<int>(chosen.size());
                best_set = chosen;
            }
            return;
        }
        int uncovered = std::popcount(full & ~covered);
        int lb = (uncovered + max_closed - 1) / max_closed;
        if (static_cast<int>(chosen.size()) + lb >= best) return;
        int u = std::countr_zero(full & ~covered);
        for (std::uint64_t cand = closed[u]; cand;) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            chosen.push_back(w);
            self(self, covered | closed[w]);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    std::sort(best_set.begin(), best_set.end());
    return {best, best_set, nodes};
}

namespace solver_detail {

bool rdf_within_budget(const Graph& g, int budget) {
    check_solvable(g);
    RdfSearch search(g);
    search.decision = true;
    search.best = budget + 1;
    search.dfs(0);
    return search.decided;
}

}  // namespace solver_detail

}  // namespace rbond
