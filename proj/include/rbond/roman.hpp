#pragma once

#include <cstdint>
#include <vector>

#include "rbond/graph.hpp"

namespace rbond {

/// Vertex labeling with values in {0,1,2}. A Roman dominating function
/// additionally requires every 0-labeled vertex to have a 2-labeled
/// neighbor; its weight is the label sum.
struct RomanFunction {
    std::vector<std::int8_t> labels;
};

int weight(const RomanFunction& f);

/// Validates the labeling against the definition. Throws on a labeling of
/// the wrong length or with values outside {0,1,2}.
bool is_rdf(const Graph& g, const RomanFunction& f);

enum class SolveStatus { Optimal, Infeasible };

struct RomanSolveResult {
    SolveStatus status;
    int value;              // meaningful only when Optimal
    RomanFunction witness;  // ditto
    std::uint64_t nodes_explored;
};

/// Exact minimum-weight solve by branch and bound. Branching is fixed
/// (vertices by descending degree breaking ties by index, labels tried in
/// the order 2, 0, 1) and the incumbent only updates on strict improvement,
/// so the witness is reproducible run to run. Pruning is admissible and
/// never changes the reported witness. Requires 1 <= n <= 64.
RomanSolveResult gamma_r_exact(const Graph& g);

/// Same search with f(v) pinned to `label`. The only infeasible case is
/// pinning 0 on a vertex with no possible 2-neighbor, reported as
/// SolveStatus::Infeasible.
RomanSolveResult gamma_r_constrained(const Graph& g, int v, int label);

/// Independent exhaustive check: scans all 3^n labelings directly against
/// the definition. Deliberately shares no code with gamma_r_exact.
/// Refuses n > 12.
int gamma_r_oracle(const Graph& g);

/// Every minimum-weight Roman dominating function, by exhaustive scan
/// (n <= 12). Labelings are emitted in base-3 counter order, vertex 0 the
/// least significant digit.
std::vector<RomanFunction> all_gamma_r_functions(const Graph& g);

struct DominationSolveResult {
    int value;
    std::vector<int> witness;  // a minimum dominating set, ascending
    std::uint64_t nodes_explored;
};

/// Exact domination number; branches on dominators of the lowest-index
/// uncovered vertex. Requires 1 <= n <= 64.
DominationSolveResult gamma_exact(const Graph& g);

namespace solver_detail {

/// Decision variant used by the bondage search: is there a Roman dominating
/// function of weight <= budget? Shares the branch-and-bound core of
/// gamma_r_exact (not the oracle).
bool rdf_within_budget(const Graph& g, int budget);

}  // namespace solver_detail

}  // namespace rbond
