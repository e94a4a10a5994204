#pragma once

#include <optional>
#include <string>
#include <variant>

#include "rbond/bondage.hpp"
#include "rbond/graph.hpp"
#include "rbond/rational.hpp"

namespace rbond {

enum class BoundId { Path, CriticalVertex, AvgDegree, GirthEuler, Surface15 };

struct PathTriple {
    int x, y, z;
};

using BoundWitness = std::variant<std::monostate, PathTriple, int>;

/// One evaluated upper bound on the Roman bondage number. Inapplicability is
/// a verdict (reason filled in), not an error, so sweeps stay total.
struct BoundEvaluation {
    BoundId id;
    bool applicable = false;
    std::string reason;  // nonempty iff not applicable
    std::optional<Rational> value;
    BoundWitness witness;
    std::optional<Rational> relaxed_value;  // GirthEuler only: the weakened form
    std::optional<bool> premise_holds;      // GirthEuler only: avg degree vs ceiling
    std::optional<BondageResult> exact_b_r;  // filled by callers that compare
};

/// min over length-2 paths x-y-z of d(x)+d(y)+d(z) - 3 - |N(x) ∩ N(y)|.
/// Both orientations of each path are considered since the subtracted term
/// is asymmetric. Applicable iff some vertex has two neighbors.
BoundEvaluation bound_path(const Graph& g);

/// min over vertices u whose removal does not lower gamma_r of
/// d(u) - gamma_r(G-u) + gamma_r(G). Inapplicable when every vertex lowers
/// it. Throws on disconnected input or fewer than 2 vertices.
BoundEvaluation bound_critical_vertex(const Graph& g);
BoundEvaluation bound_critical_vertex(const Graph& g, const ImpactAnalysis& impacts);

/// 2*avg_degree + max_degree - 3, exact. Inapplicable when disconnected or
/// max_degree < 2.
BoundEvaluation bound_avg_degree(const Graph& g);

/// (4k/(k-2))(1 - chi/n) + max_degree - 3 for girth k, plus the weakened
/// -12chi/n + max_degree + 9 as relaxed_value, plus whether the avg-degree
/// premise ad <= (2k/(k-2))(1 - chi/n) holds. Needs connectivity,
/// max_degree >= 2, a cycle, and a declared chi.
BoundEvaluation bound_girth_euler(const Graph& g, const EmbeddingInfo& emb);

/// The flat bound 15 for connected graphs with max_degree >= 2 on a
/// declared surface of nonnegative Euler characteristic.
BoundEvaluation bound_surface15(const Graph& g, const EmbeddingInfo& emb);

/// floor((5 + sqrt(49 - 24*chi)) / 2), exact integer arithmetic; the
/// largest min degree a graph on a surface with characteristic chi <= 1 can
/// have. Throws for chi > 1.
int delta_max_bound(int chi);

enum class CheckId { Rv1Sandwich, VvvI, VvvII, Vc, HraPair, SgzAd, EdgeSum11 };

enum class CheckVerdict { Holds, Violated, Inapplicable };

struct CheckOutcome {
    CheckId id;
    CheckVerdict verdict;
    std::string detail;  // witness / counter-witness / inapplicability reason
};

/// Verifies one structural statement exhaustively on the given graph:
///   RV1_SANDWICH  every single-edge removal keeps gamma_r within +1
///   VVV_I         vertices whose removal raises gamma_r are labeled 2 with
///                 at least 3 private 0-neighbors in every optimal labeling
///   VVV_II        single-vertex removal never drops gamma_r by 2 or more
///   VC            removal lowers gamma_r iff some optimal labeling uses 1
///   HRA_PAIR      some pair at distance <= 2 has degree sum <= 2*avg
///   SGZ_AD        avg degree <= (2k/(k-2))(1 - chi/n)
///   EDGE_SUM_11   min degree >= 5 on chi >= 0 forces an edge with degree
///                 sum <= 11 (requires max_degree >= 7 when chi = 0)
CheckOutcome theorem_check(const Graph& g, const EmbeddingInfo& emb, CheckId id);

const char* check_name(CheckId id);
std::optional<CheckId> check_from_name(const std::string& name);
const char* bound_name(BoundId id);

}  // namespace rbond
