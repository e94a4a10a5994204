#include "rbond/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "rbond/roman.hpp"

namespace rbond {

namespace {

BoundEvaluation not_applicable(BoundId id, std::string reason) {
    BoundEvaluation out;
    out.id = id;
    out.applicable = false;
    out.reason = std::move(reason);
    return out;
}

BoundEvaluation applicable(BoundId id) {
    BoundEvaluation out;
    out.id = id;
    out.applicable = true;
    return out;
}

int common_neighbor_count(const Graph& g, int a, int b) {
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    int count = 0;
    auto it = nb.begin();
    for (int x : na) {
        while (it != nb.end() && *it < x) ++it;
        if (it == nb.end()) break;
        if (*it == x) ++count;
    }
    return count;
}

bool share_neighbor(const Graph& g, int a, int b) {
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    auto it = nb.begin();
    for (int x : na) {
        while (it != nb.end() && *it < x) ++it;
        if (it == nb.end()) return false;
        if (*it == x) return true;
    }
    return false;
}

long long isqrt_ll(long long x) {
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Vertices whose removal still needs the graph to remain solvable by the
// exact engine; everything gamma_r-flavoured lives behind this cap.
constexpr int kSolveLimit = 64;

}  // namespace

BoundEvaluation bound_path(const Graph& g) {
    auto paths = length2_paths(g);
    if (paths.empty())
        return not_applicable(BoundId::Path, "no path on 3 vertices (max degree < 2)");
    BoundEvaluation out = applicable(BoundId::Path);
    bool first = true;
    long long best = 0;
    PathTriple chosen{0, 0, 0};
    for (const auto& p : paths) {
        int x = p[0], y = p[1], z = p[2];
        long long base =
            static_cast<long long>(g.degree(x)) + g.degree(y) + g.degree(z) - 3;
        // The common-neighbor discount applies to the first edge of the
        // path, so the two orientations of x-y-z score differently.
        long long forward = base - common_neighbor_count(g, x, y);
        long long backward = base - common_neighbor_count(g, z, y);
        if (first || forward < best) {
            best = forward;
            chosen = {x, y, z};
            first = false;
        }
        if (backward < best) {
            best = backward;
            chosen = {z, y, x};
        }
    }
    out.value = Rational(best);
    out.witness = chosen;
    return out;
}

BoundEvaluation bound_critical_vertex(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("critical-vertex bound needs at least 2 vertices");
    if (!is_connected(g))
        throw std::invalid_argument("critical-vertex bound requires a connected graph");
    return bound_critical_vertex(g, analyze_impacts(g));
}

BoundEvaluation bound_critical_vertex(const Graph& g, const ImpactAnalysis& impacts) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("critical-vertex bound needs at least 2 vertices");
    if (!is_connected(g))
        throw std::invalid_argument("critical-vertex bound requires a connected graph");
    std::vector<int> candidates;
    std::merge(impacts.partition.v_zero.begin(), impacts.partition.v_zero.end(),
               impacts.partition.v_plus.begin(), impacts.partition.v_plus.end(),
               std::back_inserter(candidates));
    if (candidates.empty())
        return not_applicable(BoundId::CriticalVertex,
                              "every vertex removal lowers the value (vertex-critical)");
    BoundEvaluation out = applicable(BoundId::CriticalVertex);
    bool first = true;
    long long best = 0;
    int chosen = -1;
    for (int u : candidates) {
        long long val = static_cast<long long>(g.degree(u)) - impacts.removed_value[u] +
                        impacts.base_value;
        if (first || val < best) {
            best = val;
            chosen = u;
            first = false;
        }
    }
    assert(best <= degree_profile(g).max_degree);
    out.value = Rational(best);
    out.witness = chosen;
    return out;
}

BoundEvaluation bound_avg_degree(const Graph& g) {
    if (g.vertex_count() == 0)
        return not_applicable(BoundId::AvgDegree, "empty graph");
    if (!is_connected(g)) return not_applicable(BoundId::AvgDegree, "disconnected");
    DegreeProfile profile = degree_profile(g);
    if (profile.max_degree < 2)
        return not_applicable(BoundId::AvgDegree, "max degree < 2");
    BoundEvaluation out = applicable(BoundId::AvgDegree);
    out.value = Rational(2) * profile.average_degree + Rational(profile.max_degree - 3);
    return out;
}

BoundEvaluation bound_girth_euler(const Graph& g, const EmbeddingInfo& emb) {
    if (g.vertex_count() == 0)
        return not_applicable(BoundId::GirthEuler, "empty graph");
    if (!is_connected(g)) return not_applicable(BoundId::GirthEuler, "disconnected");
    DegreeProfile profile = degree_profile(g);
    if (profile.max_degree < 2)
        return not_applicable(BoundId::GirthEuler, "max degree < 2");
    if (!emb.chi)
        return not_applicable(BoundId::GirthEuler, "no declared Euler characteristic");
    Girth k = girth(g);
    if (!k.is_finite())
        return not_applicable(BoundId::GirthEuler, "no cycle (forest)");
    long long n = g.vertex_count();
    long long chi = *emb.chi;
    long long len = k.length();
    Rational euler_factor = Rational(1) - Rational(chi, n);
    BoundEvaluation out = applicable(BoundId::GirthEuler);
    out.value =
        Rational(4 * len, len - 2) * euler_factor + Rational(profile.max_degree - 3);
    out.relaxed_value = Rational(-12 * chi, n) + Rational(profile.max_degree + 9);
    out.premise_holds =
        profile.average_degree <= Rational(2 * len, len - 2) * euler_factor;
    return out;
}

BoundEvaluation bound_surface15(const Graph& g, const EmbeddingInfo& emb) {
    if (g.vertex_count() == 0)
        return not_applicable(BoundId::Surface15, "empty graph");
    if (!emb.chi)
        return not_applicable(BoundId::Surface15, "no declared Euler characteristic");
    if (*emb.chi < 0)
        return not_applicable(BoundId::Surface15, "Euler characteristic negative");
    if (!is_connected(g)) return not_applicable(BoundId::Surface15, "disconnected");
    if (degree_profile(g).max_degree < 2)
        return not_applicable(BoundId::Surface15, "max degree < 2");
    BoundEvaluation out = applicable(BoundId::Surface15);
    out.value = Rational(15);
    return out;
}

int delta_max_bound(int chi) {
    if (chi > 1)
        throw std::invalid_argument("min-degree ceiling is only defined for chi <= 1");
    long long root = isqrt_ll(49 - 24LL * chi);
    return static_cast<int>((5 + root) / 2);
}

namespace {

CheckOutcome holds(CheckId id, std::string detail) {
    return {id, CheckVerdict::Holds, std::move(detail)};
}

CheckOutcome violated(CheckId id, std::string detail) {
    return {id, CheckVerdict::Violated, std::move(detail)};
}

CheckOutcome inapplicable(CheckId id, std::string reason) {
    return {id, CheckVerdict::Inapplicable, std::move(reason)};
}

std::string vertex_str(int v) { return std::to_string(v); }

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// f(v) = 2 and at least 3 of v's private neighbors w.r.t. the 2-labeled set
// carry label 0.
bool raises_shape_ok(const Graph& g, const RomanFunction& f, int v) {
    if (f.labels[v] != 2) return false;
    std::vector<int> twos;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (f.labels[u] == 2) twos.push_back(u);
    int zero_private = 0;
    for (int y : private_neighbors(g, v, twos))
        if (f.labels[y] == 0) ++zero_private;
    return zero_private >= 3;
}

CheckOutcome check_rv1(const Graph& g) {
    if (g.vertex_count() == 0) return inapplicable(CheckId::Rv1Sandwich, "empty graph");
    if (g.vertex_count() > kSolveLimit)
        return inapplicable(CheckId::Rv1Sandwich, "exceeds exact-solver limit");
    if (g.edges().empty())
        return holds(CheckId::Rv1Sandwich, "no edges; vacuously holds");
    int base = gamma_r_exact(g).value;
    for (const Edge& e : g.edges()) {
        int v = gamma_r_exact(remove_edges(g, {e})).value;
        if (v < base || v > base + 1)
            return violated(CheckId::Rv1Sandwich, "edge " + edge_str(e) + ": value " +
                                                      std::to_string(v) + " vs base " +
                                                      std::to_string(base));
    }
    return holds(CheckId::Rv1Sandwich, "all " + std::to_string(g.edges().size()) +
                                           " edge removals stay within +1");
}

CheckOutcome check_vvv1(const Graph& g) {
    if (g.vertex_count() < 2)
        return inapplicable(CheckId::VvvI, "vertex removal needs at least 2 vertices");
    if (g.vertex_count() > kSolveLimit)
        return inapplicable(CheckId::VvvI, "exceeds exact-solver limit");
    ImpactAnalysis impacts = analyze_impacts(g);
    const auto& plus = impacts.partition.v_plus;
    if (plus.empty())
        return holds(CheckId::VvvI, "no vertex raises the value; vacuously holds");
    RomanFunction opt = gamma_r_exact(g).witness;
    for (int v : plus)
        if (!raises_shape_ok(g, opt, v))
            return violated(CheckId::VvvI,
                            "vertex " + vertex_str(v) +
                                " lacks label 2 or 3 private 0-neighbors in the "
                                "solver optimum");
    std::string detail = "verified for " + std::to_string(plus.size()) + " vertices";
    if (g.vertex_count() <= 6) {
        auto all = all_gamma_r_functions(g);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (int v : plus)
                if (!raises_shape_ok(g, all[i], v))
                    return violated(CheckId::VvvI, "vertex " + vertex_str(v) +
                                                       " fails in optimal labeling #" +
                                                       std::to_string(i));
        detail += " across " + std::to_string(all.size()) + " optimal labelings";
    }
    return holds(CheckId::VvvI, detail);
}

CheckOutcome check_vvv2(const Graph& g) {
    if (g.vertex_count() < 2)
        return inapplicable(CheckId::VvvII, "vertex removal needs at least 2 vertices");
    if (g.vertex_count() > kSolveLimit)
        return inapplicable(CheckId::VvvII, "exceeds exact-solver limit");
    ImpactAnalysis impacts = analyze_impacts(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (impacts.removed_value[v] < impacts.base_value - 1)
            return violated(CheckId::VvvII,
                            "vertex " + vertex_str(v) + ": value drops from " +
                                std::to_string(impacts.base_value) + " to " +
                                std::to_string(impacts.removed_value[v]));
    return holds(CheckId::VvvII, "no removal drops the value by 2 or more");
}

CheckOutcome check_vc(const Graph& g) {
    if (g.vertex_count() < 2)
        return inapplicable(CheckId::Vc, "vertex removal needs at least 2 vertices");
    if (g.vertex_count() > kSolveLimit)
        return inapplicable(CheckId::Vc, "exceeds exact-solver limit");
    ImpactAnalysis impacts = analyze_impacts(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool lowers = impacts.removed_value[v] < impacts.base_value;
        auto pinned = gamma_r_constrained(g, v, 1);
        bool one_in_optimum =
            pinned.status == SolveStatus::Optimal && pinned.value == impacts.base_value;
        if (lowers != one_in_optimum)
            return violated(CheckId::Vc,
                            "vertex " + vertex_str(v) + ": removal lowers = " +
                                (lowers ? "yes" : "no") + ", optimal labeling with 1 = " +
                                (one_in_optimum ? "yes" : "no"));
    }
    return holds(CheckId::Vc, "equivalence verified for " +
                                  std::to_string(g.vertex_count()) + " vertices");
}

CheckOutcome check_hra(const Graph& g) {
    if (g.vertex_count() < 2)
        return inapplicable(CheckId::HraPair, "needs at least 2 vertices");
    if (!is_connected(g)) return inapplicable(CheckId::HraPair, "disconnected");
    Rational twice_ad = Rational(2) * degree_profile(g).average_degree;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.has_edge(u, v) && !share_neighbor(g, u, v)) continue;
            if (Rational(g.degree(u) + g.degree(v)) <= twice_ad)
                return holds(CheckId::HraPair,
                             "pair (" + vertex_str(u) + "," + vertex_str(v) +
                                 "): degree sum " +
                                 std::to_string(g.degree(u) + g.degree(v)) +
                                 " <= " + to_string(twice_ad));
        }
    return violated(CheckId::HraPair,
                    "no pair within distance 2 has degree sum at most " +
                        to_string(twice_ad));
}

CheckOutcome check_sgz(const Graph& g, const EmbeddingInfo& emb) {
    if (g.vertex_count() == 0) return inapplicable(CheckId::SgzAd, "empty graph");
    if (!emb.chi)
        return inapplicable(CheckId::SgzAd, "no declared Euler characteristic");
    if (!is_connected(g)) return inapplicable(CheckId::SgzAd, "disconnected");
    Girth k = girth(g);
    if (!k.is_finite()) return inapplicable(CheckId::SgzAd, "no cycle (forest)");
    long long len = k.length();
    Rational ceiling = Rational(2 * len, len - 2) *
                       (Rational(1) - Rational(*emb.chi, g.vertex_count()));
    Rational ad = degree_profile(g).average_degree;
    if (ad <= ceiling)
        return holds(CheckId::SgzAd,
                     "avg degree " + to_string(ad) + " <= " + to_string(ceiling));
    return violated(CheckId::SgzAd,
                    "avg degree " + to_string(ad) + " > " + to_string(ceiling));
}

CheckOutcome check_edge_sum(const Graph& g, const EmbeddingInfo& emb) {
    if (g.vertex_count() == 0) return inapplicable(CheckId::EdgeSum11, "empty graph");
    DegreeProfile profile = degree_profile(g);
    if (profile.min_degree < 5)
        return inapplicable(CheckId::EdgeSum11, "min degree < 5");
    if (!emb.chi)
        return inapplicable(CheckId::EdgeSum11, "no declared Euler characteristic");
    if (*emb.chi < 0)
        return inapplicable(CheckId::EdgeSum11, "Euler characteristic negative");
    if (*emb.chi == 0 && profile.max_degree < 7)
        return inapplicable(CheckId::EdgeSum11, "needs max degree >= 7 when chi = 0");
    for (const Edge& e : g.edges()) {
        int sum = g.degree(e.first) + g.degree(e.second);
        if (sum <= 11)
            return holds(CheckId::EdgeSum11, "edge " + edge_str(e) + ": degree sum " +
                                                 std::to_string(sum) + " <= 11");
    }
    return violated(CheckId::EdgeSum11, "every edge has degree sum at least 12");
}

}  // namespace

CheckOutcome theorem_check(const Graph& g, const EmbeddingInfo& emb, CheckId id) {
    switch (id) {
        case CheckId::Rv1Sandwich: return check_rv1(g);
        case CheckId::VvvI: return check_vvv1(g);
        case CheckId::VvvII: return check_vvv2(g);
        case CheckId::Vc: return check_vc(g);
        case CheckId::HraPair: return check_hra(g);
        case CheckId::SgzAd: return check_sgz(g, emb);
        case CheckId::EdgeSum11: return check_edge_sum(g, emb);
    }
    throw std::invalid_argument("unknown check id");
}

const char* check_name(CheckId id) {
    switch (id) {
        case CheckId::Rv1Sandwich: return "RV1_SANDWICH";
        case CheckId::VvvI: return "VVV_I";
        case CheckId::VvvII: return "VVV_II";
        case CheckId::Vc: return "VC";
        case CheckId::HraPair: return "HRA_PAIR";
        case CheckId::SgzAd: return "SGZ_AD";
        case CheckId::EdgeSum11: return "EDGE_SUM_11";
    }
    throw std::invalid_argument("unknown check id");
}

std::optional<CheckId> check_from_name(const std::string& name) {
    for (CheckId id : {CheckId::Rv1Sandwich, CheckId::VvvI, CheckId::VvvII, CheckId::Vc,
                       CheckId::HraPair, CheckId::SgzAd, CheckId::EdgeSum11})
        if (name == check_name(id)) return id;
    return std::nullopt;
}

const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::Path: return "path";
        case BoundId::CriticalVertex: return "critical_vertex";
        case BoundId::AvgDegree: return "avg_degree";
        case BoundId::GirthEuler: return "girth_euler";
        case BoundId::Surface15: return "surface15";
    }
    throw std::invalid_argument("unknown bound id");
}

}  // namespace rbond
