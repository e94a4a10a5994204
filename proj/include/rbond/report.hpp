#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rbond/bondage.hpp"
#include "rbond/bounds.hpp"
#include "rbond/graph.hpp"

namespace rbond {

using Json = nlohmann::ordered_json;

/// Everything computed for one corpus graph. Optional members are stages
/// that were skipped (or do not apply, e.g. degrees of the empty graph);
/// they serialize as explicit nulls so every record carries the same keys.
struct GraphReport {
    std::string id;
    int n = 0;
    long long m = 0;
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::optional<Rational> avg_degree;
    Girth girth_value = Girth::infinite();
    std::optional<int> gamma;
    std::optional<int> gamma_r;
    std::optional<BondageResult> bondage;
    std::optional<ImpactPartition> impacts;
    std::vector<BoundEvaluation> bounds;  // at most one entry per BoundId
    std::vector<CheckOutcome> checks;     // at most one entry per CheckId
    std::vector<std::pair<std::string, double>> timings_ms;
};

/// Fixed key order: id, n, m, delta, Delta, ad, girth, gamma, gamma_r,
/// bondage, v_minus_size, v_zero_size, v_plus_size, bounds, checks,
/// timings_ms. Rationals render as "p/q" strings, girth as an integer or
/// "inf", and skipped stages as nulls; bound and check sub-objects always
/// carry all five / all seven keys.
Json report_json(const GraphReport& report);

/// report_json rendered on a single line (JSON-lines record).
std::string report_line(const GraphReport& report);

/// The same record with the run-dependent timing values removed, for
/// byte-level determinism comparisons.
Json strip_timings(Json record);

std::string csv_header();
std::string csv_row(const GraphReport& report);

/// "EXACT", "LOWER_BOUND_ONLY", or "UNDEFINED".
const char* bondage_status_name(BondageStatus status);

/// "HOLDS", "VIOLATED", or "INAPPLICABLE".
const char* check_verdict_name(CheckVerdict verdict);

}  // namespace rbond
