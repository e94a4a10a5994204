#include "rbond/report.hpp"

#include <sstream>

namespace rbond {

namespace {

Json rational_json(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return to_string(*r);
}

Json opt_json(const std::optional<int>& v) {
    if (!v) return nullptr;
    return *v;
}

Json girth_json(const Girth& g) {
    if (!g.is_finite()) return "inf";
    return g.length();
}

Json bondage_json(const std::optional<BondageResult>& b) {
    if (!b) return nullptr;
    Json out = Json::object();
    out["status"] = bondage_status_name(b->status);
    out["value"] = opt_json(b->value);
    out["witness_edges"] = b->witness_edge_indices;
    return out;
}

Json bound_json(const BoundEvaluation& e) {
    Json out = Json::object();
    out["applicable"] = e.applicable;
    out["reason"] = e.applicable ? Json(nullptr) : Json(e.reason);
    out["value"] = rational_json(e.value);
    if (std::holds_alternative<PathTriple>(e.witness)) {
        const auto& t = std::get<PathTriple>(e.witness);
        out["witness"] = Json::array({t.x, t.y, t.z});
    } else if (std::holds_alternative<int>(e.witness)) {
        out["witness"] = std::get<int>(e.witness);
    } else {
        out["witness"] = nullptr;
    }
    out["relaxed_value"] = rational_json(e.relaxed_value);
    out["premise_holds"] = e.premise_holds ? Json(*e.premise_holds) : Json(nullptr);
    return out;
}

Json check_json(const CheckOutcome& c) {
    Json out = Json::object();
    out["verdict"] = check_verdict_name(c.verdict);
    out["detail"] = c.detail;
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_csv(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

const char* bondage_status_name(BondageStatus status) {
    switch (status) {
        case BondageStatus::Exact: return "EXACT";
        case BondageStatus::LowerBoundOnly: return "LOWER_BOUND_ONLY";
        case BondageStatus::Undefined: return "UNDEFINED";
    }
    throw std::invalid_argument("unknown bondage status");
}

const char* check_verdict_name(CheckVerdict verdict) {
    switch (verdict) {
        case CheckVerdict::Holds: return "HOLDS";
        case CheckVerdict::Violated: return "VIOLATED";
        case CheckVerdict::Inapplicable: return "INAPPLICABLE";
    }
    throw std::invalid_argument("unknown check verdict");
}

Json report_json(const GraphReport& report) {
    Json out = Json::object();
    out["id"] = report.id;
    out["n"] = report.n;
    out["m"] = report.m;
    out["delta"] = opt_json(report.min_degree);
    out["Delta"] = opt_json(report.max_degree);
    out["ad"] = rational_json(report.avg_degree);
    out["girth"] = girth_json(report.girth_value);
    out["gamma"] = opt_json(report.gamma);
    out["gamma_r"] = opt_json(report.gamma_r);
    out["bondage"] = bondage_json(report.bondage);
    if (report.impacts) {
        out["v_minus_size"] = report.impacts->v_minus.size();
        out["v_zero_size"] = report.impacts->v_zero.size();
        out["v_plus_size"] = report.impacts->v_plus.size();
    } else {
        out["v_minus_size"] = nullptr;
        out["v_zero_size"] = nullptr;
        out["v_plus_size"] = nullptr;
    }
    Json bounds = Json::object();
    for (BoundId id : {BoundId::Path, BoundId::CriticalVertex, BoundId::AvgDegree,
                       BoundId::GirthEuler, BoundId::Surface15}) {
        const BoundEvaluation* found = nullptr;
        for (const auto& e : report.bounds)
            if (e.id == id) found = &e;
        bounds[bound_name(id)] = found ? bound_json(*found) : Json(nullptr);
    }
    out["bounds"] = bounds;
    Json checks = Json::object();
    for (CheckId id : {CheckId::Rv1Sandwich, CheckId::VvvI, CheckId::VvvII, CheckId::Vc,
                       CheckId::HraPair, CheckId::SgzAd, CheckId::EdgeSum11}) {
        const CheckOutcome* found = nullptr;
        for (const auto& c : report.checks)
            if (c.id == id) found = &c;
        checks[check_name(id)] = found ? check_json(*found) : Json(nullptr);
    }
    out["checks"] = checks;
    Json timings = Json::object();
    for (const auto& [name, ms] : report.timings_ms) timings[name] = ms;
    out["timings_ms"] = timings;
    return out;
}

std::string report_line(const GraphReport& report) { return report_json(report).dump(); }

Json strip_timings(Json record) {
    record["timings_ms"] = nullptr;
    return record;
}

std::string csv_header() {
    return "id,n,m,delta,Delta,ad,girth,gamma,gamma_r,bondage_status,bondage_value,"
           "v_minus_size,v_zero_size,v_plus_size,violated_checks";
}

std::string csv_row(const GraphReport& report) {
    std::ostringstream out;
    out << csv_escape(report.id) << ',' << report.n << ',' << report.m << ','
        << opt_csv(report.min_degree) << ',' << opt_csv(report.max_degree) << ',';
    if (report.avg_degree) out << to_string(*report.avg_degree);
    out << ',';
    if (report.girth_value.is_finite())
        out << report.girth_value.length();
    else
        out << "inf";
    out << ',' << opt_csv(report.gamma) << ',' << opt_csv(report.gamma_r) << ',';
    if (report.bondage) {
        out << bondage_status_name(report.bondage->status) << ','
            << opt_csv(report.bondage->value);
    } else {
        out << ',';
    }
    out << ',';
    if (report.impacts) {
        out << report.impacts->v_minus.size() << ',' << report.impacts->v_zero.size()
            << ',' << report.impacts->v_plus.size();
    } else {
        out << ",,";
    }
    out << ',';
    if (!report.checks.empty()) {
        int violated = 0;
        for (const auto& c : report.checks)
            if (c.verdict == CheckVerdict::Violated) ++violated;
        out << violated;
    }
    return out.str();
}

}  // namespace rbond
