#include "rbond/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <set>
#include <thread>

#include "rbond/families.hpp"
#include "rbond/graph6.hpp"
#include "rbond/roman.hpp"

namespace rbond {

namespace {

constexpr int kSolveLimit = 64;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

BoundEvaluation skipped_critical_vertex(int n, bool connected) {
    BoundEvaluation e;
    e.id = BoundId::CriticalVertex;
    e.applicable = false;
    if (n < 2)
        e.reason = "needs at least 2 vertices";
    else if (n > kSolveLimit)
        e.reason = "exceeds exact-solver limit";
    else if (!connected)
        e.reason = "disconnected";
    return e;
}

int violated_checks(const GraphReport& r, std::ostream& diag) {
    int count = 0;
    for (const auto& c : r.checks)
        if (c.verdict == CheckVerdict::Violated) {
            diag << "check violation on " << r.id << ": " << check_name(c.id) << ": "
                 << c.detail << "\n";
            ++count;
        }
    return count;
}

/// An applicable bound smaller than a certified exact bondage value means
/// one of the implementations (or a declared embedding) is wrong; the
/// campaign treats it like a VIOLATED check.
int soundness_failures(GraphReport& r, std::ostream& diag) {
    if (!r.bondage || r.bondage->status != BondageStatus::Exact || !r.bondage->value)
        return 0;
    Rational exact(*r.bondage->value);
    int failures = 0;
    for (auto& e : r.bounds) {
        if (!e.applicable) continue;
        e.exact_b_r = *r.bondage;
        if (e.value && exact > *e.value) {
            diag << "bound soundness violation on " << r.id << ": " << bound_name(e.id)
                 << " = " << to_string(*e.value) << " < b_R = " << *r.bondage->value
                 << "\n";
            ++failures;
        }
        if (e.relaxed_value && exact > *e.relaxed_value) {
            diag << "bound soundness violation on " << r.id << ": relaxed "
                 << bound_name(e.id) << " = " << to_string(*e.relaxed_value)
                 << " < b_R = " << *r.bondage->value << "\n";
            ++failures;
        }
    }
    return failures;
}

}  // namespace

StageSet StageSet::all() {
    StageSet s;
    s.solve = s.impacts = s.bondage = s.bounds = true;
    s.checks = {CheckId::Rv1Sandwich, CheckId::VvvI, CheckId::VvvII, CheckId::Vc,
                CheckId::HraPair,     CheckId::SgzAd, CheckId::EdgeSum11};
    return s;
}

StageSet StageSet::none() { return {}; }

void for_each_item(const CampaignConfig& config,
                   const std::function<bool(const CampaignItem&)>& sink,
                   std::ostream& diag) {
    if (config.input_path) {
        CorpusLoadResult loaded =
            load_corpus(*config.input_path, config.format, config.strict);
        for (const auto& warning : loaded.warnings) diag << "warning: " << warning << "\n";
        for (const auto& rec : loaded.records)
            if (!sink({rec.id, rec.graph, rec.embedding})) return;
    }
    for (const auto& spec : config.generator_specs) {
        GeneratedGraph gen = generate_from_spec(spec);
        if (!sink({gen.name, gen.graph, gen.embedding})) return;
    }
    if (config.exhaustive) {
        auto [lo, hi] = *config.exhaustive;
        if (lo < 1 || lo > hi || hi > 7)
            throw std::invalid_argument(
                "exhaustive order range must satisfy 1 <= a <= b <= 7");
        bool keep = true;
        for (int n = lo; n <= hi && keep; ++n)
            enumerate_small_graphs(n, config.connected_only, [&](const Graph& g) {
                keep = sink({write_graph6(g), g, EmbeddingInfo::undeclared()});
                return keep;
            });
    }
}

GraphReport compute_report(const CampaignItem& item, const StageSet& stages,
                           std::optional<int> bondage_cap) {
    const Graph& g = item.graph;
    GraphReport r;
    r.id = item.id;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    if (r.n > 0) {
        DegreeProfile profile = degree_profile(g);
        r.min_degree = profile.min_degree;
        r.max_degree = profile.max_degree;
        r.avg_degree = profile.average_degree;
    }
    r.girth_value = girth(g);

    auto total_start = std::chrono::steady_clock::now();
    bool solvable = r.n >= 1 && r.n <= kSolveLimit;
    bool removable = r.n >= 2 && r.n <= kSolveLimit;
    std::optional<ImpactAnalysis> analysis;

    if (stages.solve && solvable) {
        auto start = std::chrono::steady_clock::now();
        r.gamma = gamma_exact(g).value;
        r.gamma_r = gamma_r_exact(g).value;
        r.timings_ms.emplace_back("solve", elapsed_ms(start));
    }
    if (stages.impacts && removable) {
        auto start = std::chrono::steady_clock::now();
        analysis = analyze_impacts(g);
        r.impacts = analysis->partition;
        r.timings_ms.emplace_back("impacts", elapsed_ms(start));
    }
    if (stages.bondage && solvable) {
        auto start = std::chrono::steady_clock::now();
        if (r.m == 0) {
            // No edges to remove: gamma_r can never change, matching the
            // gamma_r(G) = n short-circuit inside the search.
            BondageResult none;
            none.status = BondageStatus::Undefined;
            none.cap_used = 0;
            r.bondage = none;
        } else {
            r.bondage = roman_bondage(g, bondage_cap);
        }
        r.timings_ms.emplace_back("bondage", elapsed_ms(start));
    }
    if (stages.bounds) {
        auto start = std::chrono::steady_clock::now();
        r.bounds.push_back(bound_path(g));
        bool connected = r.n >= 1 && is_connected(g);
        if (removable && connected) {
            if (!analysis) analysis = analyze_impacts(g);
            r.bounds.push_back(bound_critical_vertex(g, *analysis));
        } else {
            r.bounds.push_back(skipped_critical_vertex(r.n, connected));
        }
        r.bounds.push_back(bound_avg_degree(g));
        r.bounds.push_back(bound_girth_euler(g, item.embedding));
        r.bounds.push_back(bound_surface15(g, item.embedding));
        r.timings_ms.emplace_back("bounds", elapsed_ms(start));
    }
    if (!stages.checks.empty()) {
        auto start = std::chrono::steady_clock::now();
        for (CheckId id : stages.checks)
            r.checks.push_back(theorem_check(g, item.embedding, id));
        r.timings_ms.emplace_back("checks", elapsed_ms(start));
    }
    r.timings_ms.emplace_back("total", elapsed_ms(total_start));
    return r;
}

int run_campaign(const CampaignConfig& config, std::ostream& out, std::ostream& diag) {
    std::ofstream out_file;
    std::ostream* sink = &out;
    if (config.out_path) {
        out_file.open(*config.out_path, std::ios::binary);
        if (!out_file) {
            diag << "cannot open output file: " << *config.out_path << "\n";
            return 2;
        }
        sink = &out_file;
    }
    std::ofstream csv_file;
    if (config.csv_path) {
        csv_file.open(*config.csv_path, std::ios::binary);
        if (!csv_file) {
            diag << "cannot open CSV file: " << *config.csv_path << "\n";
            return 2;
        }
        csv_file << csv_header() << "\n";
    }

    int workers = std::max(1, config.workers);
    const std::size_t chunk_size = static_cast<std::size_t>(workers) * 64;
    std::vector<CampaignItem> chunk;
    chunk.reserve(chunk_size);
    long long violations = 0;

    auto flush = [&]() {
        if (chunk.empty()) return;
        std::vector<GraphReport> results(chunk.size());
        if (workers == 1 || chunk.size() == 1) {
            for (std::size_t i = 0; i < chunk.size(); ++i)
                results[i] = compute_report(chunk[i], config.stages, config.bondage_cap);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::string> errors(static_cast<std::size_t>(workers));
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&, t]() {
                    try {
                        for (std::size_t i = next++; i < chunk.size(); i = next++)
                            results[i] =
                                compute_report(chunk[i], config.stages, config.bondage_cap);
                    } catch (const std::exception& e) {
                        errors[static_cast<std::size_t>(t)] = e.what();
                        next = chunk.size();
                    }
                });
            for (auto& th : pool) th.join();
            for (const auto& err : errors)
                if (!err.empty()) throw std::runtime_error(err);
        }
        for (auto& report : results) {
            violations += violated_checks(report, diag);
            violations += soundness_failures(report, diag);
            *sink << report_line(report) << "\n";
            if (csv_file.is_open()) csv_file << csv_row(report) << "\n";
        }
        chunk.clear();
    };

    try {
        for_each_item(
            config,
            [&](const CampaignItem& item) {
                chunk.push_back(item);
                if (chunk.size() >= chunk_size) flush();
                return true;
            },
            diag);
        flush();
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    }
    sink->flush();
    if (csv_file.is_open()) csv_file.flush();
    return violations > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Predicate parsing and evaluation

namespace {

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct Operand {
    enum class Kind { Field, Literal, StringLit } kind;
    std::string text;
};

struct Value {
    enum class Kind { Null, Num, Inf, Str, Bool } kind = Kind::Null;
    Rational num{};
    std::string str;
    bool truth = false;

    static Value null() { return {}; }
    static Value number(Rational r) {
        Value v;
        v.kind = Kind::Num;
        v.num = r;
        return v;
    }
    static Value inf() {
        Value v;
        v.kind = Kind::Inf;
        return v;
    }
    static Value string(std::string s) {
        Value v;
        v.kind = Kind::Str;
        v.str = std::move(s);
        return v;
    }
    static Value boolean(bool b) {
        Value v;
        v.kind = Kind::Bool;
        v.truth = b;
        return v;
    }
};

bool parse_rational_text(const std::string& text, Rational& out) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t digits_start = i;
    long long numerator = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        numerator = numerator * 10 + (text[i] - '0');
        ++i;
    }
    if (i == digits_start) return false;
    long long denominator = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t denom_start = i;
        denominator = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            denominator = denominator * 10 + (text[i] - '0');
            ++i;
        }
        if (i == denom_start || denominator == 0) return false;
    }
    if (i != text.size()) return false;
    out = Rational(negative ? -numerator : numerator, denominator);
    return true;
}

const std::set<std::string>& known_fields() {
    static const std::set<std::string> fields = [] {
        std::set<std::string> f = {"id",          "n",           "m",
                                   "delta",       "Delta",       "ad",
                                   "girth",       "gamma",       "gamma_r",
                                   "bondage.status", "bondage.value",
                                   "v_minus_size", "v_zero_size", "v_plus_size"};
        for (BoundId id : {BoundId::Path, BoundId::CriticalVertex, BoundId::AvgDegree,
                           BoundId::GirthEuler, BoundId::Surface15}) {
            std::string base = std::string("bounds.") + bound_name(id) + ".";
            for (const char* leaf :
                 {"applicable", "reason", "value", "relaxed_value", "premise_holds"})
                f.insert(base + leaf);
        }
        for (CheckId id : {CheckId::Rv1Sandwich, CheckId::VvvI, CheckId::VvvII,
                           CheckId::Vc, CheckId::HraPair, CheckId::SgzAd,
                           CheckId::EdgeSum11}) {
            std::string base = std::string("checks.") + check_name(id) + ".";
            f.insert(base + "verdict");
            f.insert(base + "detail");
        }
        return f;
    }();
    return fields;
}

bool is_plausible_literal(const std::string& text) {
    if (text == "inf" || text == "true" || text == "false") return true;
    Rational ignored;
    if (parse_rational_text(text, ignored)) return true;
    static const std::set<std::string> enums = {"EXACT",      "LOWER_BOUND_ONLY",
                                                "UNDEFINED",  "HOLDS",
                                                "VIOLATED",   "INAPPLICABLE"};
    return enums.count(text) > 0;
}

Value literal_value(const Operand& operand) {
    if (operand.kind == Operand::Kind::StringLit) return Value::string(operand.text);
    const std::string& text = operand.text;
    if (text == "inf") return Value::inf();
    if (text == "true") return Value::boolean(true);
    if (text == "false") return Value::boolean(false);
    Rational r;
    if (parse_rational_text(text, r)) return Value::number(r);
    return Value::string(text);
}

Value field_value(const Json& report, const std::string& path) {
    const Json* node = &report;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t dot = path.find('.', start);
        std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
        if (!node->is_object() || !node->contains(key)) return Value::null();
        node = &(*node)[key];
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    if (node->is_null()) return Value::null();
    if (node->is_boolean()) return Value::boolean(node->get<bool>());
    if (node->is_number_integer() || node->is_number_unsigned())
        return Value::number(Rational(node->get<std::int64_t>()));
    if (node->is_string()) {
        std::string s = node->get<std::string>();
        if (s == "inf") return Value::inf();
        Rational r;
        if (parse_rational_text(s, r)) return Value::number(r);
        return Value::string(s);
    }
    return Value::null();
}

bool compare_values(const Value& a, CmpOp op, const Value& b) {
    using K = Value::Kind;
    if (a.kind == K::Null || b.kind == K::Null) return false;
    bool numeric_a = a.kind == K::Num || a.kind == K::Inf;
    bool numeric_b = b.kind == K::Num || b.kind == K::Inf;
    if (numeric_a && numeric_b) {
        int cmp;
        if (a.kind == K::Inf && b.kind == K::Inf)
            cmp = 0;
        else if (a.kind == K::Inf)
            cmp = 1;
        else if (b.kind == K::Inf)
            cmp = -1;
        else
            cmp = a.num < b.num ? -1 : (a.num == b.num ? 0 : 1);
        switch (op) {
            case CmpOp::Eq: return cmp == 0;
            case CmpOp::Ne: return cmp != 0;
            case CmpOp::Lt: return cmp < 0;
            case CmpOp::Le: return cmp <= 0;
            case CmpOp::Gt: return cmp > 0;
            case CmpOp::Ge: return cmp >= 0;
        }
        return false;
    }
    if (a.kind == K::Bool && b.kind == K::Bool) {
        if (op == CmpOp::Eq) return a.truth == b.truth;
        if (op == CmpOp::Ne) return a.truth != b.truth;
        return false;
    }
    if (a.kind == K::Str && b.kind == K::Str) {
        if (op == CmpOp::Eq) return a.str == b.str;
        if (op == CmpOp::Ne) return a.str != b.str;
        return false;
    }
    // Kind mismatch: definitely unequal, never ordered.
    return op == CmpOp::Ne;
}

struct Token {
    enum class Kind { LParen, RParen, Op, Word, Quoted, End } kind;
    std::string text;
    CmpOp op = CmpOp::Eq;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", CmpOp::Eq};
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            return {Token::Kind::LParen, "(", CmpOp::Eq};
        }
        if (c == ')') {
            ++pos_;
            return {Token::Kind::RParen, ")", CmpOp::Eq};
        }
        if (c == '<' || c == '>' || c == '=' || c == '!') {
            bool has_eq = pos_ + 1 < text_.size() && text_[pos_ + 1] == '=';
            switch (c) {
                case '<':
                    pos_ += has_eq ? 2 : 1;
                    return {Token::Kind::Op, "", has_eq ? CmpOp::Le : CmpOp::Lt};
                case '>':
                    pos_ += has_eq ? 2 : 1;
                    return {Token::Kind::Op, "", has_eq ? CmpOp::Ge : CmpOp::Gt};
                case '=':
                    pos_ += has_eq ? 2 : 1;  // both = and == mean equality
                    return {Token::Kind::Op, "", CmpOp::Eq};
                case '!':
                    if (!has_eq) throw PredicateError("stray '!' in predicate");
                    pos_ += 2;
                    return {Token::Kind::Op, "", CmpOp::Ne};
            }
        }
        if (c == '"') {
            std::size_t end = text_.find('"', pos_ + 1);
            if (end == std::string::npos)
                throw PredicateError("unterminated string literal");
            std::string body = text_.substr(pos_ + 1, end - pos_ - 1);
            pos_ = end + 1;
            return {Token::Kind::Quoted, body, CmpOp::Eq};
        }
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char w = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(w)) || w == '(' || w == ')' ||
                w == '<' || w == '>' || w == '=' || w == '!')
                break;
            ++pos_;
        }
        return {Token::Kind::Word, text_.substr(start, pos_ - start), CmpOp::Eq};
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

bool word_is(const Token& t, const char* keyword) {
    if (t.kind != Token::Kind::Word) return false;
    if (t.text.size() != std::strlen(keyword)) return false;
    for (std::size_t i = 0; i < t.text.size(); ++i)
        if (std::toupper(static_cast<unsigned char>(t.text[i])) != keyword[i])
            return false;
    return true;
}

}  // namespace

struct Predicate::Node {
    enum class Kind { And, Or, Cmp } kind;
    std::shared_ptr<const Node> left, right;
    Operand lhs{Operand::Kind::Literal, ""}, rhs{Operand::Kind::Literal, ""};
    CmpOp op = CmpOp::Eq;
};

namespace {

class PredicateParser {
  public:
    PredicateParser(const std::string& text, std::vector<std::string>& fields)
        : lexer_(text), fields_(fields) {
        advance();
    }

    std::shared_ptr<const Predicate::Node> parse() {
        auto node = parse_or();
        if (current_.kind != Token::Kind::End)
            throw PredicateError("unexpected trailing input in predicate");
        return node;
    }

  private:
    void advance() { current_ = lexer_.next(); }

    std::shared_ptr<const Predicate::Node> parse_or() {
        auto left = parse_and();
        while (word_is(current_, "OR")) {
            advance();
            auto node = std::make_shared<Predicate::Node>();
            node->kind = Predicate::Node::Kind::Or;
            node->left = left;
            node->right = parse_and();
            left = node;
        }
        return left;
    }

    std::shared_ptr<const Predicate::Node> parse_and() {
        auto left = parse_factor();
        while (word_is(current_, "AND")) {
            advance();
            auto node = std::make_shared<Predicate::Node>();
            node->kind = Predicate::Node::Kind::And;
            node->left = left;
            node->right = parse_factor();
            left = node;
        }
        return left;
    }

    std::shared_ptr<const Predicate::Node> parse_factor() {
        if (current_.kind == Token::Kind::LParen) {
            advance();
            auto inner = parse_or();
            if (current_.kind != Token::Kind::RParen)
                throw PredicateError("missing closing parenthesis");
            advance();
            return inner;
        }
        auto node = std::make_shared<Predicate::Node>();
        node->kind = Predicate::Node::Kind::Cmp;
        node->lhs = parse_operand();
        if (current_.kind != Token::Kind::Op)
            throw PredicateError("expected a comparison operator");
        node->op = current_.op;
        advance();
        node->rhs = parse_operand();
        return node;
    }

    Operand parse_operand() {
        if (current_.kind == Token::Kind::Quoted) {
            Operand out{Operand::Kind::StringLit, current_.text};
            advance();
            return out;
        }
        if (current_.kind != Token::Kind::Word)
            throw PredicateError("expected a field or literal");
        std::string word = current_.text;
        advance();
        if (known_fields().count(word)) {
            if (std::find(fields_.begin(), fields_.end(), word) == fields_.end())
                fields_.push_back(word);
            return {Operand::Kind::Field, word};
        }
        if (is_plausible_literal(word)) return {Operand::Kind::Literal, word};
        throw PredicateError("unknown field or literal: " + word);
    }

    Lexer lexer_;
    Token current_{Token::Kind::End, "", CmpOp::Eq};
    std::vector<std::string>& fields_;
};

bool eval_node(const Predicate::Node& node, const Json& report) {
    switch (node.kind) {
        case Predicate::Node::Kind::And:
            return eval_node(*node.left, report) && eval_node(*node.right, report);
        case Predicate::Node::Kind::Or:
            return eval_node(*node.left, report) || eval_node(*node.right, report);
        case Predicate::Node::Kind::Cmp: {
            Value lhs = node.lhs.kind == Operand::Kind::Field
                            ? field_value(report, node.lhs.text)
                            : literal_value(node.lhs);
            Value rhs = node.rhs.kind == Operand::Kind::Field
                            ? field_value(report, node.rhs.text)
                            : literal_value(node.rhs);
            return compare_values(lhs, node.op, rhs);
        }
    }
    return false;
}

}  // namespace

Predicate Predicate::parse(const std::string& text) {
    Predicate p;
    PredicateParser parser(text, p.fields_);
    p.root_ = parser.parse();
    return p;
}

bool Predicate::matches(const Json& report) const { return eval_node(*root_, report); }

StageSet stages_for_fields(const std::vector<std::string>& fields) {
    StageSet stages = StageSet::none();
    auto starts_with = [](const std::string& s, const char* prefix) {
        return s.rfind(prefix, 0) == 0;
    };
    for (const auto& field : fields) {
        if (field == "gamma" || field == "gamma_r") {
            stages.solve = true;
        } else if (starts_with(field, "bondage.")) {
            stages.bondage = true;
        } else if (field == "v_minus_size" || field == "v_zero_size" ||
                   field == "v_plus_size") {
            stages.impacts = true;
        } else if (starts_with(field, "bounds.")) {
            stages.bounds = true;
        } else if (starts_with(field, "checks.")) {
            std::string rest = field.substr(7);
            std::string name = rest.substr(0, rest.find('.'));
            if (auto id = check_from_name(name)) {
                if (std::find(stages.checks.begin(), stages.checks.end(), *id) ==
                    stages.checks.end())
                    stages.checks.push_back(*id);
            }
        }
    }
    return stages;
}

int run_hunt(const CampaignConfig& config, const std::string& predicate_text,
             std::ostream& out, std::ostream& diag) {
    std::optional<Predicate> predicate;
    try {
        predicate = Predicate::parse(predicate_text);
    } catch (const PredicateError& e) {
        diag << "predicate error: " << e.what() << "\n";
        return 2;
    }
    StageSet stages = stages_for_fields(predicate->fields());

    std::ofstream out_file;
    std::ostream* sink = &out;
    if (config.out_path) {
        out_file.open(*config.out_path, std::ios::binary);
        if (!out_file) {
            diag << "cannot open output file: " << *config.out_path << "\n";
            return 2;
        }
        sink = &out_file;
    }

    bool found = false;
    try {
        for_each_item(
            config,
            [&](const CampaignItem& item) {
                GraphReport report = compute_report(item, stages, config.bondage_cap);
                Json record = report_json(report);
                if (!predicate->matches(record)) return true;
                *sink << write_graph6(item.graph) << "\n" << record.dump() << "\n";
                found = true;
                return false;
            },
            diag);
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    }
    if (!found) *sink << "NONE\n";
    sink->flush();
    return found ? 1 : 0;
}

int resolve_worker_count(std::optional<int> flag_value) {
    if (flag_value && *flag_value >= 1) return *flag_value;
    if (const char* env = std::getenv("RB_WORKERS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1 && parsed <= 1024)
            return static_cast<int>(parsed);
    }
    unsigned hardware = std::thread::hardware_concurrency();
    return hardware > 0 ? static_cast<int>(hardware) : 1;
}

}  // namespace rbond
