#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbond/corpus.hpp"
#include "rbond/report.hpp"

namespace rbond {

/// Which per-graph stages a run computes. Stages a graph cannot support
/// (empty graph, beyond the exact-solver limit) degrade to null report
/// fields rather than errors.
struct StageSet {
    bool solve = false;    // gamma and gamma_r
    bool impacts = false;  // vertex-removal partition
    bool bondage = false;
    bool bounds = false;
    std::vector<CheckId> checks;

    static StageSet all();
    static StageSet none();
};

struct CampaignConfig {
    // Corpus sources, processed in order: input file, then generator specs,
    // then exhaustive enumeration. Any subset may be present.
    std::optional<std::string> input_path;
    CorpusFormat format = CorpusFormat::Graph6;
    bool strict = false;
    std::vector<std::string> generator_specs;       // "family:p1,p2"
    std::optional<std::pair<int, int>> exhaustive;  // inclusive order range
    bool connected_only = false;

    StageSet stages = StageSet::all();
    std::optional<int> bondage_cap;

    std::optional<std::string> out_path;  // JSON lines; default: the stream
    std::optional<std::string> csv_path;
    int workers = 1;
};

struct CampaignItem {
    std::string id;
    Graph graph;
    EmbeddingInfo embedding;
};

/// Streams the configured corpus in order; the sink returns false to stop
/// early. Lenient-mode corpus warnings go to diag. Throws on unreadable
/// input or a bad generator spec.
void for_each_item(const CampaignConfig& config,
                   const std::function<bool(const CampaignItem&)>& sink,
                   std::ostream& diag);

/// Runs the selected stages on one graph and assembles the report,
/// including per-stage wall-clock timings.
GraphReport compute_report(const CampaignItem& item, const StageSet& stages,
                           std::optional<int> bondage_cap);

/// One report per corpus graph, in corpus order, as JSON lines (to out_path
/// when set, otherwise to out) plus an optional CSV summary. Records are
/// computed by `workers` threads in chunks and re-emitted in input order,
/// so output is deterministic for a fixed config and corpus (timings
/// aside). Returns 0 when no check is VIOLATED and every applicable bound
/// is >= an EXACT bondage value, 1 otherwise, 2 on config or I/O errors
/// (reported on diag).
int run_campaign(const CampaignConfig& config, std::ostream& out, std::ostream& diag);

class PredicateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Boolean predicate over report fields:
///   comparison := operand (= | != | < | <= | > | >=) operand
///   expression := comparisons combined with AND, OR, parentheses
/// An operand is a dotted report field (n, Delta, bondage.value,
/// bounds.path.value, checks.VC.verdict, ...) or a literal: integer,
/// rational p/q, inf, true/false, a bare or double-quoted string. Numeric
/// comparisons are exact rational; inf compares above every number; null
/// fields match nothing. Unknown words that name neither a field nor a
/// plausible literal are parse errors.
class Predicate {
  public:
    struct Node;  // expression tree; internal to the implementation

    static Predicate parse(const std::string& text);  // throws PredicateError
    bool matches(const Json& report) const;
    /// Dotted field paths the predicate reads, in first-use order.
    const std::vector<std::string>& fields() const { return fields_; }

  private:
    Predicate() = default;
    std::shared_ptr<const Node> root_;
    std::vector<std::string> fields_;
};

/// The stages a hunt needs to evaluate a predicate touching these fields.
StageSet stages_for_fields(const std::vector<std::string>& fields);

/// Streams the corpus, reporting the first graph whose report satisfies the
/// predicate: prints its graph6 encoding and its report line, then returns
/// 1. Prints NONE and returns 0 when the corpus is exhausted without a
/// match; 2 on config, I/O, or predicate errors.
int run_hunt(const CampaignConfig& config, const std::string& predicate_text,
             std::ostream& out, std::ostream& diag);

/// Worker-count resolution: explicit flag, else the RB_WORKERS environment
/// variable, else the hardware concurrency (at least 1).
int resolve_worker_count(std::optional<int> flag_value);

}  // namespace rbond
