#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rbond/graph.hpp"

namespace rbond {

enum class CorpusFormat { Graph6, EdgeList };

struct CorpusRecord {
    std::string id;  // "L<line>" keyed by the line the record starts on
    Graph graph;
    EmbeddingInfo embedding;
    long source_line;
};

struct CorpusLoadResult {
    std::vector<CorpusRecord> records;
    std::vector<std::string> warnings;  // lenient-mode skips, one message each
};

class CorpusError : public std::runtime_error {
  public:
    CorpusError(const std::string& msg, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

/// Graph6: one record per non-blank line. Edge list: records are an
/// "n m" header followed by m "u v" lines; a '#' comment line directly
/// before or inside a record may declare embedding metadata
/// (chi=<int> orientable=<bool> genus=<int>, any subset with chi alone or
/// orientable+genus making sense). Strict mode throws CorpusError on the
/// first malformed record; lenient mode skips it and logs a warning.
CorpusLoadResult parse_corpus_text(const std::string& text, CorpusFormat format, bool strict);

CorpusLoadResult load_corpus(const std::string& path, CorpusFormat format, bool strict);

}  // namespace rbond
