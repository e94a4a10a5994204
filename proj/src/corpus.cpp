#include "rbond/corpus.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "rbond/graph6.hpp"

namespace rbond {

namespace {

struct PendingEmbedding {
    std::optional<int> chi;
    std::optional<bool> orientable;
    std::optional<int> genus;
    bool any() const { return chi || orientable || genus; }
};

// '#' lines are comments; ones carrying recognized key=value tokens declare
// embedding metadata for the record they precede or sit inside.
PendingEmbedding parse_metadata_comment(const std::string& line, long line_no) {
    PendingEmbedding pending;
    std::istringstream in(line.substr(1));
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        try {
            if (key == "chi") {
                pending.chi = std::stoi(value);
            } else if (key == "genus") {
                pending.genus = std::stoi(value);
            } else if (key == "orientable") {
                if (value == "true")
                    pending.orientable = true;
                else if (value == "false")
                    pending.orientable = false;
                else
                    throw std::invalid_argument(value);
            }
        } catch (const std::exception&) {
            throw CorpusError("bad metadata value in '" + token + "'", line_no);
        }
    }
    return pending;
}

EmbeddingInfo resolve_embedding(const PendingEmbedding& p, long line_no) {
    if (!p.any()) return EmbeddingInfo::undeclared();
    if (p.orientable.has_value()) {
        int genus;
        if (p.genus) {
            genus = *p.genus;
        } else if (p.chi) {
            // Derive the genus from chi when it divides out exactly.
            if (*p.orientable) {
                if ((2 - *p.chi) % 2 != 0)
                    throw CorpusError("orientable surface needs even 2-chi", line_no);
                genus = (2 - *p.chi) / 2;
            } else {
                genus = 2 - *p.chi;
            }
        } else {
            throw CorpusError("orientable= needs genus= or chi=", line_no);
        }
        EmbeddingInfo emb;
        try {
            emb = *p.orientable ? EmbeddingInfo::orientable(genus)
                                : EmbeddingInfo::non_orientable(genus);
        } catch (const std::exception& e) {
            throw CorpusError(e.what(), line_no);
        }
        if (p.chi && *p.chi != *emb.chi)
            throw CorpusError("declared chi contradicts surface kind and genus", line_no);
        return emb;
    }
    if (p.genus) throw CorpusError("genus= needs orientable=", line_no);
    return EmbeddingInfo::chi_only(*p.chi);
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void parse_graph6_lines(const std::vector<std::string>& lines, bool strict,
                        CorpusLoadResult& out) {
    for (std::size_t k = 0; k < lines.size(); ++k) {
        long line_no = static_cast<long>(k) + 1;
        const std::string& line = lines[k];
        if (is_blank(line) || line[0] == '#') continue;
        try {
            Graph g = parse_graph6(line);
            out.records.push_back(
                {"L" + std::to_string(line_no), g, EmbeddingInfo::undeclared(), line_no});
        } catch (const std::exception& e) {
            if (strict) throw CorpusError(e.what(), line_no);
            out.warnings.push_back("line " + std::to_string(line_no) + " skipped: " + e.what());
        }
    }
}

void parse_edge_list_lines(const std::vector<std::string>& lines, bool strict,
                           CorpusLoadResult& out) {
    PendingEmbedding pending;
    std::size_t k = 0;
    auto fail = [&](const std::string& msg, long line_no) {
        if (strict) throw CorpusError(msg, line_no);
        out.warnings.push_back("line " + std::to_string(line_no) + " skipped: " + msg);
    };
    while (k < lines.size()) {
        long line_no = static_cast<long>(k) + 1;
        const std::string& line = lines[k];
        if (is_blank(line)) {
            ++k;
            continue;
        }
        if (line[0] == '#') {
            try {
                PendingEmbedding p = parse_metadata_comment(line, line_no);
                if (p.any()) pending = p;
            } catch (const CorpusError& e) {
                ++k;
                fail(e.what(), line_no);
                continue;
            }
            ++k;
            continue;
        }
        // Header "n m".
        long long n, m;
        char extra;
        std::istringstream header(line);
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
            ++k;
            fail("malformed edge list header '" + line + "'", line_no);
            continue;
        }
        if (n > 100000000 || m > 400000000) {
            ++k;
            fail("edge list header too large '" + line + "'", line_no);
            continue;
        }
        std::vector<Edge> edges;
        bool bad = false;
        std::size_t next = k + 1;
        while (static_cast<long long>(edges.size()) < m && next < lines.size()) {
            long edge_line_no = static_cast<long>(next) + 1;
            const std::string& el = lines[next];
            if (is_blank(el)) {
                ++next;
                continue;
            }
            if (el[0] == '#') {
                try {
                    PendingEmbedding p = parse_metadata_comment(el, edge_line_no);
                    if (p.any()) pending = p;
                } catch (const CorpusError& e) {
                    bad = true;
                    fail(e.what(), edge_line_no);
                    break;
                }
                ++next;
                continue;
            }
            long long u, v;
            std::istringstream edge_in(el);
            if (!(edge_in >> u >> v) || (edge_in >> extra)) {
                bad = true;
                fail("malformed edge line '" + el + "'", edge_line_no);
                break;
            }
            if (u < 0 || u >= n || v < 0 || v >= n) {
                bad = true;
                fail("edge endpoint out of range '" + el + "'", edge_line_no);
                break;
            }
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            ++next;
        }
        if (!bad && static_cast<long long>(edges.size()) < m) {
            bad = true;
            fail("record truncated: expected " + std::to_string(m) + " edges", line_no);
        }
        if (!bad) {
            try {
                Graph g = build_graph(static_cast<int>(n), edges);
                EmbeddingInfo emb = resolve_embedding(pending, line_no);
                out.records.push_back({"L" + std::to_string(line_no), g, emb, line_no});
            } catch (const std::exception& e) {
                bad = true;
                fail(e.what(), line_no);
            }
        }
        pending = {};
        k = next > k ? next : k + 1;
    }
}

}  // namespace

CorpusLoadResult parse_corpus_text(const std::string& text, CorpusFormat format, bool strict) {
    std::vector<std::string> lines;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current)) lines.push_back(strip_cr(current));

    CorpusLoadResult out;
    if (format == CorpusFormat::Graph6)
        parse_graph6_lines(lines, strict, out);
    else
        parse_edge_list_lines(lines, strict, out);
    return out;
}

CorpusLoadResult load_corpus(const std::string& path, CorpusFormat format, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus_text(buffer.str(), format, strict);
}

}  // namespace rbond
