#include "rbond/families.hpp"

#include <stdexcept>

namespace rbond {

namespace {

const EmbeddingInfo kPlanar = EmbeddingInfo::orientable(0);
const EmbeddingInfo kToroidal = EmbeddingInfo::orientable(1);

void expect_params(const std::string& family, const std::vector<long long>& params,
                   std::size_t count) {
    if (params.size() != count)
        throw std::invalid_argument("family '" + family + "' takes " + std::to_string(count) +
                                    " parameter(s), got " + std::to_string(params.size()));
}

long long check_positive(const std::string& family, long long value) {
    if (value < 1)
        throw std::invalid_argument("family '" + family + "' requires positive parameters");
    return value;
}

GeneratedGraph make(const Graph& g, const EmbeddingInfo& emb, std::string name) {
    return {g, emb, std::move(name)};
}

Graph icosahedron_graph() {
    // Vertex 0 apex, 1..5 upper ring, 6..10 lower ring, 11 antipode.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5;
        int l = 6 + i, ln = 6 + (i + 1) % 5;
        edges.emplace_back(0, u);
        edges.emplace_back(u, un);
        edges.emplace_back(l, ln);
        edges.emplace_back(u, l);
        edges.emplace_back(u, ln);
        edges.emplace_back(11, l);
    }
    return build_graph(12, edges);
}

}  // namespace

GeneratedGraph generate(const std::string& family, const std::vector<long long>& params) {
    for (long long p : params) check_positive(family, p);
    if (family == "path") {
        expect_params(family, params, 1);
        int n = static_cast<int>(params[0]);
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return make(build_graph(n, edges), kPlanar, "path(" + std::to_string(n) + ")");
    }
    if (family == "cycle") {
        expect_params(family, params, 1);
        int n = static_cast<int>(params[0]);
        if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return make(build_graph(n, edges), kPlanar, "cycle(" + std::to_string(n) + ")");
    }
    if (family == "complete") {
        expect_params(family, params, 1);
        int n = static_cast<int>(params[0]);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        // K5 and up are not planar; no embedding is inferred for them.
        return make(build_graph(n, edges), n <= 4 ? kPlanar : EmbeddingInfo::undeclared(),
                    "complete(" + std::to_string(n) + ")");
    }
    if (family == "star") {
        expect_params(family, params, 1);
        int k = static_cast<int>(params[0]);
        std::vector<Edge> edges;
        for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
        return make(build_graph(k + 1, edges), kPlanar, "star(" + std::to_string(k) + ")");
    }
    if (family == "grid") {
        expect_params(family, params, 2);
        int a = static_cast<int>(params[0]), b = static_cast<int>(params[1]);
        std::vector<Edge> edges;
        auto at = [b](int i, int j) { return i * b + j; };
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                if (j + 1 < b) edges.emplace_back(at(i, j), at(i, j + 1));
                if (i + 1 < a) edges.emplace_back(at(i, j), at(i + 1, j));
            }
        }
        return make(build_graph(a * b, edges), kPlanar,
                    "grid(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (family == "toroidal_grid") {
        expect_params(family, params, 2);
        int a = static_cast<int>(params[0]), b = static_cast<int>(params[1]);
        if (a < 3 || b < 3) throw std::invalid_argument("toroidal_grid requires a, b >= 3");
        std::vector<Edge> edges;
        auto at = [b](int i, int j) { return i * b + j; };
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                edges.emplace_back(at(i, j), at(i, (j + 1) % b));
                edges.emplace_back(at(i, j), at((i + 1) % a, j));
            }
        }
        return make(build_graph(a * b, edges), kToroidal,
                    "toroidal_grid(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (family == "icosahedron") {
        expect_params(family, params, 0);
        return make(icosahedron_graph(), kPlanar, "icosahedron");
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

GeneratedGraph generate_from_spec(const std::string& spec) {
    std::string family = spec;
    std::vector<long long> params;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        family = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string token = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
            try {
                std::size_t used = 0;
                params.push_back(std::stoll(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad family parameter '" + token + "' in '" + spec +
                                            "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return generate(family, params);
}

Graph hat_construction(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("hat construction requires at least 2 vertices");
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < n; ++i) {
        int p1 = n + 4 * i, p2 = n + 4 * i + 1, p4 = n + 4 * i + 2, p5 = n + 4 * i + 3;
        edges.emplace_back(p1, p2);
        edges.emplace_back(p2, i);
        edges.emplace_back(i, p4);
        edges.emplace_back(p4, p5);
    }
    return build_graph(5 * n, edges);
}

}  // namespace rbond
