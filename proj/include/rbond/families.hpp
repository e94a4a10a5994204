#pragma once

#include <string>
#include <vector>

#include "rbond/graph.hpp"

namespace rbond {

struct GeneratedGraph {
    Graph graph;
    EmbeddingInfo embedding;
    std::string name;  // canonical "family(params)" form
};

/// Named families:
///   path:n (n>=1), cycle:n (n>=3), complete:n (n>=1), star:k (K_{1,k}, k>=1,
///   center at index 0), grid:a,b (a,b>=1, row-major), toroidal_grid:a,b
///   (a,b>=3), icosahedron.
/// Planar families (path, cycle, star, grid, complete up to K4, icosahedron)
/// carry an (orientable, genus 0, chi 2) embedding; toroidal_grid carries
/// (orientable, genus 1, chi 0); anything else is undeclared.
GeneratedGraph generate(const std::string& family, const std::vector<long long>& params);

/// Parses "family" or "family:p1,p2" and dispatches to generate().
GeneratedGraph generate_from_spec(const std::string& spec);

/// The 5n-vertex graph obtained by making every vertex of g the center of
/// its own path on five vertices: vertex i keeps its index and gains the arm
/// (n+4i)-(n+4i+1)-i-(n+4i+2)-(n+4i+3). Adds 4n edges. Requires n >= 2.
Graph hat_construction(const Graph& g);

}  // namespace rbond
