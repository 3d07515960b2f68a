#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "netft/matrix.hpp"

namespace netft {

/// Kautz graph on strings of length label_exponent+1 over an alphabet of
/// alphabet_degree+1 symbols with no two consecutive symbols equal.
/// Directed, constant in/out degree alphabet_degree.
struct kautz_spec {
    int alphabet_degree = 3; // M
    int label_exponent = 3;  // N
};

/// Non-periodic rows x cols grid with 4-neighborhood edges. Undirected.
struct lattice_spec {
    int rows = 10;
    int cols = 10;
};

/// Breadth-first tree: 0-based vertex i parents children*i+1 ... children*i+children.
/// Undirected.
struct tree_spec {
    int vertices = 108;
    int children = 3;
};

/// Complete bipartite graph on parts of size n1 and n2. Undirected.
struct bipartite_spec {
    int n1 = 54;
    int n2 = 54;
};

/// Preferential-attachment growth: one vertex to start, each arrival wires
/// a single edge to an existing vertex drawn with probability proportional
/// to degree^power + zero_appeal. Undirected, deterministic given seed.
struct pa_spec {
    int vertices = 108;
    double power = 1.0;
    double zero_appeal = 1.0;
    std::uint64_t seed = 1;
};

using model_spec = std::variant<kautz_spec, lattice_spec, tree_spec, bipartite_spec, pa_spec>;

enum class model_kind { kautz, lattice, tree, bipartite, pa };

model_kind kind_of(const model_spec& spec);
std::string model_name(model_kind kind);
model_kind parse_model_kind(const std::string& name);

/// Kautz is the only directed model.
bool model_directed(model_kind kind);

/// Number of vertices the spec will produce.
std::size_t model_vertex_count(const model_spec& spec);

real_matrix kautz(int alphabet_degree, int label_exponent);
real_matrix lattice(int rows, int cols);
real_matrix tree(int vertices, int children);
real_matrix full_bipartite(int n1, int n2);
real_matrix preferential_attachment(int vertices, double power, double zero_appeal,
                                    std::uint64_t seed);

/// Dispatch to the matching generator.
real_matrix build_model(const model_spec& spec);

} // namespace netft
