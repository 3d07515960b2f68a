#include "netft/graph_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "netft/rng.hpp"

namespace netft {

model_kind kind_of(const model_spec& spec) {
    struct visitor {
        model_kind operator()(const kautz_spec&) const { return model_kind::kautz; }
        model_kind operator()(const lattice_spec&) const { return model_kind::lattice; }
        model_kind operator()(const tree_spec&) const { return model_kind::tree; }
        model_kind operator()(const bipartite_spec&) const { return model_kind::bipartite; }
        model_kind operator()(const pa_spec&) const { return model_kind::pa; }
    };
    return std::visit(visitor{}, spec);
}

std::string model_name(model_kind kind) {
    switch (kind) {
        case model_kind::kautz: return "kautz";
        case model_kind::lattice: return "lattice";
        case model_kind::tree: return "tree";
        case model_kind::bipartite: return "bipartite";
        case model_kind::pa: return "pa";
    }
    throw invalid_input_error("model_name: unknown kind");
}

model_kind parse_model_kind(const std::string& name) {
    if (name == "kautz") return model_kind::kautz;
    if (name == "lattice") return model_kind::lattice;
    if (name == "tree") return model_kind::tree;
    if (name == "bipartite") return model_kind::bipartite;
    if (name == "pa") return model_kind::pa;
    throw invalid_input_error("unknown model name: " + name);
}

bool model_directed(model_kind kind) { return kind == model_kind::kautz; }

std::size_t model_vertex_count(const model_spec& spec) {
    struct visitor {
        std::size_t operator()(const kautz_spec& s) const {
            std::size_t n = static_cast<std::size_t>(s.alphabet_degree) + 1;
            for (int i = 0; i < s.label_exponent; ++i) n *= static_cast<std::size_t>(s.alphabet_degree);
            return n;
        }
        std::size_t operator()(const lattice_spec& s) const {
            return static_cast<std::size_t>(s.rows) * static_cast<std::size_t>(s.cols);
        }
        std::size_t operator()(const tree_spec& s) const { return static_cast<std::size_t>(s.vertices); }
        std::size_t operator()(const bipartite_spec& s) const {
            return static_cast<std::size_t>(s.n1) + static_cast<std::size_t>(s.n2);
        }
        std::size_t operator()(const pa_spec& s) const { return static_cast<std::size_t>(s.vertices); }
    };
    return std::visit(visitor{}, spec);
}

real_matrix kautz(int alphabet_degree, int label_exponent) {
    if (alphabet_degree < 0 || label_exponent < 0) {
        throw invalid_input_error("kautz: parameters must be non-negative");
    }
    if (alphabet_degree == 0 && label_exponent >= 1) {
        throw invalid_input_error("kautz: no length>=2 strings without repeats over a 1-symbol alphabet");
    }
    const int symbols = alphabet_degree + 1;
    const int len = label_exponent + 1;

    // Enumerate all valid symbol strings in lexicographic order so vertex
    // indices are reproducible byte-for-byte.
    std::vector<std::vector<int>> words;
    std::vector<int> cur(static_cast<std::size_t>(len), 0);
    const auto emit = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            words.push_back(cur);
            return;
        }
        for (int s = 0; s < symbols; ++s) {
            if (pos > 0 && cur[static_cast<std::size_t>(pos - 1)] == s) continue;
            cur[static_cast<std::size_t>(pos)] = s;
            self(self, pos + 1);
        }
    };
    emit(emit, 0);

    const std::size_t n = words.size();
    // Index lookup keyed by the string contents; words is already sorted.
    const auto index_of = [&](const std::vector<int>& w) {
        const auto it = std::lower_bound(words.begin(), words.end(), w);
        return static_cast<std::size_t>(it - words.begin());
    };

    real_matrix a(n, n, 0.0);
    std::vector<int> succ(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(words[i].begin() + 1, words[i].end(), succ.begin());
        for (int s = 0; s < symbols; ++s) {
            if (s == words[i].back()) continue;
            succ.back() = s;
            a(i, index_of(succ)) = 1.0;
        }
    }
    return a;
}

real_matrix lattice(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw invalid_input_error("lattice: rows and cols must be at least 1");
    }
    const std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    real_matrix a(n, n, 0.0);
    const auto id = [cols](int r, int c) {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c);
    };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                a(id(r, c), id(r, c + 1)) = 1.0;
                a(id(r, c + 1), id(r, c)) = 1.0;
            }
            if (r + 1 < rows) {
                a(id(r, c), id(r + 1, c)) = 1.0;
                a(id(r + 1, c), id(r, c)) = 1.0;
            }
        }
    }
    return a;
}

real_matrix tree(int vertices, int children) {
    if (vertices < 1 || children < 1) {
        throw invalid_input_error("tree: vertices and children must be at least 1");
    }
    const std::size_t n = static_cast<std::size_t>(vertices);
    real_matrix a(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 1; k <= children; ++k) {
            const std::size_t child = i * static_cast<std::size_t>(children) + static_cast<std::size_t>(k);
            if (child >= n) break;
            a(i, child) = 1.0;
            a(child, i) = 1.0;
        }
    }
    return a;
}

real_matrix full_bipartite(int n1, int n2) {
    if (n1 < 1 || n2 < 1) {
        throw invalid_input_error("full_bipartite: part sizes must be at least 1");
    }
    const std::size_t n = static_cast<std::size_t>(n1) + static_cast<std::size_t>(n2);
    real_matrix a(n, n, 0.0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n1); ++i) {
        for (std::size_t j = static_cast<std::size_t>(n1); j < n; ++j) {
            a(i, j) = 1.0;
            a(j, i) = 1.0;
        }
    }
    return a;
}

real_matrix preferential_attachment(int vertices, double power, double zero_appeal,
                                    std::uint64_t seed) {
    if (vertices < 1) throw invalid_input_error("preferential_attachment: vertices must be at least 1");
    if (power < 0.0) throw invalid_input_error("preferential_attachment: power must be non-negative");
    if (!(zero_appeal > 0.0)) throw invalid_input_error("preferential_attachment: zero_appeal must be positive");

    const std::size_t n = static_cast<std::size_t>(vertices);
    real_matrix a(n, n, 0.0);
    std::vector<double> degree(n, 0.0);
    std::vector<double> weight(n, 0.0);
    random_stream rng(seed);

    for (std::size_t v = 1; v < n; ++v) {
        double total = 0.0;
        for (std::size_t u = 0; u < v; ++u) {
            weight[u] = std::pow(degree[u], power) + zero_appeal;
            total += weight[u];
        }
        // Inverse-CDF draw over the cumulative attachment weights.
        const double r = rng.uniform01() * total;
        double acc = 0.0;
        std::size_t target = v - 1;
        for (std::size_t u = 0; u < v; ++u) {
            acc += weight[u];
            if (r < acc) {
                target = u;
                break;
            }
        }
        a(v, target) = 1.0;
        a(target, v) = 1.0;
        degree[v] += 1.0;
        degree[target] += 1.0;
    }
    return a;
}

real_matrix build_model(const model_spec& spec) {
    struct visitor {
        real_matrix operator()(const kautz_spec& s) const { return kautz(s.alphabet_degree, s.label_exponent); }
        real_matrix operator()(const lattice_spec& s) const { return lattice(s.rows, s.cols); }
        real_matrix operator()(const tree_spec& s) const { return tree(s.vertices, s.children); }
        real_matrix operator()(const bipartite_spec& s) const { return full_bipartite(s.n1, s.n2); }
        real_matrix operator()(const pa_spec& s) const {
            return preferential_attachment(s.vertices, s.power, s.zero_appeal, s.seed);
        }
    };
    return std::visit(visitor{}, spec);
}

} // namespace netft
