// Cayley graphs on F_p^k whose connection set collects the scalar multiples
// of generator-matrix columns, strong-regularity verification, and the
// closed-form parameter predictions for projective two-weight codes.

#ifndef TWOWEIGHT_SRG_HPP
#define TWOWEIGHT_SRG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twoweight/dual.hpp"

namespace twoweight {

// Full adjacency verification is attempted only below this vertex count
// (5^4); larger graphs get predicted parameters with verified left unset.
inline constexpr std::int64_t kSrgVertexBudget = 625;

struct SrgParams {
    std::int64_t N = 0;
    std::int64_t K = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    bool feasible() const { return K * (K - lambda - 1) == (N - K - 1) * mu; }
};

struct SrgReport {
    SrgParams params;
    std::optional<bool> verified;  // unset when verification was not attempted
    bool feasibility = false;
    std::string source;
    std::pair<std::int64_t, std::int64_t> weights_used{0, 0};
    std::string note;     // e.g. a deviating alternate closed form
    std::string failure;  // counterexample description when verified == false
};

// Connection set: all nonzero scalar multiples of all columns, deduplicated,
// as vertex indices (base-p encodings of the column vectors). Throws on a
// zero column.
std::vector<std::int64_t> build_omega(const GeneratorMatrix& g);

struct CayleyGraph {
    int p = 0;
    int k = 0;
    std::int64_t num_vertices = 0;
    std::int64_t valency = 0;
    std::size_t row_words = 0;
    std::vector<std::uint64_t> adj;  // dense bitset rows

    bool adjacent(std::int64_t u, std::int64_t v) const {
        return (adj[u * row_words + v / 64] >> (v % 64)) & 1;
    }
};

// Cayley graph of the additive group F_p^k with the given connection set.
CayleyGraph build_graph(const std::vector<std::int64_t>& omega, int p, int k,
                        std::int64_t max_vertices = kSrgVertexBudget);

// Checks regularity, connectivity and that common-neighbor counts are a
// single constant over adjacent and over non-adjacent pairs (the A^2
// identity, evaluated with bitset row intersections). The slow per-pair
// recount is kept as a cross-check mode.
SrgReport verify_srg(const CayleyGraph& graph, bool per_pair_crosscheck = false);

// N = p^k, K = (p-1)n and the standard lambda/mu expressions in the two
// nonzero weights of a projective two-weight code.
SrgReport predict_srg_params(std::int64_t n, int k, std::int64_t w1, std::int64_t w2, int p);

}  // namespace twoweight

#endif
