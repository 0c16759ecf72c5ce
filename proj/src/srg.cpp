#include "twoweight/srg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace twoweight {

std::vector<std::int64_t> build_omega(const GeneratorMatrix& g) {
    std::vector<std::int64_t> omega;
    for (std::int64_t j = 0; j < g.n; ++j) {
        const auto col = g.column(j);
        bool zero = true;
        for (auto e : col) zero = zero && e == 0;
        if (zero) throw std::invalid_argument("zero generator column");
        for (int c = 1; c < g.p; ++c) {
            std::int64_t v = 0;
            for (int r = g.k - 1; r >= 0; --r) v = v * g.p + c * col[r] % g.p;
            omega.push_back(v);
        }
    }
    std::sort(omega.begin(), omega.end());
    omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
    return omega;
}

CayleyGraph build_graph(const std::vector<std::int64_t>& omega, int p, int k,
                        std::int64_t max_vertices) {
    if (omega.empty()) throw std::invalid_argument("empty connection set");
    std::int64_t N = 1;
    for (int i = 0; i < k; ++i) {
        N *= p;
        if (N > max_vertices)
            throw std::length_error("adjacency budget exceeded: p^k > " +
                                    std::to_string(max_vertices) + " vertices");
    }

    CayleyGraph graph;
    graph.p = p;
    graph.k = k;
    graph.num_vertices = N;
    graph.valency = static_cast<std::int64_t>(omega.size());
    graph.row_words = static_cast<std::size_t>((N + 63) / 64);
    graph.adj.assign(graph.row_words * N, 0);

    // vertex u + vertex v with digitwise carry-free base-p addition
    const auto vadd = [&](std::int64_t u, std::int64_t v) {
        std::int64_t out = 0, mult = 1;
        for (int i = 0; i < k; ++i) {
            out += (u % p + v % p) % p * mult;
            u /= p;
            v /= p;
            mult *= p;
        }
        return out;
    };

#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < N; ++u)
        for (std::int64_t w : omega) {
            const std::int64_t v = vadd(u, w);
            graph.adj[u * graph.row_words + v / 64] |= std::uint64_t{1} << (v % 64);
        }
    return graph;
}

namespace {

std::int64_t common_neighbors(const CayleyGraph& g, std::int64_t u, std::int64_t v) {
    std::int64_t c = 0;
    for (std::size_t w = 0; w < g.row_words; ++w)
        c += std::popcount(g.adj[u * g.row_words + w] & g.adj[v * g.row_words + w]);
    return c;
}

bool connected(const CayleyGraph& g) {
    std::vector<char> seen(g.num_vertices, 0);
    std::vector<std::int64_t> stack{0};
    seen[0] = 1;
    std::int64_t count = 1;
    while (!stack.empty()) {
        const std::int64_t u = stack.back();
        stack.pop_back();
        for (std::int64_t v = 0; v < g.num_vertices; ++v)
            if (!seen[v] && g.adjacent(u, v)) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.num_vertices;
}

}  // namespace

SrgReport verify_srg(const CayleyGraph& graph, bool per_pair_crosscheck) {
    SrgReport rep;
    const std::int64_t N = graph.num_vertices;
    rep.params.N = N;
    rep.verified = false;

    for (std::int64_t u = 0; u < N; ++u) {
        if (graph.adjacent(u, u)) {
            rep.failure = "loop at vertex " + std::to_string(u);
            return rep;
        }
        std::int64_t deg = 0;
        for (std::size_t w = 0; w < graph.row_words; ++w)
            deg += std::popcount(graph.adj[u * graph.row_words + w]);
        if (u == 0) rep.params.K = deg;
        if (deg != rep.params.K) {
            rep.failure = "vertex " + std::to_string(u) + " has degree " + std::to_string(deg);
            return rep;
        }
    }
    if (rep.params.K == 0 || !connected(graph)) {
        rep.failure = "graph is not connected";
        return rep;
    }
    if (rep.params.K == N - 1) {
        rep.failure = "complete graph: no non-adjacent pairs, mu undefined";
        return rep;
    }

    // Pin lambda and mu from vertex 0, then check every pair against them.
    std::int64_t lambda = -1, mu = -1;
    for (std::int64_t v = 1; v < N && (lambda == -1 || mu == -1); ++v) {
        std::int64_t& slot = graph.adjacent(0, v) ? lambda : mu;
        if (slot == -1) slot = common_neighbors(graph, 0, v);
    }
    if (mu <= 0) {
        rep.failure = "mu = " + std::to_string(mu == -1 ? 0 : mu);
        return rep;
    }

    std::int64_t bad_u = -1, bad_v = -1;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t u = 0; u < N; ++u) {
        for (std::int64_t v = u + 1; v < N; ++v) {
            const std::int64_t c = common_neighbors(graph, u, v);
            if (c != (graph.adjacent(u, v) ? lambda : mu)) {
#pragma omp critical
                {
                    bad_u = u;
                    bad_v = v;
                }
            }
        }
    }
    if (bad_u >= 0) {
        rep.failure = "pair (" + std::to_string(bad_u) + ", " + std::to_string(bad_v) +
                      ") has " + std::to_string(common_neighbors(graph, bad_u, bad_v)) +
                      " common neighbors";
        return rep;
    }
    rep.params.lambda = lambda;
    rep.params.mu = mu;

    if (per_pair_crosscheck) {
        // slow recount without the bitset rows
        for (std::int64_t u = 0; u < N; ++u)
            for (std::int64_t v = u + 1; v < N; ++v) {
                std::int64_t c = 0;
                for (std::int64_t w = 0; w < N; ++w)
                    if (graph.adjacent(u, w) && graph.adjacent(v, w)) ++c;
                const std::int64_t expect = graph.adjacent(u, v) ? lambda : mu;
                if (c != expect) {
                    rep.failure = "cross-check mismatch at (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")";
                    return rep;
                }
            }
    }

    rep.verified = true;
    rep.feasibility = rep.params.feasible();
    return rep;
}

SrgReport predict_srg_params(std::int64_t n, int k, std::int64_t w1, std::int64_t w2, int p) {
    SrgReport rep;
    std::int64_t N = 1;
    for (int i = 0; i < k; ++i) N *= p;
    const std::int64_t K = (p - 1) * n;
    const std::int64_t s = p * (w1 + w2);
    rep.params.N = N;
    rep.params.K = K;
    rep.params.lambda = K * K + 3 * K - s - K * s + static_cast<std::int64_t>(p) * p * w1 * w2;
    rep.params.mu = K * K + K - K * s + static_cast<std::int64_t>(p) * p * w1 * w2;
    rep.weights_used = {w1, w2};
    rep.feasibility = rep.params.feasible();
    return rep;
}

}  // namespace twoweight
