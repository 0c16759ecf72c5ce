#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twoweight/analysis.hpp"
#include "twoweight/dual.hpp"

using namespace twoweight;

namespace {

// by-value so the set outlives the spec aliasing it
GeneratorMatrix gen_matrix(DefiningSet set) {
    const auto spec = CodeSpec::from(set);
    return generator_matrix(spec);
}

}  // namespace

TEST_CASE("generator matrix linearizes the codeword map") {
    const auto f = build_field(3, 2);
    const auto set = puncture_scalar_orbits(build_d_lambda(f, 2, 0));
    const auto spec = CodeSpec::from(set);
    const auto g = generator_matrix(spec);
    CHECK(g.k == 4);
    CHECK(g.n == 12);
    CHECK(matrix_rank(g) == 4);

    // row combination with the digit vector of (a, b) reproduces codeword(a, b)
    for (Elem a = 0; a < 9; ++a)
        for (Elem b = 0; b < 9; ++b) {
            const auto cw = codeword(spec, a, b);
            std::vector<int> coeff = {a % 3, a / 3, b % 3, b / 3};
            for (std::int64_t j = 0; j < g.n; ++j) {
                int v = 0;
                for (int r = 0; r < 4; ++r) v += coeff[r] * g.at(r, j);
                CHECK(v % 3 == cw[j]);
            }
        }

    for (std::int64_t j = 0; j < g.n; ++j) {
        bool nonzero = false;
        for (int r = 0; r < g.k; ++r) nonzero = nonzero || g.at(r, j) != 0;
        CHECK(nonzero);
    }
}

TEST_CASE("dual distance classification at p=3 m=2 d=2") {
    const auto f = build_field(3, 2);
    CHECK(dual_distance_upto_3(gen_matrix(puncture_scalar_orbits(build_d_lambda(f, 2, 0)))) ==
          DualDistance::Three);
    CHECK(dual_distance_upto_3(gen_matrix(puncture_scalar_orbits(build_d_star(f, 2)))) ==
          DualDistance::Three);
    // the full scalar orbits make unpunctured columns pairwise proportional
    CHECK(dual_distance_upto_3(gen_matrix(build_d_lambda(f, 2, 0))) == DualDistance::Two);
}

TEST_CASE("dual distance detects planted degeneracies") {
    GeneratorMatrix g;
    g.p = 3;
    g.k = 2;
    g.n = 3;
    // columns (1,0), (0,1), (1,1): three dependent, none proportional
    g.entries = {1, 0, 1, 0, 1, 1};
    CHECK(dual_distance_upto_3(g) == DualDistance::Three);

    g.entries = {1, 2, 0, 0, 0, 1};  // (1,0) and (2,0) proportional
    CHECK(dual_distance_upto_3(g) == DualDistance::Two);

    g.entries = {1, 0, 0, 0, 0, 1};  // zero column in the middle
    CHECK(dual_distance_upto_3(g) == DualDistance::One);

    // two independent columns admit no dependency at all
    g.n = 2;
    g.entries = {1, 0, 0, 1};
    CHECK(dual_distance_upto_3(g) == DualDistance::AtLeastFour);
}

TEST_CASE("projectivity across the grid") {
    for (const auto& [p, m] : {std::pair{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        const auto f = build_field(p, m);
        const int d = p - 1;
        const auto g0 = gen_matrix(puncture_scalar_orbits(build_d_lambda(f, d, 0)));
        CHECK(dual_distance_upto_3(g0) == DualDistance::Three);
        CHECK(matrix_rank(g0) == 2 * m);
        const auto gs = gen_matrix(puncture_scalar_orbits(build_d_star(f, d)));
        CHECK(dual_distance_upto_3(gs) == DualDistance::Three);
        CHECK(matrix_rank(gs) == 2 * m);
    }
}

TEST_CASE("Pless power moments") {
    auto wd = predict_wd(SetKind::D0, 3, 2, 0);
    auto rep = pless_check(wd, 3);
    CHECK(rep.pass);
    CHECK(rep.codeword_total == 81);
    CHECK(rep.first_moment == 24 * 12 + 56 * 18);
    CHECK(rep.first_moment_expected == 27 * 48);

    wd = predict_wd(SetKind::DStar, 3, 2, 0);
    rep = pless_check(wd, 3);
    CHECK(rep.pass);
    CHECK(rep.first_moment == 16 * 6 + 64 * 12);
    CHECK(rep.first_moment_expected == 864);

    // moments for every predicted family on the grid
    for (const auto& params : standard_grid()) {
        const auto p = predict_wd(params.kind, params.p, params.m, params.lambda);
        CHECK(pless_check(p, params.p).pass);
    }

    // zero code edge: k = 0, n = 0
    WeightDistribution zero;
    zero.n = 0;
    zero.k = 0;
    zero.counts[0] = 1;
    CHECK(pless_check(zero, 3).pass);

    // a corrupted distribution fails
    wd = predict_wd(SetKind::D0, 3, 2, 0);
    wd.counts[12] += 1;
    CHECK_FALSE(pless_check(wd, 3).pass);
}
