// Generator matrices for the trace codes, dual-distance classification up to
// the 3 / >=4 threshold (which decides projectivity), and the first two Pless
// power moments.

#ifndef TWOWEIGHT_DUAL_HPP
#define TWOWEIGHT_DUAL_HPP

#include <cstdint>
#include <vector>

#include "twoweight/codes.hpp"

namespace twoweight {

struct GeneratorMatrix {
    int p = 0;
    int k = 0;            // 2m rows
    std::int64_t n = 0;   // columns = defining-set pairs
    std::vector<std::uint8_t> entries;  // row-major

    std::uint8_t at(int r, std::int64_t c) const { return entries[r * n + c]; }
    std::vector<std::uint8_t> column(std::int64_t c) const;
};

// Column j is the functional (a, b) -> Tr(a y_j x_j^d + b x_j) written in the
// polynomial basis (1, alpha, ..., alpha^{m-1}) on each factor.
GeneratorMatrix generator_matrix(const CodeSpec& spec);

// F_p rank by Gaussian elimination.
int matrix_rank(const GeneratorMatrix& g);

enum class DualDistance { One = 1, Two = 2, Three = 3, AtLeastFour = 4 };

// 1: zero column; 2: two proportional columns; 3: three dependent columns;
// >=4 otherwise. Proportionality via projective normalization.
DualDistance dual_distance_upto_3(const GeneratorMatrix& g);

struct PlessReport {
    std::int64_t codeword_total = 0;   // sum A_j
    std::int64_t codeword_expected = 0;  // p^k
    std::int64_t first_moment = 0;     // sum j A_j
    std::int64_t first_moment_expected = 0;  // p^{k-1}(pn - n), A_1-dual = 0
    bool pass = false;
};

// First two power moments with A_1 of the dual equal to zero, which holds
// because (0, 0) is never a defining-set pair.
PlessReport pless_check(const WeightDistribution& wd, int p);

}  // namespace twoweight

#endif
