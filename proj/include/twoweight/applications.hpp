// Minimal-codeword checks for secret-sharing suitability and the Griesmer
// bound report.

#ifndef TWOWEIGHT_APPLICATIONS_HPP
#define TWOWEIGHT_APPLICATIONS_HPP

#include <cstdint>
#include <string>

#include "twoweight/codes.hpp"

namespace twoweight {

struct RatioReport {
    std::int64_t w_min = 0;
    std::int64_t w_max = 0;
    std::string ratio;      // reduced fraction, e.g. "8/9"
    std::string threshold;  // (p-1)/p reduced
    bool pass = false;      // w_min / w_max > (p-1)/p, exact comparison
};

RatioReport ab_ratio_check(const WeightDistribution& wd, int p);

struct MinimalityReport {
    bool all_minimal = false;
    std::int64_t codewords_scanned = 0;
    // Ordered pairs with strict support inclusion; the second count excludes
    // pairs of proportional codewords (scalar multiples share their support,
    // so the two numbers coincide unless something is badly wrong).
    std::int64_t covering_pairs = 0;
    std::int64_t covering_pairs_nonproportional = 0;
};

// Pairwise support scan over all nonzero codewords; refuses codes with more
// than max_codewords parameter pairs.
MinimalityReport all_minimal_bruteforce(const CodeSpec& spec,
                                        std::int64_t max_codewords = 729);

struct GriesmerReport {
    std::int64_t bound = 0;  // sum of ceil(d / p^i), i < k
    std::int64_t slack = 0;  // n - bound
};

GriesmerReport griesmer_bound(std::int64_t n, int k, std::int64_t d, int p);

}  // namespace twoweight

#endif
