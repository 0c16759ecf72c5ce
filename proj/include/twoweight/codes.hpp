// Codeword enumeration for the trace codes c(a,b) = (Tr(a y x^d + b x)) over
// a defining set, complete weight enumerators, weight distributions, and the
// closed-form predictions they are checked against.
//
// Two enumeration routes are kept on purpose: a plain serial reference that
// evaluates every symbol through the generic field operations, and an
// OpenMP kernel working off folded log/trace tables. Tests require their
// histograms to be identical.

#ifndef TWOWEIGHT_CODES_HPP
#define TWOWEIGHT_CODES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twoweight/defining_sets.hpp"
#include "twoweight/gf.hpp"

namespace twoweight {

// Refuse enumerations above this many symbol evaluations (p^{2m} * n) unless
// the caller raises the budget explicitly.
inline constexpr std::int64_t kDefaultEnumBudget = std::int64_t{1} << 33;

struct CodeSpec {
    const ExtensionField* field = nullptr;
    const DefiningSet* set = nullptr;
    std::int64_t n = 0;
    int k_bound = 0;  // 2m

    // The spec aliases the set; rvalues are rejected so it cannot dangle.
    static CodeSpec from(const DefiningSet& s);
    static CodeSpec from(DefiningSet&&) = delete;
};

// Symbol composition (t_0, ..., t_{p-1}) of a codeword, sum = n.
using Composition = std::vector<std::uint32_t>;

struct CompleteWeightEnumerator {
    std::int64_t n = 0;
    int p = 0;
    // Composition -> number of parameter pairs (a, b) producing it.
    std::map<Composition, std::int64_t> terms;

    std::int64_t total() const;
};

struct WeightDistribution {
    std::int64_t n = 0;
    int k = 0;
    std::map<std::int64_t, std::int64_t> counts;  // weight -> A_w, A_0 = 1

    std::int64_t min_nonzero_weight() const;
    std::string polynomial() const;  // "1 +24z^{12}+56z^{18}"
};

// Coordinates of c(a,b) in the set's canonical pair order, symbols in [0, p).
std::vector<std::uint8_t> codeword(const CodeSpec& spec, Elem a, Elem b);

// Serial reference: every symbol through codeword-style field arithmetic.
CompleteWeightEnumerator complete_weight_enumerator_reference(const CodeSpec& spec);

// OpenMP kernel over the (a, b) grid with per-thread histograms.
CompleteWeightEnumerator complete_weight_enumerator(const CodeSpec& spec,
                                                    std::int64_t budget = kDefaultEnumBudget);

// Collapses compositions to Hamming weights (w = n - t_0) and divides out the
// zero codeword's parameter fiber, so A_0 = 1 and sum A_w = p^k with the
// measured dimension k.
WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe, int k_bound);

// Two-weight distributions of the six families, dimension 2m. Requires
// m >= 2 and, for the lambda families, lambda != 0.
WeightDistribution predict_wd(SetKind kind, int p, int m, int lambda);

// Symbolic complete weight enumerators, expanded to explicit histograms.
// Defined for the unpunctured kinds only.
CompleteWeightEnumerator predict_cwe(SetKind kind, int p, int m, int lambda);

struct DiffEntry {
    std::string where;
    std::int64_t actual = 0;
    std::int64_t predicted = 0;
};

struct CompareReport {
    std::vector<DiffEntry> mismatches;
    bool empty() const { return mismatches.empty(); }
};

CompareReport compare(const WeightDistribution& actual, const WeightDistribution& predicted);
CompareReport compare(const CompleteWeightEnumerator& actual,
                      const CompleteWeightEnumerator& predicted);

}  // namespace twoweight

#endif
