// One-stop pipeline for a single code: build the defining set, enumerate,
// predict, diff, and run the dual/ratio/Griesmer checks. Used by the CLI and
// by the verification suites.

#ifndef TWOWEIGHT_ANALYSIS_HPP
#define TWOWEIGHT_ANALYSIS_HPP

#include <memory>
#include <optional>

#include "twoweight/applications.hpp"
#include "twoweight/codes.hpp"
#include "twoweight/dual.hpp"
#include "twoweight/srg.hpp"

namespace twoweight {

struct CodeParams {
    int p = 3;
    int m = 2;
    int d = 1;
    SetKind kind = SetKind::D0;
    int lambda = 0;

    std::string label() const;  // "p=3 m=2 d=2 kind=D0"
};

// Every parameter combination the verification suite covers:
// (p, m) in {(3,2), (3,3), (5,2), (5,3), (7,2)}, all d <= 2(p-1), all
// applicable lambda, punctured variants where the orbit action is defined.
std::vector<CodeParams> standard_grid();

DefiningSet build_set(const ExtensionField& f, SetKind kind, int d, int lambda);

// Codes with at most this many parameter pairs also get the pairwise
// support-inclusion scan during analysis.
inline constexpr std::int64_t kMinimalityScanBudget = 729;

struct CodeAnalysis {
    CodeParams params;
    std::unique_ptr<ExtensionField> field;
    DefiningSet set;
    CompleteWeightEnumerator cwe;
    WeightDistribution wd;
    std::int64_t d_min = 0;
    WeightDistribution predicted_wd;
    CompareReport wd_diff;
    std::optional<CompleteWeightEnumerator> predicted_cwe;  // unpunctured kinds
    CompareReport cwe_diff;
    PlessReport pless;
    DualDistance dual_distance = DualDistance::AtLeastFour;
    RatioReport ratio;
    std::optional<MinimalityReport> minimality;  // set when within the budget
    GriesmerReport griesmer;

    const DefiningSet& defining_set() const { return set; }
    bool match() const { return wd_diff.empty() && cwe_diff.empty() && pless.pass; }
};

CodeAnalysis analyze_code(const CodeParams& params,
                          std::int64_t budget = kDefaultEnumBudget);

std::string to_string(DualDistance d);

// Predicts the graph parameters from a two-weight distribution and runs full
// adjacency verification when N^3 stays within op_budget (roughly the bit
// operations of the common-neighbor pass).
inline constexpr std::int64_t kSrgVerifyOpBudget = std::int64_t{1} << 20;

SrgReport srg_analysis(const CodeSpec& spec, const WeightDistribution& wd,
                       std::int64_t op_budget = kSrgVerifyOpBudget);

}  // namespace twoweight

#endif
