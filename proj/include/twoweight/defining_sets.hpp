// Defining sets in F*_{p^m} x F_{p^m} cut out by Tr(y x^{d+1}) = lambda, the
// starred variant with y != 0, and their punctured versions (one
// representative per orbit of the scalar or sign action).

#ifndef TWOWEIGHT_DEFINING_SETS_HPP
#define TWOWEIGHT_DEFINING_SETS_HPP

#include <string>
#include <utility>
#include <vector>

#include "twoweight/gf.hpp"

namespace twoweight {

enum class SetKind {
    D0,
    DLambda,
    DStar,
    PuncturedD0,
    PuncturedDLambda,
    PuncturedDStar,
};

std::string to_string(SetKind kind);
bool is_punctured(SetKind kind);
SetKind punctured_kind(SetKind kind);

struct DefiningSet {
    const ExtensionField* field = nullptr;
    SetKind kind = SetKind::D0;
    int d = 1;
    int lambda = 0;  // 0 for D0 / DStar
    // Sorted ascending by (x, y); the order fixes codeword coordinates.
    std::vector<std::pair<Elem, Elem>> pairs;

    std::int64_t size() const { return static_cast<std::int64_t>(pairs.size()); }
};

// All (x, y) with x != 0 and Tr(y x^{d+1}) = lambda.
DefiningSet build_d_lambda(const ExtensionField& f, int d, int lambda);

// As D_0 but additionally y != 0.
DefiningSet build_d_star(const ExtensionField& f, int d);

// One representative per orbit of (x, y) -> (cx, cy), c in F_p^*.
// Requires kind D0 or DStar and (p-1) | d, which makes the action preserve
// the set; every orbit is checked to have exactly p-1 members.
DefiningSet puncture_scalar_orbits(const DefiningSet& s);

// One representative per {(x, y), (-x, -y)} orbit. Requires DLambda with
// lambda != 0 and even d.
DefiningSet puncture_sign_orbits(const DefiningSet& s);

// Re-checks the membership predicate (and orbit-representative minimality
// for punctured kinds) for every listed pair; throws on any violation.
void verify_members(const DefiningSet& s);

}  // namespace twoweight

#endif
