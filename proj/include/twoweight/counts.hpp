// Counting the solutions (x, y), x != 0, of the simultaneous trace
// conditions Tr(x^{d+1} y) = lambda and Tr(a x^d y + b x) = lambda_1, both by
// exhaustive scan and by the closed-form case tables the weight computations
// rest on. The starred variant additionally restricts y != 0.

#ifndef TWOWEIGHT_COUNTS_HPP
#define TWOWEIGHT_COUNTS_HPP

#include <cstdint>

#include "twoweight/gf.hpp"

namespace twoweight {

struct CountQuery {
    int lambda = 0;
    int lambda1 = 0;
    Elem a = 0;
    Elem b = 0;
    bool star = false;  // restrict y != 0 (lambda must be 0)
};

// Exact cardinality by scanning all (x, y).
std::int64_t count_bruteforce(const ExtensionField& f, int d, const CountQuery& q);

// Closed-form value from the case tables; case data is (a == 0, b == 0,
// Tr(ab)). Unreachable combinations throw rather than return 0.
std::int64_t count_closed_form(int p, int m, int lambda, int lambda1, bool a_zero, bool b_zero,
                               int tr_ab, bool star);

// Convenience: closed form evaluated for concrete field elements.
std::int64_t count_closed_form(const ExtensionField& f, const CountQuery& q);

struct PairCount {
    std::int64_t bruteforce = 0;
    std::int64_t closed_form = 0;
};

// #{(a, b) in F* x F : Tr(ab) = t}, scanned and as p^{m-1}(p^m - 1).
PairCount count_A(const ExtensionField& f, int t);

}  // namespace twoweight

#endif
