#include "twoweight/counts.hpp"

#include <stdexcept>

namespace twoweight {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::int64_t count_bruteforce(const ExtensionField& f, int d, const CountQuery& q) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (q.a == 0 && q.b == 0) throw std::invalid_argument("(a, b) = (0, 0) excluded");
    if (q.star && q.lambda != 0) throw std::invalid_argument("starred counts fix lambda = 0");
    std::int64_t count = 0;
    for (Elem x = 1; x < f.order(); ++x) {
        const Elem xd = f.pow(x, d);
        const Elem xd1 = f.mul(xd, x);
        const Elem axd = f.mul(q.a, xd);
        const int tr_bx = f.trace(f.mul(q.b, x));
        for (Elem y = q.star ? 1 : 0; y < f.order(); ++y) {
            if (f.trace(f.mul(xd1, y)) != q.lambda) continue;
            if ((f.trace(f.mul(axd, y)) + tr_bx) % f.p() == q.lambda1) ++count;
        }
    }
    return count;
}

std::int64_t count_closed_form(int p, int m, int lambda, int lambda1, bool a_zero, bool b_zero,
                               int tr_ab, bool star) {
    if (a_zero && b_zero) throw std::invalid_argument("(a, b) = (0, 0) excluded");
    if (a_zero && tr_ab != 0) throw std::invalid_argument("a = 0 forces Tr(ab) = 0");
    const std::int64_t pm1 = ipow(p, m - 1), p2m2 = ipow(p, 2 * m - 2);

    if (star) {
        if (lambda != 0) throw std::invalid_argument("starred counts fix lambda = 0");
        if (lambda1 == 0) {
            if ((a_zero && !b_zero) || tr_ab != 0 || (!a_zero && b_zero))
                return p2m2 - 2 * pm1 + 1;
            if (!a_zero && !b_zero && tr_ab == 0) return p2m2 + (p - 3) * pm1 + 1;
        } else {
            if ((a_zero && !b_zero) || (!a_zero && tr_ab != 0) || (!a_zero && b_zero))
                return p2m2 - pm1;
            if (!a_zero && !b_zero && tr_ab == 0) return p2m2 - 2 * pm1;
        }
        throw std::logic_error("unhandled starred case");
    }

    if (lambda == 0 && lambda1 == 0) {
        if ((a_zero && !b_zero) || tr_ab != 0) return p2m2 - pm1;
        if (!a_zero && tr_ab == 0) return p2m2 + (p - 2) * pm1;
    } else if (lambda == 0 && lambda1 != 0) {
        if ((a_zero && !b_zero) || (!a_zero && tr_ab != 0)) return p2m2;
        if (!a_zero && tr_ab == 0) return p2m2 - pm1;
    } else if (lambda != 0 && lambda1 == 0) {
        if ((a_zero && !b_zero) || (!a_zero && tr_ab == 0)) return p2m2 - pm1;
        if (tr_ab != 0)
            return p2m2 + legendre_symbol(-static_cast<std::int64_t>(lambda) * tr_ab, p) * pm1;
    } else {
        if ((a_zero && !b_zero) || (!a_zero && tr_ab == 0)) return p2m2;
        if (!a_zero && tr_ab != 0)
            return p2m2 +
                   legendre_symbol(static_cast<std::int64_t>(lambda1) * lambda1 -
                                       4ll * lambda * tr_ab,
                                   p) *
                       pm1;
    }
    throw std::logic_error("unhandled case");
}

std::int64_t count_closed_form(const ExtensionField& f, const CountQuery& q) {
    return count_closed_form(f.p(), f.m(), q.lambda, q.lambda1, q.a == 0, q.b == 0,
                             f.trace(f.mul(q.a, q.b)), q.star);
}

PairCount count_A(const ExtensionField& f, int t) {
    if (t < 0 || t >= f.p()) throw std::invalid_argument("t out of [0, p)");
    PairCount out;
    for (Elem a = 1; a < f.order(); ++a)
        for (Elem b = 0; b < f.order(); ++b)
            if (f.trace(f.mul(a, b)) == t) ++out.bruteforce;
    std::int64_t pm1 = 1;
    for (int i = 0; i < f.m() - 1; ++i) pm1 *= f.p();
    out.closed_form = pm1 * (f.order() - 1);
    return out;
}

}  // namespace twoweight
