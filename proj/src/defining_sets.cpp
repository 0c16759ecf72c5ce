#include "twoweight/defining_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoweight {

std::string to_string(SetKind kind) {
    switch (kind) {
        case SetKind::D0: return "D0";
        case SetKind::DLambda: return "Dlambda";
        case SetKind::DStar: return "Dstar";
        case SetKind::PuncturedD0: return "punctured-D0";
        case SetKind::PuncturedDLambda: return "punctured-Dlambda";
        case SetKind::PuncturedDStar: return "punctured-Dstar";
    }
    return "?";
}

bool is_punctured(SetKind kind) {
    return kind == SetKind::PuncturedD0 || kind == SetKind::PuncturedDLambda ||
           kind == SetKind::PuncturedDStar;
}

SetKind punctured_kind(SetKind kind) {
    switch (kind) {
        case SetKind::D0: return SetKind::PuncturedD0;
        case SetKind::DLambda: return SetKind::PuncturedDLambda;
        case SetKind::DStar: return SetKind::PuncturedDStar;
        default: throw std::invalid_argument("set is already punctured");
    }
}

namespace {

// Tr(y x^{d+1}) for a candidate pair.
int pair_trace(const ExtensionField& f, int d, Elem x, Elem y) {
    return f.trace(f.mul(y, f.pow(x, d + 1)));
}

}  // namespace

DefiningSet build_d_lambda(const ExtensionField& f, int d, int lambda) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (lambda < 0 || lambda >= f.p()) throw std::invalid_argument("lambda out of [0, p)");
    DefiningSet s;
    s.field = &f;
    s.kind = lambda == 0 ? SetKind::D0 : SetKind::DLambda;
    s.d = d;
    s.lambda = lambda;
    for (Elem x = 1; x < f.order(); ++x) {
        // Tr(y c) = lambda sweeps each value equally often as y runs over the
        // field; the direct scan doubles as the membership check.
        const Elem c = f.pow(x, d + 1);
        for (Elem y = 0; y < f.order(); ++y)
            if (f.trace(f.mul(y, c)) == lambda) s.pairs.emplace_back(x, y);
    }
    verify_members(s);
    return s;
}

DefiningSet build_d_star(const ExtensionField& f, int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    DefiningSet s;
    s.field = &f;
    s.kind = SetKind::DStar;
    s.d = d;
    s.lambda = 0;
    for (Elem x = 1; x < f.order(); ++x) {
        const Elem c = f.pow(x, d + 1);
        for (Elem y = 1; y < f.order(); ++y)
            if (f.trace(f.mul(y, c)) == 0) s.pairs.emplace_back(x, y);
    }
    verify_members(s);
    return s;
}

DefiningSet puncture_scalar_orbits(const DefiningSet& s) {
    if (s.kind != SetKind::D0 && s.kind != SetKind::DStar)
        throw std::invalid_argument("scalar puncture applies to D0 or Dstar only");
    const ExtensionField& f = *s.field;
    const int p = f.p();
    if (s.d % (p - 1) != 0)
        throw std::invalid_argument("(p-1) does not divide d; scalar orbits leave the set");

    DefiningSet out;
    out.field = s.field;
    out.kind = punctured_kind(s.kind);
    out.d = s.d;
    out.lambda = 0;
    for (const auto& [x, y] : s.pairs) {
        bool minimal = true;
        int orbit_size = 1;
        for (Elem c = 2; c < p; ++c) {
            const std::pair<Elem, Elem> im{f.mul(c, x), f.mul(c, y)};
            if (im != std::pair<Elem, Elem>{x, y}) ++orbit_size;
            if (im < std::pair<Elem, Elem>{x, y}) minimal = false;
        }
        if (orbit_size != p - 1) throw std::logic_error("scalar orbit is not free");
        if (minimal) out.pairs.emplace_back(x, y);
    }
    if (out.size() * (p - 1) != s.size()) throw std::logic_error("orbit partition mismatch");
    verify_members(out);
    return out;
}

DefiningSet puncture_sign_orbits(const DefiningSet& s) {
    if (s.kind != SetKind::DLambda || s.lambda == 0)
        throw std::invalid_argument("sign puncture applies to Dlambda with lambda != 0");
    if (s.d % 2 != 0) throw std::invalid_argument("sign puncture requires even d");
    const ExtensionField& f = *s.field;

    DefiningSet out;
    out.field = s.field;
    out.kind = SetKind::PuncturedDLambda;
    out.d = s.d;
    out.lambda = s.lambda;
    for (const auto& [x, y] : s.pairs) {
        const std::pair<Elem, Elem> mirror{f.neg(x), f.neg(y)};
        if (mirror == std::pair<Elem, Elem>{x, y}) throw std::logic_error("fixed point under negation");
        if (std::pair<Elem, Elem>{x, y} < mirror) out.pairs.emplace_back(x, y);
    }
    if (out.size() * 2 != s.size()) throw std::logic_error("orbit partition mismatch");
    verify_members(out);
    return out;
}

void verify_members(const DefiningSet& s) {
    const ExtensionField& f = *s.field;
    const int p = f.p();
    std::pair<Elem, Elem> prev{-1, -1};
    for (const auto& [x, y] : s.pairs) {
        if (std::pair<Elem, Elem>{x, y} <= prev) throw std::logic_error("pairs not sorted");
        prev = {x, y};
        if (x == 0) throw std::logic_error("x = 0 listed");
        if (pair_trace(f, s.d, x, y) != s.lambda) throw std::logic_error("trace condition violated");
        switch (s.kind) {
            case SetKind::D0:
            case SetKind::DLambda:
                break;
            case SetKind::DStar:
                if (y == 0) throw std::logic_error("y = 0 listed in Dstar");
                break;
            case SetKind::PuncturedD0:
            case SetKind::PuncturedDStar:
                if (s.kind == SetKind::PuncturedDStar && y == 0)
                    throw std::logic_error("y = 0 listed in punctured Dstar");
                for (Elem c = 2; c < p; ++c)
                    if (std::pair<Elem, Elem>{f.mul(c, x), f.mul(c, y)} <
                        std::pair<Elem, Elem>{x, y})
                        throw std::logic_error("pair is not its orbit minimum");
                break;
            case SetKind::PuncturedDLambda:
                if (std::pair<Elem, Elem>{f.neg(x), f.neg(y)} < std::pair<Elem, Elem>{x, y})
                    throw std::logic_error("pair is not its orbit minimum");
                break;
        }
    }
}

}  // namespace twoweight
