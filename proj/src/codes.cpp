#include "twoweight/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twoweight {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void tally(std::map<Composition, std::int64_t>& hist, const Composition& t) { ++hist[t]; }

}  // namespace

CodeSpec CodeSpec::from(const DefiningSet& s) {
    CodeSpec spec;
    spec.field = s.field;
    spec.set = &s;
    spec.n = s.size();
    spec.k_bound = 2 * s.field->m();
    return spec;
}

std::int64_t CompleteWeightEnumerator::total() const {
    std::int64_t sum = 0;
    for (const auto& [t, c] : terms) sum += c;
    return sum;
}

std::int64_t WeightDistribution::min_nonzero_weight() const {
    for (const auto& [w, a] : counts)
        if (w > 0 && a > 0) return w;
    return 0;
}

std::string WeightDistribution::polynomial() const {
    std::string out = "1";
    bool first = true;
    for (const auto& [w, a] : counts) {
        if (w == 0) continue;
        out += first ? " +" : "+";
        first = false;
        out += std::to_string(a) + "z^{" + std::to_string(w) + "}";
    }
    return out;
}

std::vector<std::uint8_t> codeword(const CodeSpec& spec, Elem a, Elem b) {
    const ExtensionField& f = *spec.field;
    const int d = spec.set->d;
    std::vector<std::uint8_t> out(spec.set->pairs.size());
    std::size_t j = 0;
    for (const auto& [x, y] : spec.set->pairs) {
        const Elem v = f.add(f.mul(a, f.mul(y, f.pow(x, d))), f.mul(b, x));
        out[j++] = static_cast<std::uint8_t>(f.trace(v));
    }
    return out;
}

CompleteWeightEnumerator complete_weight_enumerator_reference(const CodeSpec& spec) {
    const ExtensionField& f = *spec.field;
    CompleteWeightEnumerator cwe;
    cwe.n = spec.n;
    cwe.p = f.p();
    Composition t(f.p());
    for (Elem a = 0; a < f.order(); ++a) {
        for (Elem b = 0; b < f.order(); ++b) {
            std::fill(t.begin(), t.end(), 0);
            for (std::uint8_t s : codeword(spec, a, b)) ++t[s];
            tally(cwe.terms, t);
        }
    }
    return cwe;
}

CompleteWeightEnumerator complete_weight_enumerator(const CodeSpec& spec, std::int64_t budget) {
    const ExtensionField& f = *spec.field;
    const std::int64_t q = f.order();
    if (q * q > budget || spec.n > budget / (q * q))
        throw std::length_error("enumeration budget exceeded: p^{2m} * n = " +
                                std::to_string(q) + "^2 * " + std::to_string(spec.n) +
                                " symbol evaluations");

    const int p = f.p();
    const int d = spec.set->d;
    const std::int64_t q1 = q - 1;
    const std::int64_t n = spec.n;

    // Folded tables: symbol = tex[log a + log u_j] + tex[log b + log x_j]
    // mod p, with zero factors contributing nothing. tex is doubled so the
    // exponent sum never needs reducing.
    std::vector<std::uint8_t> tex(2 * q1);
    for (std::int64_t t = 0; t < 2 * q1; ++t)
        tex[t] = static_cast<std::uint8_t>(f.trace(f.exp_table()[t % q1]));

    std::vector<std::int64_t> log_u(n), log_x(n);
    for (std::int64_t j = 0; j < n; ++j) {
        const auto& [x, y] = spec.set->pairs[j];
        const Elem u = f.mul(y, f.pow(x, d));
        log_u[j] = u == 0 ? -1 : f.log(u);
        log_x[j] = f.log(x);
    }

    CompleteWeightEnumerator cwe;
    cwe.n = spec.n;
    cwe.p = p;

#pragma omp parallel
    {
        std::map<Composition, std::int64_t> local;
        std::vector<std::uint8_t> part_a(n);
        Composition t(p);
#pragma omp for schedule(dynamic)
        for (std::int64_t ia = 0; ia < q; ++ia) {
            if (ia == 0) {
                std::fill(part_a.begin(), part_a.end(), 0);
            } else {
                const std::int64_t la = f.log_table()[ia];
                for (std::int64_t j = 0; j < n; ++j)
                    part_a[j] = log_u[j] >= 0 ? tex[la + log_u[j]] : 0;
            }
            for (std::int64_t ib = 0; ib < q; ++ib) {
                std::fill(t.begin(), t.end(), 0);
                if (ib == 0) {
                    for (std::int64_t j = 0; j < n; ++j) ++t[part_a[j]];
                } else {
                    const std::int64_t lb = f.log_table()[ib];
                    for (std::int64_t j = 0; j < n; ++j) {
                        int s = part_a[j] + tex[lb + log_x[j]];
                        if (s >= p) s -= p;
                        ++t[s];
                    }
                }
                tally(local, t);
            }
        }
#pragma omp critical
        for (const auto& [key, count] : local) cwe.terms[key] += count;
    }
    return cwe;
}

WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe, int k_bound) {
    Composition zero(cwe.p, 0);
    zero[0] = static_cast<std::uint32_t>(cwe.n);
    const auto it = cwe.terms.find(zero);
    if (it == cwe.terms.end()) throw std::logic_error("zero codeword missing");
    const std::int64_t fiber = it->second;

    int fiber_dim = 0;
    for (std::int64_t v = fiber; v > 1; v /= cwe.p, ++fiber_dim)
        if (v % cwe.p != 0) throw std::logic_error("zero fiber is not a power of p");

    WeightDistribution wd;
    wd.n = cwe.n;
    wd.k = k_bound - fiber_dim;
    for (const auto& [t, count] : cwe.terms) {
        if (count % fiber != 0) throw std::logic_error("composition count not fiber-divisible");
        wd.counts[cwe.n - t[0]] += count / fiber;
    }
    return wd;
}

WeightDistribution predict_wd(SetKind kind, int p, int m, int lambda) {
    if (m < 2) throw std::invalid_argument("closed forms require m >= 2");
    const std::int64_t pm = ipow(p, m), pm1 = ipow(p, m - 1);
    const std::int64_t p2m1 = ipow(p, 2 * m - 1), p2m2 = ipow(p, 2 * m - 2);

    WeightDistribution wd;
    wd.k = 2 * m;
    wd.counts[0] = 1;
    switch (kind) {
        case SetKind::D0:
            wd.n = p2m1 - pm1;
            wd.counts[(p - 1) * p2m2] = (pm - 1) * (pm - pm1 + 1);
            wd.counts[(p - 1) * (pm1 - 1) * pm1] = (pm - 1) * pm1;
            break;
        case SetKind::DStar:
            wd.n = p2m1 - pm - pm1 + 1;
            wd.counts[(p - 1) * (pm1 - 1) * pm1] = (pm - 1) * (pm - pm1 + 2);
            wd.counts[(p - 1) * (pm1 - 2) * pm1] = (pm - 1) * (pm1 - 1);
            break;
        case SetKind::DLambda:
            if (lambda % p == 0) throw std::invalid_argument("lambda must be nonzero");
            wd.n = p2m1 - pm1;
            wd.counts[(p - 1) * p2m2] = ((p + 1) / 2 * pm1 + 1) * (pm - 1);
            wd.counts[(pm - pm1 - 2) * pm1] = (p - 1) / 2 * pm1 * (pm - 1);
            break;
        case SetKind::PuncturedD0:
            wd.n = (p2m1 - pm1) / (p - 1);
            wd.counts[p2m2] = (pm - pm1 + 1) * (pm - 1);
            wd.counts[(pm1 - 1) * pm1] = pm1 * (pm - 1);
            break;
        case SetKind::PuncturedDStar:
            wd.n = (p2m1 - pm - pm1 + 1) / (p - 1);
            wd.counts[(pm1 - 1) * pm1] = (pm - pm1 + 2) * (pm - 1);
            wd.counts[(pm1 - 2) * pm1] = (pm - 1) * (pm1 - 1);
            break;
        case SetKind::PuncturedDLambda:
            if (lambda % p == 0) throw std::invalid_argument("lambda must be nonzero");
            wd.n = (p2m1 - pm1) / 2;
            wd.counts[(p - 1) / 2 * p2m2] = ((p + 1) / 2 * pm1 + 1) * (pm - 1);
            wd.counts[(pm - pm1 - 2) * pm1 / 2] = (p - 1) / 2 * pm1 * (pm - 1);
            break;
    }
    return wd;
}

CompleteWeightEnumerator predict_cwe(SetKind kind, int p, int m, int lambda) {
    if (m < 2) throw std::invalid_argument("closed forms require m >= 2");
    const std::int64_t pm = ipow(p, m), pm1 = ipow(p, m - 1);
    const std::int64_t p2m1 = ipow(p, 2 * m - 1), p2m2 = ipow(p, 2 * m - 2);

    CompleteWeightEnumerator cwe;
    cwe.p = p;
    const auto flat = [&](std::int64_t t0, std::int64_t ti) {
        Composition t(p, static_cast<std::uint32_t>(ti));
        t[0] = static_cast<std::uint32_t>(t0);
        return t;
    };
    const auto check_and_add = [&](const Composition& t, std::int64_t count) {
        if (std::accumulate(t.begin(), t.end(), std::int64_t{0}) != cwe.n)
            throw std::logic_error("composition does not sum to n");
        cwe.terms[t] += count;
    };

    switch (kind) {
        case SetKind::D0:
            cwe.n = p2m1 - pm1;
            check_and_add(flat(cwe.n, 0), 1);
            check_and_add(flat(p2m2 - pm1, p2m2), (pm - pm1 + 1) * (pm - 1));
            check_and_add(flat(p2m2 + (p - 2) * pm1, p2m2 - pm1), pm1 * (pm - 1));
            break;
        case SetKind::DStar:
            cwe.n = p2m1 - pm - pm1 + 1;
            check_and_add(flat(cwe.n, 0), 1);
            check_and_add(flat(p2m2 - 2 * pm1 + 1, (pm1 - 1) * pm1), (pm - pm1 + 2) * (pm - 1));
            check_and_add(flat(p2m2 + (p - 3) * pm1 + 1, (pm1 - 2) * pm1), (pm1 - 1) * (pm - 1));
            break;
        case SetKind::DLambda: {
            if (lambda % p == 0) throw std::invalid_argument("lambda must be nonzero");
            cwe.n = p2m1 - pm1;
            check_and_add(flat(cwe.n, 0), 1);
            check_and_add(flat(p2m2 - pm1, p2m2), (pm1 + 1) * (pm - 1));
            // One family per j = Tr(ab) in F_p^*, with exponents
            // p^{2m-2} + eta_1(i^2 - 4 lambda j) p^{m-1}; each j accounts for
            // the p^{m-1}(p^m - 1) parameter pairs with that trace value.
            for (int j = 1; j < p; ++j) {
                Composition t(p);
                for (int i = 0; i < p; ++i) {
                    const int eta = legendre_symbol(static_cast<std::int64_t>(i) * i -
                                                        4ll * lambda * j,
                                                    p);
                    t[i] = static_cast<std::uint32_t>(p2m2 + eta * pm1);
                }
                check_and_add(t, pm1 * (pm - 1));
            }
            break;
        }
        default:
            throw std::invalid_argument("no symbolic complete weight enumerator for " +
                                        to_string(kind));
    }
    return cwe;
}

namespace {

std::string composition_label(const Composition& t) {
    std::string out = "t=[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
    }
    return out + "]";
}

}  // namespace

namespace {

template <class Map>
std::int64_t count_or_zero(const Map& map, const typename Map::key_type& key) {
    const auto it = map.find(key);
    return it == map.end() ? 0 : it->second;
}

}  // namespace

CompareReport compare(const WeightDistribution& actual, const WeightDistribution& predicted) {
    CompareReport rep;
    if (actual.n != predicted.n) rep.mismatches.push_back({"n", actual.n, predicted.n});
    if (actual.k != predicted.k) rep.mismatches.push_back({"k", actual.k, predicted.k});
    std::set<std::int64_t> weights;
    for (const auto& [w, c] : actual.counts) weights.insert(w);
    for (const auto& [w, c] : predicted.counts) weights.insert(w);
    for (std::int64_t w : weights) {
        const auto a = count_or_zero(actual.counts, w);
        const auto e = count_or_zero(predicted.counts, w);
        if (a != e) rep.mismatches.push_back({"w=" + std::to_string(w), a, e});
    }
    return rep;
}

CompareReport compare(const CompleteWeightEnumerator& actual,
                      const CompleteWeightEnumerator& predicted) {
    CompareReport rep;
    if (actual.n != predicted.n) rep.mismatches.push_back({"n", actual.n, predicted.n});
    std::set<Composition> keys;
    for (const auto& [t, c] : actual.terms) keys.insert(t);
    for (const auto& [t, c] : predicted.terms) keys.insert(t);
    for (const auto& t : keys) {
        const auto a = count_or_zero(actual.terms, t);
        const auto e = count_or_zero(predicted.terms, t);
        if (a != e) rep.mismatches.push_back({composition_label(t), a, e});
    }
    return rep;
}

}  // namespace twoweight
