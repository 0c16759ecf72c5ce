#include "twoweight/applications.hpp"

#include <numeric>
#include <stdexcept>

namespace twoweight {

RatioReport ab_ratio_check(const WeightDistribution& wd, int p) {
    RatioReport rep;
    for (const auto& [w, a] : wd.counts) {
        if (w == 0 || a == 0) continue;
        if (rep.w_min == 0) rep.w_min = w;
        rep.w_max = w;
    }
    if (rep.w_max == 0) throw std::invalid_argument("no nonzero weights");
    const std::int64_t g = std::gcd(rep.w_min, rep.w_max);
    rep.ratio = std::to_string(rep.w_min / g) + "/" + std::to_string(rep.w_max / g);
    rep.threshold = std::to_string(p - 1) + "/" + std::to_string(p);
    rep.pass = rep.w_min * p > rep.w_max * (p - 1);
    return rep;
}

MinimalityReport all_minimal_bruteforce(const CodeSpec& spec, std::int64_t max_codewords) {
    const ExtensionField& f = *spec.field;
    const std::int64_t q = f.order();
    if (q * q > max_codewords)
        throw std::length_error("minimality scan budget exceeded: " + std::to_string(q * q) +
                                " codewords");

    struct Word {
        std::vector<std::uint64_t> support;  // bitset over coordinates
        std::vector<std::uint8_t> symbols;
        std::int64_t weight = 0;
    };
    const std::size_t words64 = (spec.n + 63) / 64;
    std::vector<Word> code;
    for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;
            Word w;
            w.symbols = codeword(spec, a, b);
            w.support.assign(words64, 0);
            for (std::int64_t i = 0; i < spec.n; ++i)
                if (w.symbols[i]) {
                    w.support[i / 64] |= std::uint64_t{1} << (i % 64);
                    ++w.weight;
                }
            if (w.weight > 0) code.push_back(std::move(w));
        }
    }

    const auto proportional = [&](const Word& u, const Word& v) {
        int scale = 0;
        for (std::int64_t i = 0; i < spec.n; ++i) {
            if ((u.symbols[i] == 0) != (v.symbols[i] == 0)) return false;
            if (u.symbols[i] == 0) continue;
            int s = 1;
            for (int c = 1; c < f.p(); ++c)
                if (c * v.symbols[i] % f.p() == u.symbols[i]) s = c;
            if (scale == 0)
                scale = s;
            else if (scale != s)
                return false;
        }
        return true;
    };

    MinimalityReport rep;
    rep.codewords_scanned = static_cast<std::int64_t>(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = 0; j < code.size(); ++j) {
            if (i == j || code[j].weight >= code[i].weight) continue;
            bool contained = true;
            for (std::size_t wde = 0; wde < words64 && contained; ++wde)
                contained = (code[i].support[wde] & code[j].support[wde]) == code[j].support[wde];
            if (!contained) continue;
            // strict inclusion is implied by the weight comparison above
            ++rep.covering_pairs;
            if (!proportional(code[i], code[j])) ++rep.covering_pairs_nonproportional;
        }
    }
    rep.all_minimal = rep.covering_pairs_nonproportional == 0;
    return rep;
}

GriesmerReport griesmer_bound(std::int64_t n, int k, std::int64_t d, int p) {
    if (k < 1 || d < 1) throw std::invalid_argument("require k >= 1 and d >= 1");
    GriesmerReport rep;
    std::int64_t pi = 1;
    for (int i = 0; i < k; ++i) {
        rep.bound += (d + pi - 1) / pi;
        pi *= p;
    }
    rep.slack = n - rep.bound;
    return rep;
}

}  // namespace twoweight
