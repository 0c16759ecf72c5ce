#include "twoweight/dual.hpp"

#include <map>
#include <stdexcept>

namespace twoweight {

std::vector<std::uint8_t> GeneratorMatrix::column(std::int64_t c) const {
    std::vector<std::uint8_t> col(k);
    for (int r = 0; r < k; ++r) col[r] = at(r, c);
    return col;
}

GeneratorMatrix generator_matrix(const CodeSpec& spec) {
    const ExtensionField& f = *spec.field;
    const int m = f.m();
    const int d = spec.set->d;
    GeneratorMatrix g;
    g.p = f.p();
    g.k = 2 * m;
    g.n = spec.n;
    g.entries.assign(static_cast<std::size_t>(g.k) * g.n, 0);
    for (std::int64_t j = 0; j < g.n; ++j) {
        const auto& [x, y] = spec.set->pairs[j];
        const Elem u = f.mul(y, f.pow(x, d));
        Elem alpha_s = 1;  // alpha^s
        for (int s = 0; s < m; ++s) {
            g.entries[static_cast<std::size_t>(s) * g.n + j] =
                static_cast<std::uint8_t>(f.trace(f.mul(alpha_s, u)));
            g.entries[static_cast<std::size_t>(m + s) * g.n + j] =
                static_cast<std::uint8_t>(f.trace(f.mul(alpha_s, x)));
            if (s + 1 < m) alpha_s = f.mul(alpha_s, static_cast<Elem>(f.p()));
        }
    }
    return g;
}

int matrix_rank(const GeneratorMatrix& g) {
    std::vector<std::vector<int>> rows(g.k, std::vector<int>(g.n));
    for (int r = 0; r < g.k; ++r)
        for (std::int64_t c = 0; c < g.n; ++c) rows[r][c] = g.at(r, c);
    const int p = g.p;
    int rank = 0;
    for (std::int64_t col = 0; col < g.n && rank < g.k; ++col) {
        int pivot = -1;
        for (int r = rank; r < g.k; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        // scale pivot row to 1
        int inv = 1;
        for (int v = 1; v < p; ++v)
            if (v * rows[rank][col] % p == 1) inv = v;
        for (auto& v : rows[rank]) v = v * inv % p;
        for (int r = 0; r < g.k; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const int factor = rows[r][col];
            for (std::int64_t c = 0; c < g.n; ++c)
                rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

namespace {

bool is_zero(const std::vector<std::uint8_t>& v) {
    for (auto e : v)
        if (e) return false;
    return true;
}

// Scale so the first nonzero entry is 1; zero columns stay zero.
std::vector<std::uint8_t> normalize(std::vector<std::uint8_t> v, int p) {
    int lead = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) {
            lead = static_cast<int>(i);
            break;
        }
    if (lead < 0) return v;
    int inv = 1;
    for (int c = 1; c < p; ++c)
        if (c * v[lead] % p == 1) inv = c;
    for (auto& e : v) e = static_cast<std::uint8_t>(e * inv % p);
    return v;
}

}  // namespace

DualDistance dual_distance_upto_3(const GeneratorMatrix& g) {
    const int p = g.p;
    std::vector<std::vector<std::uint8_t>> cols(g.n);
    for (std::int64_t j = 0; j < g.n; ++j) {
        cols[j] = g.column(j);
        if (is_zero(cols[j])) return DualDistance::One;
    }

    std::map<std::vector<std::uint8_t>, std::int64_t> normalized;
    for (std::int64_t j = 0; j < g.n; ++j)
        if (!normalized.emplace(normalize(cols[j], p), j).second) return DualDistance::Two;

    // Three columns are dependent iff some v_i + t v_j, t != 0, is another
    // column projectively; pairwise proportionality is already excluded.
    std::vector<std::uint8_t> w(g.k);
    for (std::int64_t i = 0; i < g.n; ++i) {
        for (std::int64_t j = i + 1; j < g.n; ++j) {
            for (int t = 1; t < p; ++t) {
                for (int r = 0; r < g.k; ++r)
                    w[r] = static_cast<std::uint8_t>((cols[i][r] + t * cols[j][r]) % p);
                if (is_zero(w)) continue;  // cannot happen: i, j not proportional
                const auto hit = normalized.find(normalize(w, p));
                if (hit != normalized.end() && hit->second != i && hit->second != j)
                    return DualDistance::Three;
            }
        }
    }
    return DualDistance::AtLeastFour;
}

PlessReport pless_check(const WeightDistribution& wd, int p) {
    PlessReport rep;
    std::int64_t pk = 1, pk1 = 1;
    for (int i = 0; i < wd.k; ++i) pk *= p;
    for (int i = 0; i < wd.k - 1; ++i) pk1 *= p;
    for (const auto& [w, a] : wd.counts) {
        rep.codeword_total += a;
        rep.first_moment += w * a;
    }
    rep.codeword_expected = pk;
    rep.first_moment_expected = pk1 * (static_cast<std::int64_t>(p) * wd.n - wd.n);
    rep.pass = rep.codeword_total == rep.codeword_expected &&
               rep.first_moment == rep.first_moment_expected;
    return rep;
}

}  // namespace twoweight
