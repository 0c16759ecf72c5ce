#include "twoweight/gf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twoweight {

namespace {

// Dense coefficient vectors (constant term first) are only used while the
// tables are being built; everything after construction is index arithmetic.
using Poly = std::vector<int>;

Poly poly_from_index(std::int64_t idx, int p, int m) {
    Poly c(m);
    for (int i = 0; i < m; ++i) {
        c[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    return c;
}

Elem poly_to_index(const Poly& c, int p) {
    std::int64_t idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
    return static_cast<Elem>(idx);
}

// a * b mod (modulus), all coefficients mod p; a, b of degree < m.
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
    const int m = static_cast<int>(modulus.size()) - 1;
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int k = 2 * m - 2; k >= m; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < m; ++i)
            prod[k - m + i] = ((prod[k - m + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(m);
    return prod;
}

Poly poly_pow_mod(Poly base, std::int64_t e, const Poly& modulus, int p) {
    const int m = static_cast<int>(modulus.size()) - 1;
    Poly r(m, 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = poly_mul_mod(r, base, modulus, p);
        base = poly_mul_mod(base, base, modulus, p);
        e >>= 1;
    }
    return r;
}

// Remainder of num by a monic divisor, mod p.
bool poly_divides(const Poly& divisor, Poly num, int p) {
    const int dd = static_cast<int>(divisor.size()) - 1;
    for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
        const int c = num[k];
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i)
            num[k - dd + i] = ((num[k - dd + i] - c * divisor[i]) % p + p) % p;
    }
    for (int i = 0; i < dd; ++i)
        if (num[i] != 0) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    for (int deg = 1; deg <= m / 2; ++deg) {
        std::int64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (std::int64_t t = 0; t < count; ++t) {
            Poly div = poly_from_index(t, p, deg);
            div.push_back(1);
            if (poly_divides(div, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree m, comparing coefficient vectors
// (c_0, ..., c_{m-1}) lexicographically with c_0 most significant.
Poly smallest_irreducible(int p, int m) {
    std::int64_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (std::int64_t rank = 0; rank < count; ++rank) {
        Poly f(m + 1, 0);
        f[m] = 1;
        std::int64_t r = rank;
        for (int i = m - 1; i >= 0; --i) {
            f[i] = static_cast<int>(r % p);
            r /= p;
        }
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre_symbol(std::int64_t t, int p) {
    t %= p;
    if (t < 0) t += p;
    if (t == 0) return 0;
    std::int64_t r = 1, base = t, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

ExtensionField::ExtensionField(int p, int m) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("p^m exceeds the supported field order cap");
    }
    q_ = static_cast<Elem>(q);
    params_.p = p;
    params_.m = m;
    params_.modulus = smallest_irreducible(p, m);

    // Smallest primitive element: order test against the prime factors of q-1.
    const auto factors = prime_factors(q - 1);
    Poly gen;
    for (Elem cand = 2; cand < q_; ++cand) {
        Poly c = poly_from_index(cand, p, m);
        bool primitive = true;
        for (std::int64_t f : factors) {
            Poly pw = poly_pow_mod(c, (q - 1) / f, params_.modulus, p);
            if (poly_to_index(pw, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = c;
            break;
        }
    }
    if (gen.empty()) throw std::logic_error("no primitive element found");

    exp_table_.assign(q - 1, 0);
    log_table_.assign(q, -1);
    Poly cur(m, 0);
    cur[0] = 1;
    for (std::int64_t i = 0; i < q - 1; ++i) {
        const Elem idx = poly_to_index(cur, p);
        exp_table_[i] = idx;
        if (log_table_[idx] != -1) throw std::logic_error("generator order too small");
        log_table_[idx] = i;
        cur = poly_mul_mod(cur, gen, params_.modulus, p);
    }

    // Traces of the polynomial basis, extended by F_p-linearity.
    std::vector<int> basis_trace(m);
    for (int j = 0; j < m; ++j) {
        Poly alpha_j(m, 0);
        alpha_j[j] = 1;
        Poly acc(m, 0);
        std::int64_t pe = 1;
        for (int i = 0; i < m; ++i) {
            Poly fr = poly_pow_mod(alpha_j, pe, params_.modulus, p);
            for (int t = 0; t < m; ++t) acc[t] = (acc[t] + fr[t]) % p;
            pe *= p;
        }
        for (int t = 1; t < m; ++t)
            if (acc[t] != 0) throw std::logic_error("trace not in the prime subfield");
        basis_trace[j] = acc[0];
    }
    trace_table_.assign(q, 0);
    for (std::int64_t x = 0; x < q; ++x) {
        std::int64_t rest = x;
        int t = 0;
        for (int j = 0; j < m; ++j) {
            t += static_cast<int>(rest % p) * basis_trace[j];
            rest /= p;
        }
        trace_table_[x] = t % p;
    }
}

Elem ExtensionField::add(Elem x, Elem y) const {
    const int p = params_.p;
    Elem out = 0;
    Elem mult = 1;
    while (x > 0 || y > 0) {
        out += (x % p + y % p) % p * mult;
        x /= p;
        y /= p;
        mult *= p;
    }
    return out;
}

Elem ExtensionField::neg(Elem x) const {
    const int p = params_.p;
    Elem out = 0;
    Elem mult = 1;
    while (x > 0) {
        out += (p - x % p) % p * mult;
        x /= p;
        mult *= p;
    }
    return out;
}

Elem ExtensionField::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem ExtensionField::mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    std::int64_t e = log_table_[x] + log_table_[y];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_table_[e];
}

Elem ExtensionField::inv(Elem x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return exp_table_[(q_ - 1 - log_table_[x]) % (q_ - 1)];
}

Elem ExtensionField::pow(Elem x, std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (x == 0) return e == 0 ? 1 : 0;
    return exp_table_[log_table_[x] * (e % (q_ - 1)) % (q_ - 1)];
}

int ExtensionField::quadratic_character(Elem x) const {
    if (x == 0) return 0;
    return log_table_[x] % 2 == 0 ? 1 : -1;
}

Elem ExtensionField::exp(std::int64_t k) const {
    k %= q_ - 1;
    if (k < 0) k += q_ - 1;
    return exp_table_[k];
}

std::int64_t ExtensionField::log(Elem x) const {
    if (x == 0) throw std::domain_error("log of zero");
    return log_table_[x];
}

ExtensionField build_field(int p, int m) { return ExtensionField(p, m); }

std::complex<double> additive_character(const ExtensionField& f, Elem x) {
    const double angle = 2.0 * std::numbers::pi * f.trace(x) / f.p();
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> gauss_sum_bruteforce(const ExtensionField& f) {
    std::complex<double> sum = 0.0;
    for (Elem c = 1; c < f.order(); ++c)
        sum += static_cast<double>(f.quadratic_character(c)) * additive_character(f, c);
    return sum;
}

std::complex<double> gauss_sum_closed_form(int p, int m) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const std::int64_t half = (p - 1) / 2;
    const int quarter_turns = static_cast<int>(half * half * m % 4);
    static const std::complex<double> kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;
    return sign * kI[quarter_turns] * std::pow(static_cast<double>(p), m / 2.0);
}

std::complex<double> quadratic_sum(const ExtensionField& f, Elem a2, Elem a1, Elem a0) {
    if (a2 == 0) throw std::domain_error("quadratic_sum requires a2 != 0");
    std::complex<double> sum = 0.0;
    for (Elem c = 0; c < f.order(); ++c) {
        const Elem v = f.add(f.add(f.mul(a2, f.mul(c, c)), f.mul(a1, c)), a0);
        sum += additive_character(f, v);
    }
    return sum;
}

std::complex<double> quadratic_sum_closed_form(const ExtensionField& f, Elem a2, Elem a1,
                                               Elem a0) {
    if (a2 == 0) throw std::domain_error("quadratic_sum requires a2 != 0");
    const Elem four = 4 % f.p();
    const Elem shift = f.sub(a0, f.mul(f.mul(a1, a1), f.inv(f.mul(four, a2))));
    return gauss_sum_closed_form(f.p(), f.m()) *
           static_cast<double>(f.quadratic_character(a2)) * additive_character(f, shift);
}

}  // namespace twoweight
