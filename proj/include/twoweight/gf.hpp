// Exact arithmetic in F_{p^m} for odd primes p, plus the character sums
// (quadratic characters, Gauss sums) needed by the code constructions.
//
// Elements are integer indices in [0, p^m): index digits in base p are the
// polynomial-basis coordinates, so indices 0..p-1 are the prime subfield.
// Multiplicative structure goes through log/antilog tables built once per
// field; a field is immutable after construction and safe to share across
// threads.

#ifndef TWOWEIGHT_GF_HPP
#define TWOWEIGHT_GF_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace twoweight {

using Elem = std::int32_t;

// Largest supported field: table memory stays a few MB.
inline constexpr std::int64_t kMaxFieldOrder = std::int64_t{1} << 20;

struct FieldParams {
    int p = 0;
    int m = 0;
    std::vector<int> modulus;  // monic, degree m, constant term first
};

bool is_prime(int n);

// Legendre symbol of t mod p (eta_1 with eta_1(0) = 0).
int legendre_symbol(std::int64_t t, int p);

class ExtensionField {
  public:
    // Deterministic realization: lexicographically smallest monic irreducible
    // modulus (constant term first) and the smallest primitive element.
    ExtensionField(int p, int m);

    int p() const { return params_.p; }
    int m() const { return params_.m; }
    Elem order() const { return q_; }
    const FieldParams& params() const { return params_; }
    Elem generator() const { return exp_table_[1 % (q_ - 1)]; }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;  // throws on 0
    Elem pow(Elem x, std::int64_t e) const;

    // Tr(x) = sum of x^{p^i}, i < m, as an integer in [0, p).
    int trace(Elem x) const { return trace_table_[x]; }

    // eta_m: 0 at 0, +1 on nonzero squares, -1 otherwise.
    int quadratic_character(Elem x) const;

    Elem exp(std::int64_t k) const;        // g^k, k reduced mod q-1
    std::int64_t log(Elem x) const;        // throws on 0

    const std::vector<Elem>& exp_table() const { return exp_table_; }
    const std::vector<std::int64_t>& log_table() const { return log_table_; }
    const std::vector<int>& trace_table() const { return trace_table_; }

  private:
    FieldParams params_;
    Elem q_ = 0;
    std::vector<Elem> exp_table_;
    std::vector<std::int64_t> log_table_;
    std::vector<int> trace_table_;
};

ExtensionField build_field(int p, int m);

// Canonical additive character chi(x) = zeta_p^{Tr(x)}.
std::complex<double> additive_character(const ExtensionField& f, Elem x);

// G_m = sum over c != 0 of eta_m(c) chi(c), by direct summation.
std::complex<double> gauss_sum_bruteforce(const ExtensionField& f);

// G_m = (-1)^{m-1} (sqrt(-1))^{(p-1)^2 m / 4} p^{m/2}.
std::complex<double> gauss_sum_closed_form(int p, int m);

// sum over c of chi(a2 c^2 + a1 c + a0), by direct summation; a2 != 0.
std::complex<double> quadratic_sum(const ExtensionField& f, Elem a2, Elem a1, Elem a0);

// Same sum via G_m eta_m(a2) chi(a0 - a1^2 (4 a2)^{-1}).
std::complex<double> quadratic_sum_closed_form(const ExtensionField& f, Elem a2, Elem a1,
                                               Elem a0);

}  // namespace twoweight

#endif
