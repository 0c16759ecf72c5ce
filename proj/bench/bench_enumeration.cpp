// Times the OpenMP enumeration kernel against the serial reference on one
// code and checks that both histograms agree. Defaults to the largest grid
// point; pass p m d [kind] to try others.
//
//   ./bench_enumeration 5 3 4 d0

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twoweight/analysis.hpp"

using namespace twoweight;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_s(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int p = 5, m = 3, d = 4;
    std::string kind_name = "d0";
    if (argc >= 4) {
        p = std::stoi(argv[1]);
        m = std::stoi(argv[2]);
        d = std::stoi(argv[3]);
    }
    if (argc >= 5) kind_name = argv[4];

    SetKind kind = SetKind::D0;
    if (kind_name == "dstar") kind = SetKind::DStar;
    if (kind_name == "dlambda") kind = SetKind::DLambda;
    const int lambda = kind == SetKind::DLambda ? 1 : 0;

    const auto field = build_field(p, m);
    const auto set = build_set(field, kind, d, lambda);
    const auto spec = CodeSpec::from(set);
    const std::int64_t symbols =
        static_cast<std::int64_t>(field.order()) * field.order() * spec.n;

    std::cout << "code " << to_string(kind) << " p=" << p << " m=" << m << " d=" << d
              << ": n=" << spec.n << ", " << symbols << " symbol evaluations\n";
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    CompleteWeightEnumerator fast, slow;
    const double t_fast = time_s([&] { fast = complete_weight_enumerator(spec); });
    const double t_slow = time_s([&] { slow = complete_weight_enumerator_reference(spec); });

    std::cout << "kernel:    " << t_fast << " s  (" << symbols / t_fast / 1e6 << " Msym/s)\n";
    std::cout << "reference: " << t_slow << " s  (" << symbols / t_slow / 1e6 << " Msym/s)\n";
    std::cout << "speedup:   " << t_slow / t_fast << "x\n";

    if (fast.terms != slow.terms) {
        std::cout << "HISTOGRAM MISMATCH\n";
        return 1;
    }
    std::cout << "histograms identical (" << fast.terms.size() << " compositions)\n";
    return 0;
}
