// Timing comparison of the OpenMP grid kernels against their serial
// reference implementations. Build and run:
//   cmake --build build --target summlab_bench && ./build/bench/summlab_bench
#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "summlab/experiments.hpp"
#include "summlab/moduli.hpp"

using namespace summlab;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Timing {
    double serial_ms;
    double parallel_ms;
};

template <typename Serial, typename Parallel>
Timing time_pair(const Serial& serial, const Parallel& parallel, int repeats = 3) {
    Timing t{1e300, 1e300};
    for (int i = 0; i < repeats; ++i) {
        double t0 = now_ms();
        serial();
        t.serial_ms = std::min(t.serial_ms, now_ms() - t0);
        t0 = now_ms();
        parallel();
        t.parallel_ms = std::min(t.parallel_ms, now_ms() - t0);
    }
    return t;
}

void report(const char* name, const Timing& t) {
    std::printf("%-28s serial %8.2f ms   openmp %8.2f ms   speedup %.2fx\n", name, t.serial_ms,
                t.parallel_ms, t.serial_ms / t.parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns are serial\n");
#endif

    const auto lac = make_lacunary(0.5, 4096);
    const auto tri = make_triangle(4096);
    const auto C = SummabilityMatrix::cesaro(1024);
    const auto R = SummabilityMatrix::riesz(WeightSequence::linear(1025), 1024);

    report("sup_error n=512 grid=8192",
           time_pair([&] { sup_error_serial(C, lac.f, lac.series, 512, 8192); },
                     [&] { sup_error(C, lac.f, lac.series, 512, 8192); }));

    report("modulus grid=8192",
           time_pair([&] { modulus_of_continuity_serial(tri.f, 0.5, 8192); },
                     [&] { modulus_of_continuity(tri.f, 0.5, 8192); }));

    std::vector<int> ms;
    for (int m = 0; m <= 512; ++m) ms.push_back(m);
    std::vector<double> tg(4096);
    for (int i = 0; i < 4096; ++i) tg[static_cast<size_t>(i)] = kPi * (i + 1) / 4096;
    report("lemma8 m<=512 |t|=4096",
           time_pair([&] { lemma8_check_serial(1.0, ms, tg); },
                     [&] { lemma8_check(1.0, ms, tg); }));

    std::vector<int> ns;
    for (int n = 16; n <= 1024; n *= 2) ns.push_back(n);
    std::vector<double> tg2(2048);
    for (int i = 0; i < 2048; ++i) tg2[static_cast<size_t>(i)] = kPi * (i + 1) / 2048;
    report("lemma9 head n<=1024 |t|=2048",
           time_pair([&] { lemma9_head_check_serial(R, 0.0, ns, tg2); },
                     [&] { lemma9_head_check(R, 0.0, ns, tg2); }));

    return 0;
}
