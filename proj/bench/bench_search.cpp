// Timings for the two data-parallel search kernels against their serial
// references. Not a test; run it by hand when touching the kernels.
//   ./bench_search [den_bound] [grid_size]

#include "adq/applications.hpp"
#include "adq/diophantus.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

double seconds(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double scene_time(const adq::RefractionScene& scene, double x) {
    double back = scene.d - x;
    return std::sqrt(scene.h1 * scene.h1 + x * x) / scene.v1 +
           std::sqrt(scene.h2 * scene.h2 + back * back) / scene.v2;
}

// The coarse-scan kernel from the least-time oracle, at a configurable
// grid size: fill the samples, then take the argmin serially so the
// result never depends on thread count.
int scan_argmin(const adq::RefractionScene& scene, int samples, bool parallel,
                double& elapsed) {
    std::vector<double> sampled(samples + 1);
    auto t0 = clock_type::now();
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int i = 0; i <= samples; ++i)
            sampled[i] = scene_time(scene, scene.d * i / samples);
    } else {
        for (int i = 0; i <= samples; ++i)
            sampled[i] = scene_time(scene, scene.d * i / samples);
    }
    int best = 0;
    for (int i = 1; i <= samples; ++i)
        if (sampled[i] < sampled[best]) best = i;
    elapsed = seconds(t0);
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    unsigned den_bound = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 3000;
    int grid = argc > 2 ? std::atoi(argv[2]) : (1 << 22);

#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("openmp disabled, serial build\n\n");
#endif

    std::printf("target_fraction: best b with denominator <= %u\n", den_bound);
    const adq::Rational targets[] = {adq::Rational(10), adq::Rational(13), adq::Rational(17)};
    const unsigned counts[] = {3, 2, 2};
    for (int i = 0; i < 3; ++i) {
        auto t0 = clock_type::now();
        adq::Rational serial = adq::target_fraction_serial(targets[i], counts[i], den_bound);
        double ts = seconds(t0);

        t0 = clock_type::now();
        adq::Rational parallel = adq::target_fraction(targets[i], counts[i], den_bound);
        double tp = seconds(t0);

        std::printf("  N=%s k=%u  serial %8.3f ms  parallel %8.3f ms  speedup %.2fx  %s\n",
                    targets[i].str().c_str(), counts[i], ts * 1e3, tp * 1e3, ts / tp,
                    serial == parallel ? "match" : "MISMATCH");
    }

    std::printf("\nleast-time coarse scan: %d samples\n", grid);
    const adq::RefractionScene scenes[] = {
        {1.0, 1.0, 2.0, 1.0, 0.5},
        {3.0, 1.0, 4.0, 2.0, 1.0},
        {0.5, 4.0, 6.0, 0.7, 2.2},
    };
    for (const adq::RefractionScene& scene : scenes) {
        double ts = 0.0, tp = 0.0;
        int serial = scan_argmin(scene, grid, false, ts);
        int parallel = scan_argmin(scene, grid, true, tp);
        std::printf("  h1=%.1f h2=%.1f d=%.1f  serial %8.3f ms  parallel %8.3f ms  "
                    "speedup %.2fx  %s\n",
                    scene.h1, scene.h2, scene.d, ts * 1e3, tp * 1e3, ts / tp,
                    serial == parallel ? "match" : "MISMATCH");
    }
    return 0;
}
