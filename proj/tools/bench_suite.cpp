// Benchmarks the OpenMP suite runner against the serial reference path.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "umbra/identity_suite.hpp"

using namespace umbra::suite;

namespace {

double run_once(bool parallel, int n_max) {
    SuiteConfig cfg;
    cfg.n_max = n_max;
    cfg.parallel = parallel;
    cfg.deterministic = true;  // timings excluded from the report itself
    auto t0 = std::chrono::steady_clock::now();
    Report rep = run_suite(cfg);
    auto t1 = std::chrono::steady_clock::now();
    if (rep.failed != 0) {
        std::fprintf(stderr, "benchmark run reported %d failures\n", rep.failed);
        std::exit(1);
    }
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n_max = argc > 1 ? std::atoi(argv[1]) : 6;
    std::printf("n_max=%d\n", n_max);
    double serial = run_once(false, n_max);
    std::printf("serial reference: %.3f s\n", serial);
    double parallel = run_once(true, n_max);
    std::printf("openmp runner:    %.3f s  (speedup %.2fx)\n", parallel, serial / parallel);
    return 0;
}
