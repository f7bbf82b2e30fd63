// Timing harness for the two data-parallel kernels: the compile-and-verify
// corpus sweep and the SNF certificate batch.  Runs each serial and with
// OpenMP, checks the outcomes agree, and prints a small table.  Not part of
// the test suite; build and run by hand when touching the kernels.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "platbook/corpus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
    const std::size_t corpus_cases = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2000;
    const std::size_t snf_cases = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 20000;

#ifdef _OPENMP
    std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in\n");
#endif
    std::printf("%-22s %10s %12s %12s %9s\n", "kernel", "cases", "serial ms", "parallel ms",
                "speedup");

    {
        auto t0 = clk::now();
        const auto ser = platbook::run_corpus(seed, corpus_cases, platbook::Execution::serial);
        const double ts = ms_since(t0);
        t0 = clk::now();
        const auto par = platbook::run_corpus(seed, corpus_cases, platbook::Execution::parallel);
        const double tp = ms_since(t0);
        if (ser.outcomes != par.outcomes) {
            std::printf("corpus: serial and parallel outcomes DIVERGE\n");
            return 1;
        }
        if (ser.failures != 0) {
            std::printf("corpus: %zu verification failures\n", ser.failures);
            return 1;
        }
        std::printf("%-22s %10zu %12.1f %12.1f %8.2fx\n", "compile+verify", corpus_cases, ts, tp,
                    ts / tp);
    }
    {
        auto t0 = clk::now();
        const auto ser = platbook::snf_batch(seed, snf_cases, platbook::Execution::serial);
        const double ts = ms_since(t0);
        t0 = clk::now();
        const auto par = platbook::snf_batch(seed, snf_cases, platbook::Execution::parallel);
        const double tp = ms_since(t0);
        if (ser.failures != par.failures || ser.failures != 0) {
            std::printf("snf batch: failures (serial %zu, parallel %zu)\n", ser.failures,
                        par.failures);
            return 1;
        }
        std::printf("%-22s %10zu %12.1f %12.1f %8.2fx\n", "snf+certificate", snf_cases, ts, tp,
                    ts / tp);
    }
    return 0;
}
