// Compares serial against OpenMP-parallel resolution of kernel query sets.
// Timings here are real and for humans; the CLI reports stay deterministic.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orclique/batching.hpp"
#include "orclique/generator.hpp"
#include "orclique/pipeline.hpp"
#include "orclique/query_solving.hpp"

using namespace orclique;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d).count();
}

struct Workload {
    const char* name;
    CliqueInstance inst;
    KernelChoice kernel;
};

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::vector<Workload> workloads;
    workloads.push_back({"gnp(60,0.4) k=6 degeneracy",
                         {gen_gnp(60, 0.4, 11), 6},
                         KernelChoice::Degeneracy});
    workloads.push_back({"gnp(50,0.5) k=7 loc",
                         {gen_gnp(50, 0.5, 12), 7},
                         KernelChoice::LongestOddCycle});
    workloads.push_back({"planted(70,0.3,8) k=8 dbd",
                         {gen_planted_clique(70, 0.3, 8, 13), 8},
                         KernelChoice::BoundedDegree});
    workloads.push_back({"gnp(45,0.6) k=8 chordal",
                         {gen_gnp(45, 0.6, 14), 8},
                         KernelChoice::Chordal});

    std::printf("%-32s %10s %12s %12s %8s\n", "workload", "queries", "serial ms", "parallel ms",
                "speedup");
    for (const auto& w : workloads) {
        QuerySet qs = generate_kernel_queries(w.inst, w.kernel, 3);

        auto t0 = std::chrono::steady_clock::now();
        bool serial = or_of_queries(qs, ExecutionMode::Serial);
        double serial_ms = ms_since(t0);

        auto t1 = std::chrono::steady_clock::now();
        bool parallel = or_of_queries(qs, ExecutionMode::Parallel);
        double parallel_ms = ms_since(t1);

        if (serial != parallel) {
            std::printf("MISMATCH on %s\n", w.name);
            return 1;
        }
        std::printf("%-32s %10zu %12.2f %12.2f %7.2fx\n", w.name, qs.queries.size(), serial_ms,
                    parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
    }
    return 0;
}
