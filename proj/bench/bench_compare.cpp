// Times the (λ, β) comparison batch with and without OpenMP.
#include "klrlab/batch.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace klrlab;

int main(int argc, char** argv) {
    const int height = argc > 1 ? std::atoi(argv[1]) : 3;
    std::vector<CompareJob> jobs;
    for (const Partition& lam : {Partition({1, 0}), Partition({2, 0}), Partition({3, 0}), Partition({1, 0, 0}),
                                 Partition({1, 1, 0}), Partition({2, 1, 0})}) {
        auto js = shapovalov_jobs(lam, height);
        jobs.insert(jobs.end(), js.begin(), js.end());
    }
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    const auto serial = compare_batch_serial(jobs);
    auto t1 = clock::now();
    const auto parallel = compare_batch(jobs);
    auto t2 = clock::now();

    int agree = 0;
    for (size_t i = 0; i < jobs.size(); ++i) agree += serial[i].ok == parallel[i].ok && serial[i].gdim == parallel[i].gdim;
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const double ts = std::chrono::duration<double>(t1 - t0).count();
    const double tp = std::chrono::duration<double>(t2 - t1).count();
    std::printf("jobs %zu  threads %d\nserial   %.3fs\nparallel %.3fs\nspeedup  %.2fx\nagree    %d/%zu\n",
                jobs.size(), threads, ts, tp, ts / tp, agree, jobs.size());
    return agree == static_cast<int>(jobs.size()) ? 0 : 1;
}
