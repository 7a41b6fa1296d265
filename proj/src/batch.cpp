#include "klrlab/batch.hpp"

#include <exception>

namespace klrlab {

namespace {

ShapovalovComparison run_job(const CompareJob& job) {
    CycContext ctx = make_context(job.lambda, job.degree_cap, job.dot_cap);
    return compare_shapovalov(job.beta, ctx);
}

}  // namespace

std::vector<CompareJob> shapovalov_jobs(const Partition& lambda, int max_height, int degree_cap, int dot_cap) {
    const int rank = static_cast<int>(lambda.size()) - 1;
    std::vector<CompareJob> out;
    if (rank < 1) return out;
    std::vector<int> beta(rank, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rank) {
            out.push_back(CompareJob{lambda, beta, degree_cap, dot_cap});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            beta[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, max_height);
    return out;
}

std::vector<ShapovalovComparison> compare_batch_serial(const std::vector<CompareJob>& jobs) {
    std::vector<ShapovalovComparison> out;
    out.reserve(jobs.size());
    for (const auto& j : jobs) out.push_back(run_job(j));
    return out;
}

std::vector<ShapovalovComparison> compare_batch(const std::vector<CompareJob>& jobs) {
    const long n = static_cast<long>(jobs.size());
    std::vector<ShapovalovComparison> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k) {
        try {
            out[k] = run_job(jobs[k]);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace klrlab
