#pragma once

#include "klrlab/cyclo.hpp"

#include <vector>

namespace klrlab {

// One Shapovalov comparison on the weight space of content beta.
struct CompareJob {
    Partition lambda;
    std::vector<int> beta;
    int degree_cap = 12;
    int dot_cap = -1;
};

// Every content vector of height at most max_height, in lexicographic order.
std::vector<CompareJob> shapovalov_jobs(const Partition& lambda, int max_height, int degree_cap = 12,
                                        int dot_cap = -1);

// Each job builds its own context, so jobs run independently. The parallel
// version uses OpenMP with dynamic scheduling; results keep the job order.
std::vector<ShapovalovComparison> compare_batch(const std::vector<CompareJob>& jobs);
std::vector<ShapovalovComparison> compare_batch_serial(const std::vector<CompareJob>& jobs);

}  // namespace klrlab
