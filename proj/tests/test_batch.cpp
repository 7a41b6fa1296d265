#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klrlab/batch.hpp"

using namespace klrlab;

TEST_CASE("job enumeration") {
    auto jobs = shapovalov_jobs(Partition({1, 1, 0}), 2);
    CHECK(jobs.size() == 6);
    CHECK(jobs.front().beta == std::vector<int>{0, 0});
    CHECK(jobs.back().beta == std::vector<int>{2, 0});
    CHECK(shapovalov_jobs(Partition({3}), 2).empty());
}

TEST_CASE("parallel batch agrees with the serial loop") {
    std::vector<CompareJob> jobs = shapovalov_jobs(Partition({2, 0}), 3);
    for (auto& j : shapovalov_jobs(Partition({1, 1, 0}), 2)) jobs.push_back(j);
    auto par = compare_batch(jobs);
    auto ser = compare_batch_serial(jobs);
    REQUIRE(par.size() == ser.size());
    for (size_t k = 0; k < par.size(); ++k) {
        CHECK(par[k].labels == ser[k].labels);
        CHECK(par[k].gdim == ser[k].gdim);
        CHECK(par[k].gram == ser[k].gram);
        CHECK(par[k].ok == ser[k].ok);
        CHECK(par[k].qshift == ser[k].qshift);
        CHECK(par[k].status == ser[k].status);
        CHECK(par[k].ok);
    }
}

TEST_CASE("errors inside a job reach the caller") {
    std::vector<CompareJob> jobs{{Partition({1, 0}), {1, 1}, 12, -1}};
    CHECK_THROWS(compare_batch(jobs));
    CHECK_THROWS(compare_batch_serial(jobs));
}
