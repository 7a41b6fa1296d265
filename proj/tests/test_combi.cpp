#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klrlab/combi.hpp"

#include <algorithm>
#include <map>
#include <functional>

using namespace klrlab;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Dimension by counting semistandard tableaux with entries 1..m.
std::int64_t count_ssyt(const Partition& lambda) {
    const int m = lambda.size();
    std::vector<std::vector<int>> t(m);
    for (int r = 0; r < m; ++r) t[r].assign(lambda[r], 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::int64_t count = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            t[r][c] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("weights of partitions") {
    CHECK(weight_of_partition(P({2, 1, 0})) == SlWeight{1, 1});
    CHECK(weight_of_partition(P({4, 0})) == SlWeight{4});
    CHECK(weight_of_partition(P({3, 3, 1})) == SlWeight{0, 2});
    CHECK_THROWS(weight_of_partition(P({3})));
    CHECK(partition_of_weight({1, 1}) == P({2, 1, 0}));
    CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("interlacing sets") {
    CHECK(interlacing_set(P({2, 1, 0}), 0) == std::vector<Partition>{P({2, 1})});
    CHECK(interlacing_set(P({2, 1, 0})) ==
          std::vector<Partition>{P({2, 1}), P({2, 0}), P({1, 1}), P({1, 0})});
    CHECK(interlacing_set(P({2, 1, 0}), 3).empty());
    for (int m = 2; m <= 4; ++m)
        for (int d = 0; d <= 6; ++d)
            for (const Partition& lam : partitions_with_parts(m, d)) {
                auto a = interlacing_set(lam);
                CHECK(a == interlacing_set_by_boxes(lam));
                auto sorted = a;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                for (int k = 0; k <= d; ++k) CHECK(interlacing_set(lam, k) == interlacing_set_by_boxes(lam, k));
            }
}

TEST_CASE("xi maps and dominance") {
    CHECK(xi_apply({1}, P({2, 1, 0})) == P({1, 1, 0}));
    CHECK_THROWS(xi_apply({1, 1}, P({2, 1, 0})));
    CHECK(xi_apply({1, 1}, P({2, 1, 0}), false).parts == std::vector<int>{0, 1, 0});
    CHECK(xi_apply({1, 2}, P({2, 1, 0})) == P({1, 0, 0}));

    CHECK(enumerate_dominant(P({2, 1, 0}), 0) == std::vector<XiSequence>{{}});
    CHECK(enumerate_dominant(P({2, 1, 0}), 1) == std::vector<XiSequence>{{1}, {2}});
    CHECK(enumerate_dominant(P({2, 1, 0}), 2) == std::vector<XiSequence>{{1, 2}});

    for (int m = 2; m <= 4; ++m)
        for (int d = 0; d <= 6; ++d)
            for (const Partition& lam : partitions_with_parts(m, d))
                for (int k = 0; k <= d; ++k) {
                    std::vector<Partition> img;
                    // the bijection is stated for normalized λ (last part zero)
                    const bool normalized = lam.parts.back() == 0;
                    for (const XiSequence& xi : enumerate_dominant(lam, k)) {
                        Partition mu = xi_apply(xi, lam);
                        if (normalized) CHECK(mu.parts.back() == 0);
                        img.push_back(Partition(std::vector<int>(mu.parts.begin(), mu.parts.end() - 1)));
                        // weight variant agrees with the partition variant
                        SlWeight w = xi_apply_weight(xi, weight_of_partition(lam));
                        SlWeight expect = weight_of_partition(mu);
                        expect.pop_back();
                        CHECK(w == expect);
                    }
                    std::sort(img.begin(), img.end(), std::greater<>());
                    CHECK(std::adjacent_find(img.begin(), img.end()) == img.end());
                    if (normalized) CHECK(img == interlacing_set(lam, k));
                }
}

TEST_CASE("GT patterns and dimensions") {
    CHECK(enumerate_gt_patterns(P({0, 0, 0})).size() == 1);
    CHECK(enumerate_gt_patterns(P({1, 0, 0})).size() == 3);
    CHECK(enumerate_gt_patterns(P({2, 1, 0})).size() == 8);
    CHECK(weyl_dim(P({0, 0, 0})) == 1);
    CHECK(weyl_dim(P({1, 0, 0})) == 3);
    CHECK(weyl_dim(P({2, 1, 0})) == 8);

    GTPattern s{{P({1, 0, 0}), P({1, 0}), P({1})}};
    CHECK(gt_weight(s) == GlWeight{1, 0, 0});
    GTPattern s2{{P({1, 0, 0}), P({1, 0}), P({0})}};
    CHECK(gt_weight(s2) == GlWeight{0, 1, 0});
    CHECK(gt_weight(GTPattern{{P({0, 0}), P({0})}}) == GlWeight{0, 0});

    for (int m = 2; m <= 4; ++m)
        for (int d = 0; d <= 6; ++d)
            for (const Partition& lam : partitions_with_parts(m, d)) {
                CHECK(weyl_dim(lam) == count_ssyt(lam));
                auto pats = enumerate_gt_patterns(lam);
                CHECK(static_cast<std::int64_t>(pats.size()) == weyl_dim(lam));
                std::int64_t sum = 0;
                for (const Partition& mu : interlacing_set(lam)) sum += weyl_dim(mu);
                CHECK(sum == weyl_dim(lam));
                for (const auto& p : pats) {
                    CHECK(is_gt_pattern(p));
                    auto w = gt_weight(p);
                    int tot = 0;
                    for (int v : w) {
                        CHECK(v >= 0);
                        tot += v;
                    }
                    CHECK(tot == d);
                }
            }
}

TEST_CASE("GT weights restrict to the branching summands") {
    // Weights of V_λ restricted to the first n coordinates equal the union of
    // weights of V_μ over μ ∈ τ(λ).
    for (int m = 2; m <= 4; ++m)
        for (int d = 0; d <= 5; ++d)
            for (const Partition& lam : partitions_with_parts(m, d)) {
                std::map<GlWeight, int> lhs, rhs;
                for (const auto& s : enumerate_gt_patterns(lam)) {
                    auto w = gt_weight(s);
                    w.pop_back();
                    ++lhs[w];
                }
                for (const Partition& mu : interlacing_set(lam)) {
                    if (mu.size() == 0) continue;
                    for (const auto& s : enumerate_gt_patterns(mu)) ++rhs[gt_weight(s)];
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("Schur weight lattices") {
    CHECK(schur_weights(1, 3, false) == std::vector<GlWeight>{{3}});
    CHECK(schur_weights(2, 2, false) == std::vector<GlWeight>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(schur_weights(2, 2, true) == std::vector<GlWeight>{{2, 0}, {1, 1}});
    CHECK(schur_weights(3, 4, false).size() == 15);
}

TEST_CASE("branching sequence between layers") {
    CHECK(xi_between(P({2, 1, 0}), P({1, 0})) == XiSequence{1, 2});
    CHECK(xi_between(P({2, 0}), P({0})) == XiSequence{1, 1});
    CHECK(xi_between(P({1, 0}), P({1})).empty());
    CHECK_THROWS(xi_between(P({2, 1, 0}), P({2, 2})));
}
