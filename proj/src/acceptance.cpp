#include "klrlab/acceptance.hpp"

#include "klrlab/batch.hpp"
#include "klrlab/cyclo.hpp"
#include "klrlab/uqmod.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace klrlab {

namespace {

struct Tally {
    long checked = 0, failed = 0;
    void check(bool ok) {
        ++checked;
        if (!ok) ++failed;
    }
    bool ok() const { return failed == 0 && checked > 0; }
    std::string str() const {
        std::ostringstream os;
        os << checked - failed << "/" << checked << " checks";
        return os.str();
    }
};

std::vector<Partition> small_partitions() {
    std::vector<Partition> out;
    for (int m : {3, 4})
        for (int d = 0; d <= 6; ++d)
            for (const auto& p : partitions_with_parts(m, d)) out.push_back(p);
    return out;
}

CriterionResult branching_dimensions() {
    Tally t;
    for (const auto& lam : small_partitions()) {
        long sum = 0;
        for (const auto& mu : interlacing_set(lam)) sum += weyl_dim(mu);
        t.check(sum == weyl_dim(lam));
    }
    return {1, "branching dimensions", t.ok(), t.str() + " over 3 and 4 parts, |λ| ≤ 6", 0, 1};
}

CriterionResult gt_enumeration() {
    Tally t;
    for (const auto& lam : small_partitions())
        t.check(static_cast<long>(enumerate_gt_patterns(lam).size()) == weyl_dim(lam));
    const size_t n = enumerate_gt_patterns(Partition({2, 1, 0})).size();
    t.check(n == 8);
    return {2, "Gelfand-Tsetlin enumeration", t.ok(), t.str() + ", |S(2,1,0)| = " + std::to_string(n), 0, 1};
}

CriterionResult module_oracle() {
    Tally t;
    int modules = 0;
    for (int a = 0; weyl_dim(partition_of_weight({a})) <= 30; ++a) {
        HighestWeightModule m = build_irreducible({a});
        t.check(verify_relations(m));
        t.check(m.dimension() == weyl_dim(partition_of_weight({a})));
        ++modules;
    }
    for (int a = 0; a <= 30; ++a)
        for (int b = 0; b <= 30; ++b) {
            const long d = weyl_dim(partition_of_weight({a, b}));
            if (d > 30) continue;
            HighestWeightModule m = build_irreducible({a, b});
            t.check(verify_relations(m));
            t.check(m.dimension() == d);
            ++modules;
        }
    return {3, "quantum module oracle", t.ok(), t.str() + " on " + std::to_string(modules) + " modules", 0, 30};
}

KLRWord random_word(std::mt19937_64& rng, const StrandSeq& b, int max_ops) {
    const int m = static_cast<int>(b.size());
    std::vector<Gen> ops;
    const int len = static_cast<int>(rng() % (max_ops + 1));
    for (int k = 0; k < len; ++k) {
        if (m > 1 && rng() % 3 != 0)
            ops.push_back(Gen::crossing(1 + static_cast<int>(rng() % (m - 1))));
        else
            ops.push_back(Gen::dot(1 + static_cast<int>(rng() % m)));
    }
    return make_word(b, ops);
}

StrandSeq random_seq(std::mt19937_64& rng, int rank, int max_len) {
    StrandSeq b(1 + rng() % max_len);
    for (int& l : b) l = 1 + static_cast<int>(rng() % rank);
    return b;
}

CriterionResult rewriting() {
    Tally t;
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 200; ++k) {
        const int rank = 1 + static_cast<int>(rng() % 3);
        const KLRElement x = KLRElement::from_word(rank, random_word(rng, random_seq(rng, rank, 4), 10));
        std::mt19937_64 r1(rng()), r2(rng());
        RewriteOptions o1, o2;
        o1.rng = &r1;
        o2.rng = &r2;
        t.check(normal_form(x, o1) == normal_form(x, o2));
    }
    for (int k = 0; k < 100; ++k) {
        const int rank = 1 + static_cast<int>(rng() % 3);
        const KLRWord c = random_word(rng, random_seq(rng, rank, 4), 4);
        const KLRWord b = random_word(rng, c.top(), 4);
        const KLRWord a = random_word(rng, b.top(), 4);
        const KLRElement A = KLRElement::from_word(rank, a), B = KLRElement::from_word(rank, b),
                         C = KLRElement::from_word(rank, c);
        t.check(multiply(A, multiply(B, C)) == multiply(multiply(A, B), C));
    }
    return {4, "rewriting confluence and associativity", t.ok(), t.str(), 0, 60};
}

CriterionResult derived_identity() {
    Tally t;
    for (int n = 2; n <= 4; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b : {a - 1, a + 1}) {
                if (b < 1 || b > n) continue;
                auto [lhs, rhs] = inv_r3(n, {a, a, b});
                t.check(normal_form(lhs) == normal_form(rhs));
            }
    return {5, "derived identity on (a,a,a±1)", t.ok(), t.str() + " for ranks 2-4", 0, 1};
}

CriterionResult factorization() {
    Tally t;
    std::mt19937_64 rng(606);
    const int n = 3;
    for (int s = 0; s < 100; ++s) {
        const int k = static_cast<int>(rng() % 3);
        const int free = static_cast<int>(rng() % (6 - k));
        StrandSeq seq(k, n);
        for (int i = 0; i < free; ++i) seq.push_back(1 + static_cast<int>(rng() % (n - 1)));
        std::shuffle(seq.begin(), seq.end(), rng);
        const auto terms = factor_general(seq, n);
        t.check(reconstruct(terms, n, seq) == KLRElement::idempotent(n, seq));
        for (const auto& ft : terms) t.check(std::is_sorted(ft.through.xi.begin(), ft.through.xi.end()));
    }
    return {6, "factorization through special idempotents", t.ok(), t.str(), 0, 120};
}

CriterionResult gdim_vs_shapovalov() {
    std::vector<CompareJob> jobs;
    for (int l = 1; l <= 3; ++l)
        for (auto& j : shapovalov_jobs(Partition({l, 0}), 3)) jobs.push_back(j);
    for (const auto& lam : {Partition({1, 0, 0}), Partition({1, 1, 0})})
        for (auto& j : shapovalov_jobs(lam, 3)) jobs.push_back(j);
    Tally t;
    int pairs = 0;
    for (const auto& c : compare_batch(jobs)) {
        t.check(c.ok && c.status == CycStatus::exact);
        pairs += static_cast<int>(c.labels.size() * c.labels.size());
    }
    return {7, "graded dimensions match the Shapovalov form", t.ok(),
            t.str() + " (" + std::to_string(jobs.size()) + " weight spaces, " + std::to_string(pairs) + " pairs)", 0,
            300};
}

CriterionResult sl2_base_case() {
    Tally t;
    for (int l = 0; l <= 3; ++l) t.check(sl2_vanishing_check(l).ok());
    return {8, "sl2 cyclotomic vanishing", t.ok(), t.str() + " for λ̄ = 0..3", 0, 60};
}

KLRElement random_corner(std::mt19937_64& rng, const XiSequence& xi, int rank, const StrandSeq& tail, int len) {
    StrandSeq b = p_block(xi, rank);
    const size_t P = b.size();
    b.insert(b.end(), tail.begin(), tail.end());
    for (;;) {
        KLRWord w = random_word(rng, b, len);
        const StrandSeq top = w.top();
        if (std::equal(b.begin(), b.begin() + static_cast<long>(P), top.begin())) return KLRElement::from_word(rank, w);
    }
}

CriterionResult projection() {
    CycContext ctx = make_context(Partition({2, 1, 0}));
    const int n = 2;
    Tally t;
    std::mt19937_64 rng(909);
    const auto xis = enumerate_dominant(ctx.lambda(), 1);
    for (const XiSequence& xi : xis) {
        CycContext& target = ctx.sub(xi);
        for (int len = 0; len <= 2; ++len) {
            const StrandSeq tail(len, 1);
            std::vector<KLRElement> gens{KLRElement::idempotent(1, tail)};
            for (int r = 1; r <= len; ++r) {
                gens.push_back(KLRElement::from_word(1, make_word(tail, {Gen::dot(r)})));
                if (r < len) gens.push_back(KLRElement::from_word(1, make_word(tail, {Gen::crossing(r)})));
            }
            for (const auto& g : gens)
                t.check(pi_project(lift_through(g, xi, n), xi, ctx).value == cyc_reduce(g, target).value);
        }
    }
    int products = 0, appends = 0;
    for (int s = 0; s < 50; ++s) {
        const XiSequence& xi = xis[s % xis.size()];
        CycContext& target = ctx.sub(xi);
        const size_t P = p_block(xi, n).size();
        const KLRElement h = random_corner(rng, xi, n, StrandSeq(1 + rng() % 2, 1), 1 + static_cast<int>(rng() % 5));
        const StrandSeq mid = h.terms().begin()->first.top();
        const KLRElement g = random_corner(rng, xi, n, StrandSeq(mid.begin() + static_cast<long>(P), mid.end()),
                                           1 + static_cast<int>(rng() % 5));
        const auto lhs = pi_project(multiply(g, h), xi, ctx);
        const auto rhs = cyc_reduce(multiply(pi_project(g, xi, ctx).value, pi_project(h, xi, ctx).value), target);
        t.check(lhs.value == rhs.value && lhs.status == CycStatus::exact && rhs.status == CycStatus::exact);
        ++products;
        const auto a = pi_project(append_strand(g, 1), xi, ctx);
        const auto b = cyc_reduce(append_strand(pi_project(g, xi, ctx).value, 1), target);
        t.check(a.value == b.value && a.status == CycStatus::exact && b.status == CycStatus::exact);
        ++appends;
    }
    return {9, "projection surjective, multiplicative, intertwining", t.ok(),
            t.str() + " (" + std::to_string(products) + " products, " + std::to_string(appends) + " appends)", 0, 120};
}

CriterionResult gt_orthogonality() {
    Tally t;
    std::string detail;
    for (const auto& lam : {Partition({1, 0}), Partition({2, 0}), Partition({1, 1, 0}), Partition({2, 1, 0})}) {
        CycContext ctx = make_context(lam);
        const auto r = gt_orthogonality_check(ctx);
        t.check(r.ok && r.status == CycStatus::exact && r.nonzero_diagonal == r.patterns);
        if (lam == Partition({2, 1, 0}))
            detail = ", (2,1,0): " + std::to_string(r.nonzero_diagonal) + " nonzero e(s), " +
                     std::to_string(r.distinct_sequences) + " distinct";
    }
    return {10, "Gelfand-Tsetlin orthogonality", t.ok(), t.str() + detail, 0, 300};
}

CriterionResult region_vanishing() {
    Tally t;
    int flagged = 0;
    for (const auto& lam : {Partition({1, 0}), Partition({1, 0, 0}), Partition({1, 1, 0})}) {
        CycContext ctx = make_context(lam);
        const int n = ctx.rank();
        std::vector<StrandSeq> seqs{{}};
        for (size_t k = 0; k < seqs.size(); ++k) {
            if (seqs[k].size() == 3) continue;
            for (int l = 1; l <= n; ++l) {
                StrandSeq s = seqs[k];
                s.push_back(l);
                seqs.push_back(s);
            }
        }
        for (const auto& s : seqs) {
            const auto v = weyl_vanishing_check(s, ctx);
            t.check(v.holds && v.status == CycStatus::exact);
            flagged += v.flagged;
        }
    }
    return {11, "region weights predict vanishing", t.ok(), t.str() + ", " + std::to_string(flagged) + " flagged", 0,
            120};
}

}  // namespace

CriterionResult run_criterion(int id) {
    static const std::vector<std::function<CriterionResult()>> table{
        branching_dimensions, gt_enumeration, module_oracle,      rewriting,        derived_identity, factorization,
        gdim_vs_shapovalov,   sl2_base_case,  projection,         gt_orthogonality, region_vanishing};
    if (id < 1 || id > static_cast<int>(table.size())) throw std::invalid_argument("no such criterion");
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1]();
    } catch (const std::exception& e) {
        r.id = id;
        r.title = "criterion " + std::to_string(id);
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget > 0 && r.seconds > r.budget) {
        r.pass = false;
        r.detail += ", over time budget";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 11; ++id) out.push_back(run_criterion(id));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " [%.2fs / %.0fs]", r.seconds, r.budget);
    return std::string(r.pass ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.title + " (" + r.detail +
           ")" + buf;
}

}  // namespace klrlab
