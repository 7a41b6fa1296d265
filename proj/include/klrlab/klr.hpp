#pragma once

#include "klrlab/combi.hpp"
#include "klrlab/qint.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace klrlab {

using StrandSeq = std::vector<int>;

// A generator acting on strands pos and pos+1 (crossing) or on strand pos (dot).
// Positions are 1-based.
struct Gen {
    bool cross = false;
    int pos = 1;

    static Gen dot(int r) { return {false, r}; }
    static Gen crossing(int r) { return {true, r}; }
    bool operator==(const Gen& o) const { return cross == o.cross && pos == o.pos; }
    bool operator<(const Gen& o) const { return cross != o.cross ? cross < o.cross : pos < o.pos; }
};

struct KLRWord {
    StrandSeq bottom;
    std::vector<Gen> ops;  // bottom to top

    StrandSeq top() const;
    int size() const { return static_cast<int>(bottom.size()); }
    bool operator==(const KLRWord& o) const { return bottom == o.bottom && ops == o.ops; }
    bool operator<(const KLRWord& o) const;
};

KLRWord make_word(const StrandSeq& bottom, const std::vector<Gen>& ops);
int degree(const KLRWord& w);
// Cartan pairing used in the grading and relations.
int crossing_degree(int i, int j);

// Integer linear combination of words sharing bottom and top sequences.
class KLRElement {
public:
    using Terms = std::map<KLRWord, BigInt>;

    KLRElement() = default;
    explicit KLRElement(int rank) : rank_(rank) {}
    static KLRElement from_word(int rank, const KLRWord& w, const BigInt& c = 1);
    static KLRElement idempotent(int rank, const StrandSeq& seq);

    int rank() const { return rank_; }
    void set_rank(int r) { rank_ = r; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const KLRWord& w, const BigInt& c);
    KLRElement& operator+=(const KLRElement& o);
    KLRElement& operator-=(const KLRElement& o);
    KLRElement scaled(const BigInt& c) const;
    friend KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
    friend KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
    bool operator==(const KLRElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const KLRElement& o) const { return !(*this == o); }

    // Degree if homogeneous; throws when terms have different degrees.
    bool homogeneous(int* deg = nullptr) const;
    std::string to_string() const;

private:
    int rank_ = 0;
    Terms terms_;
};

// Options for the rewriting engine. With rng set, rule choices are randomized.
struct RewriteOptions {
    std::mt19937_64* rng = nullptr;
    std::int64_t step_budget = 0;  // 0 means derived from the input size
};

struct RewriteStats {
    std::int64_t steps = 0;
};

// Canonical form ψ_w x^a 1_i: dots at the bottom sorted by strand, then the
// lexicographically minimal reduced word of w.
KLRElement normal_form(const KLRElement& x, const RewriteOptions& opt = {}, RewriteStats* stats = nullptr);
KLRElement normal_form(int rank, const KLRWord& w, const RewriteOptions& opt = {}, RewriteStats* stats = nullptr);
// a stacked on top of b.
KLRElement multiply(const KLRElement& a, const KLRElement& b);
KLRElement concat_raw(const KLRElement& a, const KLRElement& b);

// Permutation helpers. perm[p] = top position (0-based) of the strand starting at bottom position p.
std::vector<int> word_permutation(int strands, const std::vector<int>& crossings);
std::vector<int> lexmin_reduced_word(std::vector<int> perm);  // 1-based crossing positions, bottom to top
bool is_reduced(int strands, const std::vector<int>& crossings);

// Normal-form word from its data.
KLRWord normal_word(const StrandSeq& bottom, const std::vector<int>& dots, const std::vector<int>& perm);
// Decomposes a normal-form word into dot exponents and permutation.
void split_normal_word(const KLRWord& w, std::vector<int>& dots, std::vector<int>& perm);

// The identity derived from the quadratic and dot-slide relations, for a
// bottom sequence (a, a, b) with |a - b| = 1, placed at strands 1..3 of `labels`
// when labels has exactly three entries. Returns (lhs, rhs) with lhs = 1.
std::pair<KLRElement, KLRElement> inv_r3(int rank, const StrandSeq& labels);

struct SpecialIdempotentSpec {
    XiSequence xi;
    StrandSeq tail;
    int rank = 0;

    StrandSeq sequence() const;
    bool operator==(const SpecialIdempotentSpec& o) const { return xi == o.xi && tail == o.tail; }
    bool operator<(const SpecialIdempotentSpec& o) const {
        return xi != o.xi ? xi < o.xi : tail < o.tail;
    }
};

// The staircase block (i, i+1, ..., n).
StrandSeq p_block(int i, int n);
StrandSeq p_block(const XiSequence& xi, int n);

struct FactorTerm {
    BigInt coeff;
    KLRElement left;   // from the through idempotent up to the input
    SpecialIdempotentSpec through;
    KLRElement right;  // from the input up to the through idempotent
};

std::vector<FactorTerm> factor_one_strand(const StrandSeq& idem, int rank);
std::vector<FactorTerm> factor_general(const StrandSeq& idem, int rank);
// Σ coeff · left · right, normalized.
KLRElement reconstruct(const std::vector<FactorTerm>& terms, int rank, const StrandSeq& idem);

struct RegionDecoration {
    std::vector<std::vector<GlWeight>> heights;  // region labels at each height, left to right
    GlWeight rightmost;
    std::vector<GlWeight> negative;  // regions with a negative entry
    bool flagged() const { return !negative.empty(); }
};

RegionDecoration decorate_regions(const KLRWord& w, const GlWeight& start);

}  // namespace klrlab
