#pragma once

#include "klrlab/klr.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace klrlab {

enum class CycStatus { exact, capped };
std::string to_string(CycStatus s);
inline CycStatus combine(CycStatus a, CycStatus b) {
    return a == CycStatus::exact && b == CycStatus::exact ? CycStatus::exact : CycStatus::capped;
}

// Rational linear combination of normal-form words.
struct QElement {
    int rank = 0;
    std::map<KLRWord, mpq_class> terms;

    static QElement from(const KLRElement& x);
    bool is_zero() const { return terms.empty(); }
    void add(const KLRWord& w, const mpq_class& c);
    bool operator==(const QElement& o) const { return terms == o.terms; }
    bool operator!=(const QElement& o) const { return !(*this == o); }
    std::string to_string() const;
};

QElement multiply(const QElement& a, const QElement& b);

using SparseRow = std::map<int, mpq_class>;

// Reduced row echelon form, pivots at the smallest column of each row.
class Echelon {
public:
    bool insert(SparseRow row);  // true when the rank grew
    SparseRow remainder(SparseRow row) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(SparseRow& row) const;
    std::map<int, SparseRow> rows_;
};

// One graded piece 1_{top} R^λ 1_{bottom} in a fixed degree.
struct CycPiece {
    std::vector<KLRWord> basis;
    std::map<KLRWord, int> index;
    Echelon ideal;
    bool truncated = false;  // the dot cap cut the spanning set
    int dim() const { return static_cast<int>(basis.size()) - ideal.rank(); }
};

class CycContext {
public:
    CycContext(Partition lambda, int degree_cap, int dot_cap);

    const Partition& lambda() const { return lambda_; }
    const SlWeight& lbar() const { return lbar_; }
    int rank() const { return static_cast<int>(lbar_.size()); }
    int degree_cap() const { return degree_cap_; }
    int dot_cap() const { return dot_cap_; }

    // Graded piece with stabilization under dot-cap increments; status is
    // capped when the piece changed within two increments.
    const CycPiece& piece(const StrandSeq& bottom, const StrandSeq& top, int degree, CycStatus* status = nullptr);

    // Context for R^{ξ(λ)}, shared across calls.
    CycContext& sub(const XiSequence& xi);

private:
    struct Gen {
        KLRElement y;
        int degree;
    };
    const std::vector<Gen>& generators(const StrandSeq& bottom, const StrandSeq& top);
    CycPiece build(const StrandSeq& bottom, const StrandSeq& top, int degree, int dot_cap);

    Partition lambda_;
    SlWeight lbar_;
    int degree_cap_, dot_cap_;
    std::map<std::pair<StrandSeq, StrandSeq>, std::vector<Gen>> gens_;
    struct Entry {
        CycPiece piece;
        CycStatus status;
    };
    std::map<std::tuple<StrandSeq, StrandSeq, int>, Entry> pieces_;
    std::map<XiSequence, std::unique_ptr<CycContext>> subs_;
};

// dot_cap < 0 selects |λ| + max λ̄_i.
CycContext make_context(const Partition& lambda, int degree_cap = 12, int dot_cap = -1);

// Permutations carrying the labels of bottom onto top.
std::vector<std::vector<int>> perms_between(const StrandSeq& bottom, const StrandSeq& top);
// All distinct rearrangements of a sequence, in lexicographic order.
std::vector<StrandSeq> rearrangements(StrandSeq s);

struct CycResult {
    QElement value;
    CycStatus status = CycStatus::exact;
};
CycResult cyc_reduce(const KLRElement& x, CycContext& ctx);
CycResult cyc_reduce(const QElement& x, CycContext& ctx);

struct GdimResult {
    LaurentPoly gdim;
    CycStatus status = CycStatus::exact;
};
// Graded dimension of 1_{top} R^λ 1_{bottom}.
GdimResult gdim_hom(const StrandSeq& bottom, const StrandSeq& top, CycContext& ctx);

// Same, with additional words declared zero.
using WordFilter = std::function<bool(const KLRWord&)>;
GdimResult gdim_hom_killing(const StrandSeq& bottom, const StrandSeq& top, CycContext& ctx, const WordFilter& kill);

struct ShapovalovComparison {
    std::vector<StrandSeq> labels;
    std::vector<std::vector<LaurentPoly>> gdim, gram;
    int qshift = 0;
    bool ok = false;
    CycStatus status = CycStatus::exact;
};
// gdim = q^qshift · gram entrywise on every pair of sequences of content beta.
ShapovalovComparison compare_shapovalov(const std::vector<int>& beta, CycContext& ctx);
ShapovalovComparison compare_shapovalov(const std::vector<StrandSeq>& seqs, CycContext& ctx);

SpecialIdempotentSpec special_idempotent(const XiSequence& xi, const StrandSeq& tail, const CycContext& ctx);

// Group index of each strand at the bottom of a word; -1 for free strands.
struct PGroupMask {
    std::vector<int> group;
    static PGroupMask for_special(const SpecialIdempotentSpec& e);
};
bool tilde_kernel_test(const KLRWord& w, const PGroupMask& mask);

// Image under π_ξ, reduced in R^{ξ(λ)}.
CycResult pi_project(const KLRElement& x, const XiSequence& xi, CycContext& ctx);
// Free strand j at position after the p-block, pulled left across it with r dots.
KLRElement x_generator(int i, int j, int r, int rank);
// Appends a strand labeled j on the right.
KLRElement append_strand(const KLRElement& x, int j);
QElement append_strand(const QElement& x, int j);
// The p-block placed on the left of every term.
KLRElement lift_through(const KLRElement& x, const XiSequence& xi, int rank);

struct GTIdempotent {
    GTPattern pattern;
    StrandSeq sequence;
    std::vector<int> layer;  // branching layer of each strand
};
GTIdempotent gt_idempotent(const GTPattern& s);
// Words of 1_{e(s')} R 1_{e(s)} that vanish in the Gelfand-Tsetlin quotient.
bool gt_killed(const KLRWord& w, const GTIdempotent& bottom, const GTIdempotent& top);

struct GTOrthogonality {
    bool ok = false;
    CycStatus status = CycStatus::exact;
    int patterns = 0;
    int nonzero_diagonal = 0;  // patterns whose e(s) survives in the quotient
    int distinct_sequences = 0;
};
GTOrthogonality gt_orthogonality_check(CycContext& ctx);

struct Sl2Vanishing {
    bool vanishes = false;        // 1 on λ̄₁ + 1 strands is zero
    bool below_nonzero = false;   // 1 on λ̄₁ strands is nonzero
    CycStatus status = CycStatus::exact;
    bool ok() const { return vanishes && below_nonzero && status == CycStatus::exact; }
};
Sl2Vanishing sl2_vanishing_check(int lbar1, int degree_cap = 12, int dot_cap = -1);

struct WeylVanishing {
    bool flagged = false;
    bool holds = false;
    CycStatus status = CycStatus::exact;
};
WeylVanishing weyl_vanishing_check(const StrandSeq& idem, CycContext& ctx);

}  // namespace klrlab
