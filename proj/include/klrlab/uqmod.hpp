#pragma once

#include "klrlab/combi.hpp"
#include "klrlab/qint.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klrlab {

// Reduced fraction of Laurent polynomials. The denominator has lowest exponent
// zero and positive leading coefficient, so equal values compare equal.
class LaurentFrac {
public:
    LaurentFrac() : num_(), den_(1) {}
    LaurentFrac(long c) : num_(c), den_(1) {}
    LaurentFrac(const LaurentPoly& p) : num_(p), den_(1) {}
    LaurentFrac(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    LaurentFrac operator-() const;
    friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b);
    friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b);
    friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b);
    friend LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b);
    LaurentFrac& operator+=(const LaurentFrac& o) { return *this = *this + o; }
    LaurentFrac& operator-=(const LaurentFrac& o) { return *this = *this - o; }
    bool operator==(const LaurentFrac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const LaurentFrac& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

LaurentFrac bar_involution(const LaurentFrac& f);

using FWord = std::vector<int>;  // F_{w_k}...F_{w_1} v, listed w_1 first
using RootVec = std::vector<int>;
using FracVector = std::vector<LaurentFrac>;
using FracMatrix = std::vector<std::vector<LaurentFrac>>;

// Rank and pivot columns by fraction-free elimination.
int bareiss_rank(std::vector<std::vector<LaurentPoly>> m, std::vector<int>* pivot_cols = nullptr);
// Solves a x = b for square nonsingular a.
FracVector solve(FracMatrix a, FracVector b);

// Sl weight of the vector F_w v for highest weight lambda.
SlWeight weight_after(const SlWeight& lambda, const FWord& w);
RootVec content(int rank, const FWord& w);
// Height of λ − w0 λ, the number of F's needed to reach the lowest weight.
int full_depth(const SlWeight& lambda);

// Shapovalov form on the Verma module, memoized across calls.
class VermaForm {
public:
    explicit VermaForm(SlWeight lambda);
    const SlWeight& lambda() const { return lambda_; }
    LaurentPoly entry(const FWord& u, const FWord& w);
    // E_i F_w v as a combination of F-words.
    std::vector<std::pair<FWord, LaurentPoly>> apply_e(int i, const FWord& w) const;

private:
    SlWeight lambda_;
    std::map<std::pair<FWord, FWord>, LaurentPoly> memo_;
};

struct ShapovalovGram {
    SlWeight lambda;
    RootVec beta;
    std::vector<FWord> labels;
    std::vector<std::vector<LaurentPoly>> entries;
    int rank() const;
};

// All words of content beta, in lexicographic order.
std::vector<FWord> words_of_content(const RootVec& beta);
ShapovalovGram shapovalov_gram(const SlWeight& lambda, const RootVec& beta);

struct WeightSpace {
    RootVec beta;
    SlWeight weight;
    std::vector<FWord> basis;
    std::vector<std::vector<LaurentPoly>> gram;
};

class HighestWeightModule {
public:
    int rank() const { return static_cast<int>(lambda.size()); }
    int dimension() const;
    const WeightSpace* space(const RootVec& beta) const;
    bool contains(const RootVec& beta) const { return space(beta) != nullptr; }
    bool within_depth(const RootVec& beta) const;

    // Apply a generator to a coordinate vector of space beta. Returns nullopt
    // when the target lies beyond the constructed depth.
    std::optional<FracVector> apply_f(int i, const RootVec& beta, const FracVector& x) const;
    std::optional<FracVector> apply_e(int i, const RootVec& beta, const FracVector& x) const;
    FracVector apply_k(int i, const RootVec& beta, const FracVector& x, int power = 1) const;

    SlWeight lambda;
    int depth = 0;
    std::map<RootVec, WeightSpace> spaces;
    // Generator matrices keyed by (generator index, source weight); column j
    // is the image of basis vector j.
    std::map<std::pair<int, RootVec>, FracMatrix> f_mat, e_mat;
};

HighestWeightModule build_irreducible(const SlWeight& lambda, int depth = -1);
bool verify_relations(const HighestWeightModule& m);
// ⟨F_i x, y⟩ = ⟨x, q^{-1} K_i E_i y⟩ on every pair of adjacent weight spaces.
bool verify_biadjoint(const HighestWeightModule& m);

// Multiset of sl weights with multiplicities.
std::map<SlWeight, int> weight_multiset(const HighestWeightModule& m);
bool branching_character_check(const Partition& lambda);

}  // namespace klrlab
