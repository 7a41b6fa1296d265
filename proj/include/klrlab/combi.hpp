#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace klrlab {

// Partition with an explicit number of parts; trailing zeros are significant.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const { return static_cast<int>(parts.size()); }  // part count
    int weight() const;                                           // |λ|
    int operator[](int i) const { return parts[i]; }              // 0-based
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    bool operator>(const Partition& o) const { return parts > o.parts; }
    std::string to_string() const;
};

bool is_partition(const std::vector<int>& parts);

using SlWeight = std::vector<int>;
using GlWeight = std::vector<int>;
using XiSequence = std::vector<int>;  // 1-based row indices

struct GTPattern {
    std::vector<Partition> layers;  // layers[0] = λ with n+1 parts, last layer has one part
    bool operator==(const GTPattern& o) const { return layers == o.layers; }
    bool operator<(const GTPattern& o) const { return layers < o.layers; }
};

// Cartan matrix of type A_n.
inline int cartan(int i, int j) {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
}

SlWeight weight_of_partition(const Partition& lambda);
// Partition with n+1 parts and last part zero whose weight is lbar.
Partition partition_of_weight(const SlWeight& lbar);

bool interlaces(const Partition& lambda, const Partition& mu);
// τ_k(λ); k < 0 means the union over all k. Lexicographically descending.
std::vector<Partition> interlacing_set(const Partition& lambda, int k = -1);
// Brute-force τ_k via subsets of boxes, one per column; used as a cross-check.
std::vector<Partition> interlacing_set_by_boxes(const Partition& lambda, int k = -1);

// With strict = false the result may fail to be weakly decreasing.
Partition xi_apply(const XiSequence& xi, const Partition& lambda, bool strict = true);
SlWeight xi_apply_weight(const XiSequence& xi, const SlWeight& lbar);
bool is_dominant_sequence(const XiSequence& xi, const Partition& lambda);
std::vector<XiSequence> enumerate_dominant(const Partition& lambda, int k);
// The unique nondecreasing dominant sequence taking λ to μ.
XiSequence xi_between(const Partition& lambda, const Partition& mu);

std::vector<GTPattern> enumerate_gt_patterns(const Partition& lambda);
bool is_gt_pattern(const GTPattern& s);
GlWeight gt_weight(const GTPattern& s);

std::int64_t weyl_dim(const Partition& lambda);
std::vector<GlWeight> schur_weights(int n, int d, bool dominant_only);
// All partitions with exactly m parts and |λ| = d, lexicographically descending.
std::vector<Partition> partitions_with_parts(int m, int d);

}  // namespace klrlab
