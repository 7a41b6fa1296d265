#include "klrlab/combi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klrlab {

bool is_partition(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (!is_partition(parts)) throw std::invalid_argument("not a partition: " + to_string());
}

int Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

SlWeight weight_of_partition(const Partition& lambda) {
    if (lambda.size() < 2) throw std::invalid_argument("weight_of_partition needs at least 2 parts");
    SlWeight w;
    for (int i = 0; i + 1 < lambda.size(); ++i) w.push_back(lambda[i] - lambda[i + 1]);
    return w;
}

Partition partition_of_weight(const SlWeight& lbar) {
    std::vector<int> p(lbar.size() + 1, 0);
    for (int i = static_cast<int>(lbar.size()) - 1; i >= 0; --i) {
        if (lbar[i] < 0) throw std::invalid_argument("weight is not dominant");
        p[i] = p[i + 1] + lbar[i];
    }
    return Partition(p);
}

bool interlaces(const Partition& lambda, const Partition& mu) {
    if (mu.size() + 1 != lambda.size()) return false;
    for (int i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i] || mu[i] < lambda[i + 1]) return false;
    return true;
}

std::vector<Partition> interlacing_set(const Partition& lambda, int k) {
    if (lambda.size() < 1) throw std::invalid_argument("empty partition");
    const int n = lambda.size() - 1;
    std::vector<Partition> out;
    std::vector<int> mu(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (k < 0 || lambda.weight() - std::accumulate(mu.begin(), mu.end(), 0) == k)
                out.emplace_back(mu);
            return;
        }
        for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Partition> interlacing_set_by_boxes(const Partition& lambda, int k) {
    // Remove any subset of boxes that leaves a Young diagram with n rows; the
    // bottom row must be fully removed and at most one box per column goes.
    const int rows = lambda.size();
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < lambda[r]; ++c) boxes.emplace_back(r, c);
    std::set<Partition, std::greater<>> found;
    const size_t nb = boxes.size();
    if (nb > 24) throw std::invalid_argument("too many boxes for brute force");
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nb); ++mask) {
        std::vector<std::vector<bool>> keep(rows);
        for (int r = 0; r < rows; ++r) keep[r].assign(lambda[r], true);
        std::set<int> cols;
        bool ok = true;
        int removed = 0;
        for (size_t b = 0; b < nb; ++b) {
            if (!(mask >> b & 1)) continue;
            auto [r, c] = boxes[b];
            if (!cols.insert(c).second) {
                ok = false;
                break;
            }
            keep[r][c] = false;
            ++removed;
        }
        if (!ok || (k >= 0 && removed != k)) continue;
        std::vector<int> mu;
        for (int r = 0; r < rows && ok; ++r) {
            int len = 0;
            while (len < lambda[r] && keep[r][len]) ++len;
            for (int c = len; c < lambda[r]; ++c)
                if (keep[r][c]) ok = false;
            mu.push_back(len);
        }
        if (!ok || mu.back() != 0 || !is_partition(mu)) continue;
        mu.pop_back();
        found.insert(Partition(mu));
    }
    return {found.begin(), found.end()};
}

Partition xi_apply(const XiSequence& xi, const Partition& lambda, bool strict) {
    std::vector<int> p = lambda.parts;
    for (int i : xi) {
        if (i < 1 || i > static_cast<int>(p.size()))
            throw std::out_of_range("xi row index out of range");
        if (p[i - 1] == 0) throw std::invalid_argument("xi removes a box from an empty row");
        --p[i - 1];
        if (strict && !is_partition(p)) throw std::invalid_argument("xi step is not dominant");
    }
    if (!strict) {
        Partition raw;
        raw.parts = p;
        return raw;
    }
    return Partition(p);
}

SlWeight xi_apply_weight(const XiSequence& xi, const SlWeight& lbar) {
    // Removing a box from row i changes λ̄_{i-1} by +1 and λ̄_i by -1; the
    // projection then drops the last entry.
    SlWeight w = lbar;
    const int n = static_cast<int>(w.size());
    for (int i : xi) {
        if (i < 1 || i > n + 1) throw std::out_of_range("xi row index out of range");
        if (i - 2 >= 0) w[i - 2] += 1;
        if (i - 1 < n) w[i - 1] -= 1;
    }
    if (!w.empty()) w.pop_back();
    return w;
}

bool is_dominant_sequence(const XiSequence& xi, const Partition& lambda) {
    std::vector<int> p = lambda.parts;
    for (int i : xi) {
        if (i < 1 || i > static_cast<int>(p.size())) return false;
        if (p[i - 1] == 0) return false;
        --p[i - 1];
        if (!is_partition(p)) return false;
    }
    return true;
}

std::vector<XiSequence> enumerate_dominant(const Partition& lambda, int k) {
    std::vector<XiSequence> out;
    XiSequence cur;
    const int rows = lambda.size();
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == k) {
            if (is_dominant_sequence(cur, lambda)) out.push_back(cur);
            return;
        }
        for (int i = lo; i <= rows; ++i) {
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    if (k >= 0) rec(1);
    return out;
}

XiSequence xi_between(const Partition& lambda, const Partition& mu) {
    if (!interlaces(lambda, mu)) throw std::invalid_argument("partitions do not interlace");
    XiSequence xi;
    for (int i = 0; i < lambda.size(); ++i) {
        int target = i < mu.size() ? mu[i] : 0;
        for (int c = lambda[i]; c > target; --c) xi.push_back(i + 1);
    }
    if (!is_dominant_sequence(xi, lambda)) throw std::logic_error("branching sequence is not dominant");
    return xi;
}

std::vector<GTPattern> enumerate_gt_patterns(const Partition& lambda) {
    std::vector<GTPattern> out;
    GTPattern cur;
    cur.layers.push_back(lambda);
    std::function<void()> rec = [&]() {
        const Partition& top = cur.layers.back();
        if (top.size() == 1) {
            out.push_back(cur);
            return;
        }
        for (const Partition& mu : interlacing_set(top)) {
            cur.layers.push_back(mu);
            rec();
            cur.layers.pop_back();
        }
    };
    if (lambda.size() == 0) return out;
    rec();
    return out;
}

bool is_gt_pattern(const GTPattern& s) {
    if (s.layers.empty() || s.layers.back().size() != 1) return false;
    for (size_t j = 0; j + 1 < s.layers.size(); ++j)
        if (!interlaces(s.layers[j], s.layers[j + 1])) return false;
    return true;
}

GlWeight gt_weight(const GTPattern& s) {
    const int m = static_cast<int>(s.layers.size());
    GlWeight w(m);
    int prev = 0;
    // layers are stored from m parts down to 1 part; entry j uses layer with j parts
    for (int j = 1; j <= m; ++j) {
        int cur = s.layers[m - j].weight();
        w[j - 1] = cur - prev;
        prev = cur;
    }
    return w;
}

std::int64_t weyl_dim(const Partition& lambda) {
    // Exact rational product accumulated as numerator/denominator.
    const int m = lambda.size();
    __int128 num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
            __int128 a = num, b = den;
            while (b) {
                __int128 t = a % b;
                a = b;
                b = t;
            }
            num /= a;
            den /= a;
        }
    if (den != 1) throw std::logic_error("weyl_dim is not an integer");
    return static_cast<std::int64_t>(num);
}

std::vector<GlWeight> schur_weights(int n, int d, bool dominant_only) {
    if (n < 1 || d < 0) throw std::invalid_argument("schur_weights needs n >= 1 and d >= 0");
    std::vector<GlWeight> out;
    GlWeight cur(n);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            cur[i] = left;
            if (!dominant_only || is_partition(cur)) out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, d);
    return out;
}

std::vector<Partition> partitions_with_parts(int m, int d) {
    std::vector<Partition> out;
    for (auto& w : schur_weights(m, d, true)) out.emplace_back(w);
    return out;
}

}  // namespace klrlab
