#include "klrlab/klr.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace klrlab {

// ---------------------------------------------------------------------------
// words

bool KLRWord::operator<(const KLRWord& o) const {
    if (bottom != o.bottom) return bottom < o.bottom;
    return ops < o.ops;
}

StrandSeq KLRWord::top() const {
    StrandSeq s = bottom;
    for (const Gen& g : ops)
        if (g.cross) std::swap(s[g.pos - 1], s[g.pos]);
    return s;
}

KLRWord make_word(const StrandSeq& bottom, const std::vector<Gen>& ops) {
    const int m = static_cast<int>(bottom.size());
    for (const Gen& g : ops) {
        if (g.pos < 1 || g.pos > m || (g.cross && g.pos + 1 > m))
            throw std::out_of_range("generator position out of range");
    }
    return KLRWord{bottom, ops};
}

int crossing_degree(int i, int j) { return -cartan(i, j); }

int degree(const KLRWord& w) {
    StrandSeq s = w.bottom;
    int d = 0;
    for (const Gen& g : w.ops) {
        if (!g.cross) {
            d += 2;
            continue;
        }
        d += crossing_degree(s[g.pos - 1], s[g.pos]);
        std::swap(s[g.pos - 1], s[g.pos]);
    }
    return d;
}

// ---------------------------------------------------------------------------
// elements

KLRElement KLRElement::from_word(int rank, const KLRWord& w, const BigInt& c) {
    KLRElement e(rank);
    e.add(w, c);
    return e;
}

KLRElement KLRElement::idempotent(int rank, const StrandSeq& seq) {
    return from_word(rank, KLRWord{seq, {}});
}

void KLRElement::add(const KLRWord& w, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
    if (rank_ == 0) rank_ = o.rank_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
    if (rank_ == 0) rank_ = o.rank_;
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

KLRElement KLRElement::scaled(const BigInt& c) const {
    KLRElement r(rank_);
    if (c == 0) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

bool KLRElement::homogeneous(int* deg) const {
    bool first = true;
    int d0 = 0;
    for (const auto& [w, c] : terms_) {
        int d = degree(w);
        if (first) {
            d0 = d;
            first = false;
        } else if (d != d0) {
            return false;
        }
    }
    if (deg) *deg = d0;
    return true;
}

std::string KLRElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*[";
        for (size_t i = 0; i < w.bottom.size(); ++i) os << (i ? "," : "") << w.bottom[i];
        os << "|";
        for (size_t i = 0; i < w.ops.size(); ++i)
            os << (i ? " " : "") << (w.ops[i].cross ? "c" : "d") << w.ops[i].pos;
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// permutations and reduced words

std::vector<int> word_permutation(int strands, const std::vector<int>& crossings) {
    std::vector<int> at(strands);
    for (int i = 0; i < strands; ++i) at[i] = i;
    for (int r : crossings) std::swap(at[r - 1], at[r]);
    std::vector<int> perm(strands);
    for (int p = 0; p < strands; ++p) perm[at[p]] = p;
    return perm;
}

std::vector<int> lexmin_reduced_word(std::vector<int> perm) {
    std::vector<int> word;
    const int m = static_cast<int>(perm.size());
    for (;;) {
        int r = -1;
        for (int p = 0; p + 1 < m; ++p)
            if (perm[p] > perm[p + 1]) {
                r = p;
                break;
            }
        if (r < 0) break;
        word.push_back(r + 1);
        std::swap(perm[r], perm[r + 1]);
    }
    return word;
}

bool is_reduced(int strands, const std::vector<int>& crossings) {
    std::vector<int> at(strands);
    for (int i = 0; i < strands; ++i) at[i] = i;
    for (int r : crossings) {
        if (at[r - 1] > at[r]) return false;
        std::swap(at[r - 1], at[r]);
    }
    return true;
}

KLRWord normal_word(const StrandSeq& bottom, const std::vector<int>& dots, const std::vector<int>& perm) {
    KLRWord w{bottom, {}};
    for (size_t p = 0; p < dots.size(); ++p)
        for (int k = 0; k < dots[p]; ++k) w.ops.push_back(Gen::dot(static_cast<int>(p) + 1));
    for (int r : lexmin_reduced_word(perm)) w.ops.push_back(Gen::crossing(r));
    return w;
}

void split_normal_word(const KLRWord& w, std::vector<int>& dots, std::vector<int>& perm) {
    const int m = w.size();
    dots.assign(m, 0);
    std::vector<int> cr;
    bool seen_cross = false;
    for (const Gen& g : w.ops) {
        if (g.cross) {
            seen_cross = true;
            cr.push_back(g.pos);
        } else {
            if (seen_cross) throw std::invalid_argument("word is not in normal form");
            ++dots[g.pos - 1];
        }
    }
    perm = word_permutation(m, cr);
}

namespace {

// A rewriting move on a pure crossing word: swap two far crossings, or
// replace a braid triple [p, p+1, p] <-> [p+1, p, p+1].
struct Move {
    bool braid;
    int idx;
};

void do_move(std::vector<int>& u, const Move& mv) {
    if (!mv.braid) {
        std::swap(u[mv.idx], u[mv.idx + 1]);
        return;
    }
    int a = u[mv.idx], b = u[mv.idx + 1];
    u[mv.idx] = b;
    u[mv.idx + 1] = a;
    u[mv.idx + 2] = b;
}

int iabs(int x) { return x < 0 ? -x : x; }

// Rewrites u[lo, hi) by braid moves so that it starts with s; s must be a
// bottom descent of the segment.
void make_first(std::vector<int>& u, int lo, int hi, int s, std::vector<Move>& moves) {
    if (lo >= hi) throw std::logic_error("make_first: empty segment");
    if (u[lo] == s) return;
    const int t = u[lo];
    make_first(u, lo + 1, hi, s, moves);
    if (iabs(t - s) >= 2) {
        Move mv{false, lo};
        do_move(u, mv);
        moves.push_back(mv);
        return;
    }
    make_first(u, lo + 2, hi, t, moves);
    Move mv{true, lo};
    do_move(u, mv);
    moves.push_back(mv);
}

// Mirror of make_first: rewrite u[lo, hi) so that it ends with a top descent s.
void make_last(std::vector<int>& u, int lo, int hi, int s, std::vector<Move>& moves) {
    if (lo >= hi) throw std::logic_error("make_last: empty segment");
    if (u[hi - 1] == s) return;
    const int t = u[hi - 1];
    make_last(u, lo, hi - 1, s, moves);
    if (iabs(t - s) >= 2) {
        Move mv{false, hi - 2};
        do_move(u, mv);
        moves.push_back(mv);
        return;
    }
    make_last(u, lo, hi - 2, t, moves);
    Move mv{true, hi - 3};
    do_move(u, mv);
    moves.push_back(mv);
}

std::vector<Move> moves_to_lexmin(std::vector<int> u, int strands) {
    std::vector<int> target = lexmin_reduced_word(word_permutation(strands, u));
    std::vector<Move> moves;
    for (size_t i = 0; i < target.size(); ++i)
        make_first(u, static_cast<int>(i), static_cast<int>(u.size()), target[i], moves);
    return moves;
}

struct Item {
    BigInt c;
    std::vector<Gen> ops;
};

using NFKey = std::tuple<std::vector<int>, std::vector<int>>;  // dots, perm

StrandSeq labels_below(const StrandSeq& bottom, const std::vector<Gen>& ops, size_t idx) {
    StrandSeq s = bottom;
    for (size_t k = 0; k < idx; ++k)
        if (ops[k].cross) std::swap(s[ops[k].pos - 1], s[ops[k].pos]);
    return s;
}

class Rewriter {
public:
    Rewriter(const StrandSeq& bottom, const RewriteOptions& opt, std::map<NFKey, BigInt>& out)
        : bottom_(bottom), opt_(opt), out_(out), m_(static_cast<int>(bottom.size())) {}

    void run(const BigInt& c, const std::vector<Gen>& ops) {
        std::int64_t budget = opt_.step_budget;
        if (budget <= 0) {
            std::int64_t L = static_cast<std::int64_t>(ops.size() + bottom_.size()) + 2;
            budget = 64 * L * L * L * L + 100000;
        }
        work_.push_back({c, ops});
        while (!work_.empty()) {
            Item it = std::move(work_.back());
            work_.pop_back();
            if (++steps_ > budget) throw std::runtime_error("rewriting step budget exceeded");
            process(it);
        }
    }

    std::int64_t steps() const { return steps_; }

private:
    const StrandSeq& bottom_;
    const RewriteOptions& opt_;
    std::map<NFKey, BigInt>& out_;
    int m_;
    std::vector<Item> work_;
    std::int64_t steps_ = 0;

    size_t pick(size_t n) { return opt_.rng ? static_cast<size_t>((*opt_.rng)() % n) : 0; }

    void push(BigInt c, std::vector<Gen> ops) {
        if (c == 0) return;
        work_.push_back({std::move(c), std::move(ops)});
    }

    // Applies a crossing-word move to the item whose crossings start at
    // offset `base`; pushes the correction term of the braid relation.
    void apply_move(Item& it, size_t base, const Move& mv) {
        ++steps_;
        if (!mv.braid) {
            std::swap(it.ops[base + mv.idx], it.ops[base + mv.idx + 1]);
            return;
        }
        const size_t at = base + mv.idx;
        const int p = std::min(it.ops[at].pos, it.ops[at + 1].pos);
        const bool low_first = it.ops[at].pos == p;  // [p, p+1, p]
        StrandSeq s = labels_below(bottom_, it.ops, at);
        const int a = s[p - 1], b = s[p], a2 = s[p + 1];
        if (a == a2 && iabs(a - b) == 1) {
            // [p,p+1,p] - [p+1,p,p+1] = 1 on (a, b, a)
            std::vector<Gen> rest;
            rest.reserve(it.ops.size() - 3);
            rest.insert(rest.end(), it.ops.begin(), it.ops.begin() + at);
            rest.insert(rest.end(), it.ops.begin() + at + 3, it.ops.end());
            push(low_first ? it.c : BigInt(-it.c), std::move(rest));
        }
        const int x = low_first ? p + 1 : p;
        const int y = low_first ? p : p + 1;
        it.ops[at] = Gen::crossing(x);
        it.ops[at + 1] = Gen::crossing(y);
        it.ops[at + 2] = Gen::crossing(x);
    }

    void random_moves(Item& it, size_t base, size_t len) {
        if (!opt_.rng || len < 2) return;
        size_t count = pick(2 * len + 1);
        for (size_t k = 0; k < count; ++k) {
            std::vector<Move> cand;
            for (size_t t = 0; t + 1 < len; ++t) {
                int u0 = it.ops[base + t].pos, u1 = it.ops[base + t + 1].pos;
                if (iabs(u0 - u1) >= 2) cand.push_back({false, static_cast<int>(t)});
                if (t + 2 < len && it.ops[base + t + 2].pos == u0 && iabs(u0 - u1) == 1)
                    cand.push_back({true, static_cast<int>(t)});
            }
            if (cand.empty()) return;
            apply_move(it, base, cand[pick(cand.size())]);
        }
    }

    void process(Item& it) {
        // Phase 1: move every dot below the crossings.
        std::vector<size_t> cand;
        for (size_t t = 1; t < it.ops.size(); ++t)
            if (!it.ops[t].cross && it.ops[t - 1].cross) {
                cand.push_back(t);
                if (!opt_.rng) break;
            }
        if (!cand.empty()) {
            size_t t = cand[pick(cand.size())];
            const int r = it.ops[t - 1].pos;
            const int s = it.ops[t].pos;
            if (s != r && s != r + 1) {
                std::swap(it.ops[t - 1], it.ops[t]);
                push(std::move(it.c), std::move(it.ops));
                return;
            }
            StrandSeq lab = labels_below(bottom_, it.ops, t - 1);
            const bool equal = lab[r - 1] == lab[r];
            if (equal) {
                // x_r ψ_r = ψ_r x_{r+1} + 1,  x_{r+1} ψ_r = ψ_r x_r - 1
                std::vector<Gen> rest;
                rest.reserve(it.ops.size() - 2);
                rest.insert(rest.end(), it.ops.begin(), it.ops.begin() + (t - 1));
                rest.insert(rest.end(), it.ops.begin() + (t + 1), it.ops.end());
                push(s == r ? it.c : BigInt(-it.c), std::move(rest));
            }
            it.ops[t - 1] = Gen::dot(s == r ? r + 1 : r);
            it.ops[t] = Gen::crossing(r);
            push(std::move(it.c), std::move(it.ops));
            return;
        }

        size_t base = 0;
        while (base < it.ops.size() && !it.ops[base].cross) ++base;
        const size_t len = it.ops.size() - base;

        // Phase 2: cancel the first non-reduced crossing.
        std::vector<int> at(m_);
        for (int i = 0; i < m_; ++i) at[i] = i;
        for (size_t k = 0; k < len; ++k) {
            const int r = it.ops[base + k].pos;
            if (at[r - 1] < at[r]) {
                std::swap(at[r - 1], at[r]);
                continue;
            }
            random_moves(it, base, k);
            std::vector<int> u(k);
            for (size_t j = 0; j < k; ++j) u[j] = it.ops[base + j].pos;
            std::vector<Move> moves;
            make_last(u, 0, static_cast<int>(k), r, moves);
            for (const Move& mv : moves) apply_move(it, base, mv);
            StrandSeq lab = labels_below(bottom_, it.ops, base + k - 1);
            const int i = lab[r - 1], j = lab[r];
            std::vector<Gen> rest;
            rest.reserve(it.ops.size());
            rest.insert(rest.end(), it.ops.begin(), it.ops.begin() + (base + k - 1));
            const size_t tail = base + k + 1;
            if (i == j) return;
            if (iabs(i - j) == 1) {
                std::vector<Gen> other = rest;
                rest.push_back(Gen::dot(r));
                other.push_back(Gen::dot(r + 1));
                rest.insert(rest.end(), it.ops.begin() + tail, it.ops.end());
                other.insert(other.end(), it.ops.begin() + tail, it.ops.end());
                push(it.c, std::move(rest));
                push(std::move(it.c), std::move(other));
                return;
            }
            rest.insert(rest.end(), it.ops.begin() + tail, it.ops.end());
            push(std::move(it.c), std::move(rest));
            return;
        }

        // Phase 3: reduced crossing word; rewrite to the lexicographic minimum.
        random_moves(it, base, len);
        std::vector<int> u(len);
        for (size_t j = 0; j < len; ++j) u[j] = it.ops[base + j].pos;
        for (const Move& mv : moves_to_lexmin(u, m_)) apply_move(it, base, mv);
        std::vector<int> dots(m_, 0);
        for (size_t j = 0; j < base; ++j) ++dots[it.ops[j].pos - 1];
        std::vector<int> cr(len);
        for (size_t j = 0; j < len; ++j) cr[j] = it.ops[base + j].pos;
        NFKey key{std::move(dots), word_permutation(m_, cr)};
        auto [pos, fresh] = out_.try_emplace(std::move(key), it.c);
        if (!fresh) {
            pos->second += it.c;
            if (pos->second == 0) out_.erase(pos);
        }
    }
};

void collect(int rank, const StrandSeq& bottom, const std::map<NFKey, BigInt>& acc, KLRElement& out) {
    for (const auto& [key, c] : acc) {
        if (c == 0) continue;
        out.add(normal_word(bottom, std::get<0>(key), std::get<1>(key)), c);
    }
    (void)rank;
}

}  // namespace

KLRElement normal_form(int rank, const KLRWord& w, const RewriteOptions& opt, RewriteStats* stats) {
    std::map<NFKey, BigInt> acc;
    Rewriter rw(w.bottom, opt, acc);
    rw.run(1, w.ops);
    if (stats) stats->steps += rw.steps();
    KLRElement out(rank);
    collect(rank, w.bottom, acc, out);
    return out;
}

KLRElement normal_form(const KLRElement& x, const RewriteOptions& opt, RewriteStats* stats) {
    std::map<StrandSeq, std::map<NFKey, BigInt>> acc;
    std::int64_t steps = 0;
    for (const auto& [w, c] : x.terms()) {
        Rewriter rw(w.bottom, opt, acc[w.bottom]);
        rw.run(c, w.ops);
        steps += rw.steps();
    }
    if (stats) stats->steps += steps;
    KLRElement out(x.rank());
    for (const auto& [bottom, m] : acc) collect(x.rank(), bottom, m, out);
    return out;
}

KLRElement concat_raw(const KLRElement& a, const KLRElement& b) {
    KLRElement out(a.rank() ? a.rank() : b.rank());
    for (const auto& [wb, cb] : b.terms()) {
        StrandSeq t = wb.top();
        for (const auto& [wa, ca] : a.terms()) {
            if (wa.bottom != t) continue;
            KLRWord w{wb.bottom, wb.ops};
            w.ops.insert(w.ops.end(), wa.ops.begin(), wa.ops.end());
            out.add(w, ca * cb);
        }
    }
    return out;
}

KLRElement multiply(const KLRElement& a, const KLRElement& b) {
    return normal_form(concat_raw(a, b));
}

// ---------------------------------------------------------------------------
// the derived identity on (a, a, b)

std::pair<KLRElement, KLRElement> inv_r3(int rank, const StrandSeq& labels) {
    if (labels.size() != 3) throw std::invalid_argument("inv_r3 needs three strands");
    const int a = labels[0], b = labels[2];
    if (labels[1] != a || iabs(a - b) != 1)
        throw std::invalid_argument("inv_r3 needs labels (a, a, a±1)");
    for (int l : labels)
        if (l < 1 || l > rank) throw std::invalid_argument("label out of range for rank");
    using G = Gen;
    KLRElement lhs = KLRElement::idempotent(rank, labels);
    KLRElement rhs(rank);
    rhs.add(KLRWord{labels, {G::crossing(1), G::crossing(2), G::crossing(2)}}, -1);
    rhs.add(KLRWord{labels, {G::crossing(2), G::crossing(2), G::crossing(1)}}, -1);
    rhs.add(KLRWord{labels, {G::crossing(1), G::crossing(2), G::dot(1), G::crossing(2), G::crossing(1)}}, 1);
    rhs.add(KLRWord{labels, {G::crossing(1), G::crossing(2), G::dot(3), G::crossing(2), G::crossing(1)}}, -1);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// special idempotents and factorization

StrandSeq p_block(int i, int n) {
    StrandSeq s;
    for (int l = i; l <= n; ++l) s.push_back(l);
    return s;
}

StrandSeq p_block(const XiSequence& xi, int n) {
    StrandSeq s;
    for (int i : xi) {
        StrandSeq b = p_block(i, n);
        s.insert(s.end(), b.begin(), b.end());
    }
    return s;
}

StrandSeq SpecialIdempotentSpec::sequence() const {
    StrandSeq s = p_block(xi, rank);
    s.insert(s.end(), tail.begin(), tail.end());
    return s;
}

namespace {

struct FT {
    BigInt c;
    std::vector<Gen> A;  // mid -> original
    StrandSeq mid;
    std::vector<Gen> B;  // original -> mid
};

struct LocalTerm {
    int d;
    std::vector<Gen> A, B;
    StrandSeq mid;
};

std::vector<Gen> shifted(const std::vector<Gen>& ops, int p) {
    std::vector<Gen> r = ops;
    for (Gen& g : r) g.pos += p;
    return r;
}

std::vector<FT> apply_local(const FT& t, int p, const std::vector<LocalTerm>& loc) {
    std::vector<FT> out;
    for (const LocalTerm& l : loc) {
        FT n;
        n.c = t.c * l.d;
        n.mid = t.mid;
        std::copy(l.mid.begin(), l.mid.end(), n.mid.begin() + p);
        n.B = t.B;
        auto sb = shifted(l.B, p);
        n.B.insert(n.B.end(), sb.begin(), sb.end());
        n.A = shifted(l.A, p);
        n.A.insert(n.A.end(), t.A.begin(), t.A.end());
        out.push_back(std::move(n));
    }
    return out;
}

std::vector<FT> far_swap(const FT& t, int p) {
    const int i = t.mid[p], j = t.mid[p + 1];
    if (iabs(i - j) < 2) throw std::logic_error("far_swap on adjacent labels");
    return apply_local(t, p, {{1, {Gen::crossing(1)}, {Gen::crossing(1)}, {j, i}}});
}

std::vector<FT> r3_split(const FT& t, int p) {
    const int a = t.mid[p], b = t.mid[p + 1];
    if (t.mid[p + 2] != a || iabs(a - b) != 1) throw std::logic_error("r3_split pattern");
    return apply_local(t, p,
                       {{1, {Gen::crossing(2), Gen::crossing(1)}, {Gen::crossing(1)}, {b, a, a}},
                        {-1, {Gen::crossing(1), Gen::crossing(2)}, {Gen::crossing(2)}, {a, a, b}}});
}

std::vector<FT> inv_r3_split(const FT& t, int p) {
    const int a = t.mid[p], b = t.mid[p + 2];
    if (t.mid[p + 1] != a || iabs(a - b) != 1) throw std::logic_error("inv_r3_split pattern");
    const StrandSeq m{a, b, a};
    const std::vector<Gen> B12{Gen::crossing(1), Gen::crossing(2)};
    return apply_local(
        t, p,
        {{-1, {Gen::crossing(2)}, B12, m},
         {-1, {Gen::crossing(2), Gen::crossing(1)}, {Gen::crossing(2)}, m},
         {1, {Gen::dot(1), Gen::crossing(2), Gen::crossing(1)}, B12, m},
         {-1, {Gen::dot(3), Gen::crossing(2), Gen::crossing(1)}, B12, m}});
}

template <class F>
std::vector<FT> for_all(const std::vector<FT>& ts, F f) {
    std::vector<FT> out;
    for (const FT& t : ts) {
        auto r = f(t);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<FT> slide_right(std::vector<FT> ts, int pos, int count) {
    for (int k = 0; k < count; ++k, ++pos)
        ts = for_all(ts, [&](const FT& t) { return far_swap(t, pos); });
    return ts;
}

// Parses mid into ordered staircase blocks followed by an n-free tail. Returns
// true when fully ordered; otherwise reports the first defective n-strand.
bool parse_blocks(const StrandSeq& mid, int n, XiSequence& xi, size_t& tail_start, size_t& barrier,
                  size_t& defect) {
    size_t pos = 0;
    int prev = 0;
    xi.clear();
    for (;;) {
        size_t t = pos;
        while (t < mid.size() && mid[t] != n) ++t;
        if (t == mid.size()) {
            tail_start = pos;
            return true;
        }
        const int len = static_cast<int>(t - pos) + 1;
        const int s = n - len + 1;
        bool ok = s >= 1 && s >= prev;
        for (size_t k = pos; ok && k <= t; ++k)
            if (mid[k] != s + static_cast<int>(k - pos)) ok = false;
        if (!ok) {
            barrier = pos;
            defect = t;
            return false;
        }
        xi.push_back(s);
        prev = s;
        pos = t + 1;
    }
}

std::vector<FT> resolve_step(const FT& t, int n, size_t f, size_t d) {
    const StrandSeq& mid = t.mid;
    size_t a = d;
    while (a > f && mid[a - 1] == mid[a] - 1) --a;
    const int s = mid[a];
    const int ia = static_cast<int>(a);
    if (a == f) {
        // The previous block ends in an n that must move past this staircase.
        if (f == 0 || mid[f - 1] != n) throw std::logic_error("factorization: unexpected block layout");
        int pos = ia - 1;
        std::vector<FT> ts = slide_right({t}, pos, std::max(0, n - 1 - s));
        pos += std::max(0, n - 1 - s);
        return for_all(ts, [&](const FT& x) { return r3_split(x, pos); });
    }
    const int j = mid[a - 1];
    if (j < s - 1) return slide_right({t}, ia - 1, n - s + 1);
    if (j == s) {
        std::vector<FT> ts = inv_r3_split(t, ia - 1);
        return slide_right(std::move(ts), ia + 1, n - s - 1);
    }
    if (j > s && j < n) {
        int pos = ia - 1;
        std::vector<FT> ts = slide_right({t}, pos, j - 1 - s);
        pos += j - 1 - s;
        ts = for_all(ts, [&](const FT& x) { return r3_split(x, pos); });
        std::vector<FT> out;
        for (FT& x : ts) {
            if (x.mid[pos] == j && x.mid[pos + 1] == j) {
                auto r = slide_right({x}, pos + 2, n - j);
                out.insert(out.end(), r.begin(), r.end());
            } else {
                out.push_back(std::move(x));
            }
        }
        return out;
    }
    throw std::logic_error("factorization: unexpected neighbour label");
}

std::vector<FactorTerm> run_factorization(const StrandSeq& idem, int rank) {
    for (int l : idem)
        if (l < 1 || l > rank) throw std::invalid_argument("label out of range for rank");
    std::vector<FT> work{FT{1, {}, idem, {}}};
    std::vector<std::pair<FT, SpecialIdempotentSpec>> done;
    const std::int64_t budget = 200000;
    std::int64_t steps = 0;
    while (!work.empty()) {
        FT t = std::move(work.back());
        work.pop_back();
        if (++steps > budget) throw std::runtime_error("factorization step budget exceeded");
        XiSequence xi;
        size_t tail = 0, f = 0, d = 0;
        if (parse_blocks(t.mid, rank, xi, tail, f, d)) {
            SpecialIdempotentSpec spec{xi, StrandSeq(t.mid.begin() + tail, t.mid.end()), rank};
            done.emplace_back(std::move(t), std::move(spec));
            continue;
        }
        auto next = resolve_step(t, rank, f, d);
        for (FT& x : next) work.push_back(std::move(x));
    }
    // Merge terms sharing the through idempotent and the lower half.
    std::map<std::pair<SpecialIdempotentSpec, std::vector<Gen>>, std::vector<const FT*>> groups;
    for (const auto& [t, spec] : done) groups[{spec, t.B}].push_back(&t);
    std::vector<FactorTerm> out;
    for (const auto& [key, ts] : groups) {
        FactorTerm ft;
        ft.through = key.first;
        ft.right = KLRElement::from_word(rank, KLRWord{idem, key.second});
        ft.left = KLRElement(rank);
        if (ts.size() == 1) {
            ft.coeff = ts[0]->c;
            ft.left.add(KLRWord{ts[0]->mid, ts[0]->A}, 1);
        } else {
            ft.coeff = 1;
            for (const FT* x : ts) ft.left.add(KLRWord{x->mid, x->A}, x->c);
        }
        if (ft.left.is_zero()) continue;
        out.push_back(std::move(ft));
    }
    return out;
}

}  // namespace

std::vector<FactorTerm> factor_one_strand(const StrandSeq& idem, int rank) {
    if (std::count(idem.begin(), idem.end(), rank) != 1)
        throw std::invalid_argument("factor_one_strand needs exactly one strand labeled n");
    return run_factorization(idem, rank);
}

std::vector<FactorTerm> factor_general(const StrandSeq& idem, int rank) {
    return run_factorization(idem, rank);
}

KLRElement reconstruct(const std::vector<FactorTerm>& terms, int rank, const StrandSeq& idem) {
    KLRElement sum(rank);
    for (const FactorTerm& t : terms) sum += multiply(t.left, t.right).scaled(t.coeff);
    (void)idem;
    return sum;
}

// ---------------------------------------------------------------------------
// region labels

RegionDecoration decorate_regions(const KLRWord& w, const GlWeight& start) {
    RegionDecoration out;
    StrandSeq s = w.bottom;
    auto regions = [&](const StrandSeq& labels) {
        std::vector<GlWeight> r{start};
        GlWeight cur = start;
        for (int j : labels) {
            if (j < 1 || j >= static_cast<int>(cur.size()))
                throw std::invalid_argument("strand label outside the weight's range");
            cur[j - 1] -= 1;
            cur[j] += 1;
            r.push_back(cur);
        }
        return r;
    };
    out.heights.push_back(regions(s));
    for (const Gen& g : w.ops) {
        if (g.cross) std::swap(s[g.pos - 1], s[g.pos]);
        out.heights.push_back(regions(s));
    }
    out.rightmost = out.heights.front().back();
    std::set<GlWeight> neg;
    for (const auto& h : out.heights)
        for (const auto& r : h)
            if (std::any_of(r.begin(), r.end(), [](int v) { return v < 0; })) neg.insert(r);
    out.negative.assign(neg.begin(), neg.end());
    return out;
}

}  // namespace klrlab
