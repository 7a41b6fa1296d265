#pragma once

// Faithful polynomial representation of the KLR algebra, used as an
// independent check of the rewriting engine. Dots act by multiplication;
// crossings of equal labels act by divided differences and crossings of
// distinct labels by a permutation times a polynomial factor.

#include "klrlab/klr.hpp"

#include <map>
#include <random>
#include <vector>

namespace polyrep {

using klrlab::BigInt;
using Mono = std::vector<int>;
using Poly = std::map<Mono, BigInt>;

inline void add_to(Poly& p, const Mono& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = p.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Poly times_var(const Poly& f, int r) {
    Poly out;
    for (const auto& [m, c] : f) {
        Mono n = m;
        ++n[r];
        add_to(out, n, c);
    }
    return out;
}

inline Poly swap_vars(const Poly& f, int r) {
    Poly out;
    for (const auto& [m, c] : f) {
        Mono n = m;
        std::swap(n[r], n[r + 1]);
        add_to(out, n, c);
    }
    return out;
}

// (f - s_r f) / (x_r - x_{r+1})
inline Poly divided_difference(const Poly& f, int r) {
    Poly out;
    for (const auto& [m, c] : f) {
        const int a = m[r], b = m[r + 1];
        if (a == b) continue;
        const int lo = a < b ? a : b, hi = a < b ? b : a;
        const BigInt sign = a > b ? c : BigInt(-c);
        for (int k = 0; k < hi - lo; ++k) {
            Mono n = m;
            n[r] = lo + (hi - lo - 1 - k);
            n[r + 1] = lo + k;
            add_to(out, n, sign);
        }
    }
    return out;
}

struct State {
    klrlab::StrandSeq seq;
    Poly f;
};

inline State apply(const State& s, const klrlab::Gen& g) {
    State t = s;
    const int r = g.pos - 1;
    if (!g.cross) {
        t.f = times_var(s.f, r);
        return t;
    }
    const int i = s.seq[r], j = s.seq[r + 1];
    std::swap(t.seq[r], t.seq[r + 1]);
    if (i == j) {
        t.f = divided_difference(s.f, r);
        return t;
    }
    Poly sw = swap_vars(s.f, r);
    if (j == i + 1) {
        t.f = times_var(sw, r);
        for (const auto& [m, c] : times_var(sw, r + 1)) add_to(t.f, m, c);
    } else {
        t.f = sw;
    }
    return t;
}

// Action of an element on f placed at its bottom idempotent.
inline std::map<klrlab::StrandSeq, Poly> act(const klrlab::KLRElement& x, const Poly& f) {
    std::map<klrlab::StrandSeq, Poly> out;
    for (const auto& [w, c] : x.terms()) {
        State s{w.bottom, f};
        for (const auto& g : w.ops) s = apply(s, g);
        Poly& dst = out[s.seq];
        for (const auto& [m, v] : s.f) add_to(dst, m, v * c);
        if (dst.empty()) out.erase(s.seq);
    }
    return out;
}

inline std::vector<Poly> test_inputs(int strands, int count, std::uint64_t seed) {
    std::vector<Poly> v;
    Poly one;
    one[Mono(strands, 0)] = 1;
    v.push_back(one);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        Poly p;
        int terms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            Mono m(strands);
            for (int& e : m) e = static_cast<int>(rng() % 4);
            add_to(p, m, BigInt(static_cast<long>(rng() % 7) - 3));
        }
        v.push_back(p);
    }
    return v;
}

// Equal actions of two elements sharing a bottom sequence on the test inputs.
inline bool same_action(const klrlab::KLRElement& a, const klrlab::KLRElement& b, int strands,
                        std::uint64_t seed = 1) {
    for (const Poly& f : test_inputs(strands, 6, seed))
        if (act(a, f) != act(b, f)) return false;
    return true;
}

}  // namespace polyrep
