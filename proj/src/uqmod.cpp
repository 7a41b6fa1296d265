#include "klrlab/uqmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrlab {

namespace {

LaurentPoly divide_coeffs(const LaurentPoly& p, const BigInt& c) {
    LaurentPoly r;
    for (const auto& [e, v] : p.terms()) r.add_term(e, BigInt(v / c));
    return r;
}

}  // namespace

LaurentFrac::LaurentFrac(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("LaurentFrac: zero denominator");
    normalize();
}

void LaurentFrac::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = gcd(num_, den_);
    if (!(g == LaurentPoly(1))) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    BigInt c = gcd(content(num_), content(den_));
    if (c != 1) {
        num_ = divide_coeffs(num_, c);
        den_ = divide_coeffs(den_, c);
    }
    const int s = den_.min_exp();
    if (s != 0) {
        num_ = num_.shifted(-s);
        den_ = den_.shifted(-s);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

LaurentFrac LaurentFrac::operator-() const {
    LaurentFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.den_ == b.den_) return LaurentFrac(a.num_ + b.num_, a.den_);
    return LaurentFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) { return a + (-b); }

LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.is_zero() || b.is_zero()) return LaurentFrac();
    return LaurentFrac(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentFrac operator/(const LaurentFrac& a, const LaurentFrac& b) {
    if (b.is_zero()) throw std::domain_error("LaurentFrac: division by zero");
    return LaurentFrac(a.num_ * b.den_, a.den_ * b.num_);
}

std::string LaurentFrac::to_string() const {
    if (den_ == LaurentPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentFrac bar_involution(const LaurentFrac& f) {
    return LaurentFrac(bar_involution(f.num()), bar_involution(f.den()));
}

int bareiss_rank(std::vector<std::vector<LaurentPoly>> m, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    LaurentPoly prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = divide_exact(m[i][j] * m[r][c] - m[i][c] * m[r][j], prev);
            m[i][c] = LaurentPoly();
        }
        prev = m[r][c];
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

FracVector solve(FracMatrix a, FracVector b) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::domain_error("solve: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            LaurentFrac f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    for (int i = 0; i < n; ++i) b[i] = b[i] / a[i][i];
    return b;
}

SlWeight weight_after(const SlWeight& lambda, const FWord& w) {
    SlWeight mu = lambda;
    const int m = static_cast<int>(mu.size());
    for (int i : w)
        for (int j = 1; j <= m; ++j) mu[j - 1] -= cartan(j, i);
    return mu;
}

RootVec content(int rank, const FWord& w) {
    RootVec b(rank, 0);
    for (int i : w) ++b[i - 1];
    return b;
}

int full_depth(const SlWeight& lambda) {
    const Partition p = partition_of_weight(lambda);
    const int M = p.size();
    int total = 0, c = 0;
    for (int j = 0; j + 1 < M; ++j) {
        c += p[j] - p[M - 1 - j];
        total += c;
    }
    return total;
}

VermaForm::VermaForm(SlWeight lambda) : lambda_(std::move(lambda)) {}

std::vector<std::pair<FWord, LaurentPoly>> VermaForm::apply_e(int i, const FWord& w) const {
    std::vector<std::pair<FWord, LaurentPoly>> out;
    SlWeight mu = lambda_;
    const int m = static_cast<int>(mu.size());
    for (size_t t = 0; t < w.size(); ++t) {
        if (w[t] == i && mu[i - 1] != 0) {
            FWord rest = w;
            rest.erase(rest.begin() + static_cast<long>(t));
            out.emplace_back(std::move(rest), quantum_integer(mu[i - 1]));
        }
        for (int j = 1; j <= m; ++j) mu[j - 1] -= cartan(j, w[t]);
    }
    return out;
}

LaurentPoly VermaForm::entry(const FWord& u, const FWord& w) {
    if (u.size() != w.size()) return LaurentPoly();
    if (u.empty()) return LaurentPoly(1);
    const int m = static_cast<int>(lambda_.size());
    if (content(m, u) != content(m, w)) return LaurentPoly();
    auto key = std::make_pair(u, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int i = u.back();
    FWord head(u.begin(), u.end() - 1);
    const SlWeight nu = weight_after(lambda_, w);
    LaurentPoly sum;
    for (const auto& [rest, c] : apply_e(i, w)) sum += c * entry(head, rest);
    sum = sum.shifted(nu[i - 1] + 1);
    memo_.emplace(std::move(key), sum);
    return sum;
}

int ShapovalovGram::rank() const { return bareiss_rank(entries); }

std::vector<FWord> words_of_content(const RootVec& beta) {
    FWord w;
    for (size_t i = 0; i < beta.size(); ++i)
        for (int k = 0; k < beta[i]; ++k) w.push_back(static_cast<int>(i) + 1);
    std::vector<FWord> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

ShapovalovGram shapovalov_gram(const SlWeight& lambda, const RootVec& beta) {
    if (beta.size() != lambda.size()) throw std::invalid_argument("shapovalov_gram: rank mismatch");
    for (int b : beta)
        if (b < 0) throw std::invalid_argument("shapovalov_gram: negative root coefficient");
    ShapovalovGram g{lambda, beta, words_of_content(beta), {}};
    VermaForm form(lambda);
    const size_t n = g.labels.size();
    g.entries.assign(n, std::vector<LaurentPoly>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) g.entries[a][b] = form.entry(g.labels[a], g.labels[b]);
    return g;
}

int HighestWeightModule::dimension() const {
    int d = 0;
    for (const auto& [b, s] : spaces) d += static_cast<int>(s.basis.size());
    return d;
}

const WeightSpace* HighestWeightModule::space(const RootVec& beta) const {
    auto it = spaces.find(beta);
    return it == spaces.end() ? nullptr : &it->second;
}

bool HighestWeightModule::within_depth(const RootVec& beta) const {
    int h = 0;
    for (int b : beta) {
        if (b < 0) return true;  // above the highest weight: known to be zero
        h += b;
    }
    return h <= depth;
}

namespace {

size_t dim_of(const HighestWeightModule& m, const RootVec& beta) {
    const WeightSpace* s = m.space(beta);
    return s ? s->basis.size() : 0;
}

FracVector mat_vec(const FracMatrix& a, const FracVector& x, size_t rows) {
    FracVector y(rows);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < x.size(); ++c)
            if (!x[c].is_zero() && !a[r][c].is_zero()) y[r] += a[r][c] * x[c];
    return y;
}

}  // namespace

std::optional<FracVector> HighestWeightModule::apply_f(int i, const RootVec& beta, const FracVector& x) const {
    RootVec t = beta;
    ++t[i - 1];
    if (!within_depth(t)) return std::nullopt;
    const size_t rows = dim_of(*this, t);
    auto it = f_mat.find({i, beta});
    if (it == f_mat.end() || rows == 0) return FracVector(rows);
    return mat_vec(it->second, x, rows);
}

std::optional<FracVector> HighestWeightModule::apply_e(int i, const RootVec& beta, const FracVector& x) const {
    RootVec t = beta;
    --t[i - 1];
    const size_t rows = dim_of(*this, t);
    auto it = e_mat.find({i, beta});
    if (it == e_mat.end() || rows == 0) return FracVector(rows);
    return mat_vec(it->second, x, rows);
}

FracVector HighestWeightModule::apply_k(int i, const RootVec& beta, const FracVector& x, int power) const {
    FWord w;
    for (size_t j = 0; j < beta.size(); ++j)
        for (int k = 0; k < beta[j]; ++k) w.push_back(static_cast<int>(j) + 1);
    const LaurentFrac s(LaurentPoly::q(power * weight_after(lambda, w)[i - 1]));
    FracVector y = x;
    for (auto& v : y) v = v * s;
    return y;
}

HighestWeightModule build_irreducible(const SlWeight& lambda, int depth) {
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument("build_irreducible: highest weight is not dominant");
    const int m = static_cast<int>(lambda.size());
    HighestWeightModule mod;
    mod.lambda = lambda;
    mod.depth = depth < 0 ? full_depth(lambda) : depth;
    VermaForm form(lambda);

    const RootVec zero(m, 0);
    mod.spaces[zero] = WeightSpace{zero, lambda, {FWord{}}, {{LaurentPoly(1)}}};
    std::vector<RootVec> level{zero};
    for (int k = 1; k <= mod.depth; ++k) {
        std::map<RootVec, std::vector<FWord>> cand;
        for (const RootVec& b : level)
            for (const FWord& w : mod.spaces[b].basis)
                for (int i = 1; i <= m; ++i) {
                    FWord x = w;
                    x.push_back(i);
                    RootVec t = b;
                    ++t[i - 1];
                    cand[t].push_back(std::move(x));
                }
        std::vector<RootVec> next;
        for (auto& [t, words] : cand) {
            std::sort(words.begin(), words.end());
            words.erase(std::unique(words.begin(), words.end()), words.end());
            const size_t n = words.size();
            std::vector<std::vector<LaurentPoly>> g(n, std::vector<LaurentPoly>(n));
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) g[a][b] = form.entry(words[a], words[b]);
            std::vector<int> piv;
            if (bareiss_rank(g, &piv) == 0) continue;
            WeightSpace s;
            s.beta = t;
            s.weight = weight_after(lambda, words[0]);
            for (int c : piv) s.basis.push_back(words[c]);
            s.gram.assign(piv.size(), std::vector<LaurentPoly>(piv.size()));
            for (size_t a = 0; a < piv.size(); ++a)
                for (size_t b = 0; b < piv.size(); ++b) s.gram[a][b] = g[piv[a]][piv[b]];
            mod.spaces[t] = std::move(s);
            next.push_back(t);
        }
        level = std::move(next);
    }

    // Coordinates of a combination of words in the basis of space t.
    auto coords = [&](const WeightSpace& t, const std::vector<std::pair<FWord, LaurentPoly>>& combo) {
        const size_t n = t.basis.size();
        FracMatrix a(n, FracVector(n));
        FracVector rhs(n);
        for (size_t r = 0; r < n; ++r) {
            for (size_t c = 0; c < n; ++c) a[r][c] = LaurentFrac(t.gram[r][c]);
            LaurentPoly s;
            for (const auto& [w, c] : combo) s += c * form.entry(t.basis[r], w);
            rhs[r] = LaurentFrac(s);
        }
        return solve(a, rhs);
    };

    for (const auto& [beta, s] : mod.spaces) {
        for (int i = 1; i <= m; ++i) {
            RootVec up = beta;
            ++up[i - 1];
            if (const WeightSpace* t = mod.space(up)) {
                FracMatrix mat(t->basis.size(), FracVector(s.basis.size()));
                for (size_t j = 0; j < s.basis.size(); ++j) {
                    FWord w = s.basis[j];
                    w.push_back(i);
                    FracVector c = coords(*t, {{w, LaurentPoly(1)}});
                    for (size_t r = 0; r < c.size(); ++r) mat[r][j] = c[r];
                }
                mod.f_mat[{i, beta}] = std::move(mat);
            }
            RootVec down = beta;
            --down[i - 1];
            if (const WeightSpace* t = mod.space(down)) {
                FracMatrix mat(t->basis.size(), FracVector(s.basis.size()));
                for (size_t j = 0; j < s.basis.size(); ++j) {
                    FracVector c = coords(*t, form.apply_e(i, s.basis[j]));
                    for (size_t r = 0; r < c.size(); ++r) mat[r][j] = c[r];
                }
                mod.e_mat[{i, beta}] = std::move(mat);
            }
        }
    }
    return mod;
}

namespace {

struct Vec {
    RootVec beta;
    FracVector x;
};

// Applies generators right to left: ops = "EF" means E(F(v)).
std::optional<Vec> act(const HighestWeightModule& m, const std::vector<std::pair<char, int>>& ops, Vec v) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const auto [g, i] = *it;
        if (g == 'F') {
            auto y = m.apply_f(i, v.beta, v.x);
            if (!y) return std::nullopt;
            ++v.beta[i - 1];
            v.x = std::move(*y);
        } else if (g == 'E') {
            auto y = m.apply_e(i, v.beta, v.x);
            if (!y) return std::nullopt;
            --v.beta[i - 1];
            v.x = std::move(*y);
        } else {
            v.x = m.apply_k(i, v.beta, v.x, g == 'K' ? 1 : -1);
        }
    }
    return v;
}

using Term = std::pair<LaurentFrac, std::vector<std::pair<char, int>>>;

// Sum of coeff * ops(v) is zero, or some term leaves the constructed range.
bool vanishes(const HighestWeightModule& m, const std::vector<Term>& terms, const Vec& v) {
    std::optional<FracVector> total;
    for (const auto& [c, ops] : terms) {
        auto y = act(m, ops, v);
        if (!y) return true;
        if (!total) total = FracVector(y->x.size());
        if (y->x.size() != total->size()) return false;
        for (size_t r = 0; r < y->x.size(); ++r) (*total)[r] += c * y->x[r];
    }
    if (!total) return true;
    for (const auto& e : *total)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace

bool verify_relations(const HighestWeightModule& m) {
    const int n = m.rank();
    const LaurentFrac two(quantum_integer(2));
    const LaurentPoly qdiff = LaurentPoly::q(1) - LaurentPoly::q(-1);
    for (const auto& [beta, s] : m.spaces) {
        const SlWeight& mu = s.weight;
        for (size_t j = 0; j < s.basis.size(); ++j) {
            Vec v{beta, FracVector(s.basis.size())};
            v.x[j] = LaurentFrac(1);
            for (int i = 1; i <= n; ++i) {
                if (!vanishes(m, {{1, {{'K', i}, {'k', i}}}, {-1, {}}}, v)) return false;
                if (!vanishes(m, {{1, {{'k', i}, {'K', i}}}, {-1, {}}}, v)) return false;
                // (K - K^{-1}) / (q - q^{-1}) on this weight space
                const LaurentFrac h(LaurentPoly::q(mu[i - 1]) - LaurentPoly::q(-mu[i - 1]), qdiff);
                for (int k = 1; k <= n; ++k) {
                    const LaurentFrac up(LaurentPoly::q(cartan(i, k)));
                    const LaurentFrac down(LaurentPoly::q(-cartan(i, k)));
                    if (!vanishes(m, {{1, {{'K', i}, {'E', k}, {'k', i}}}, {-up, {{'E', k}}}}, v)) return false;
                    if (!vanishes(m, {{1, {{'K', i}, {'F', k}, {'k', i}}}, {-down, {{'F', k}}}}, v)) return false;
                    std::vector<Term> comm{{1, {{'E', i}, {'F', k}}}, {-1, {{'F', k}, {'E', i}}}};
                    if (i == k) comm.push_back({-h, {}});
                    if (!vanishes(m, comm, v)) return false;
                    if (i == k) continue;
                    if (std::abs(i - k) == 1) {
                        for (char g : {'E', 'F'})
                            if (!vanishes(m,
                                          {{1, {{g, i}, {g, i}, {g, k}}},
                                           {-two, {{g, i}, {g, k}, {g, i}}},
                                           {1, {{g, k}, {g, i}, {g, i}}}},
                                          v))
                                return false;
                    } else {
                        for (char g : {'E', 'F'})
                            if (!vanishes(m, {{1, {{g, i}, {g, k}}}, {-1, {{g, k}, {g, i}}}}, v)) return false;
                    }
                }
            }
        }
    }
    return true;
}

namespace {

LaurentFrac pair_with(const std::vector<std::vector<LaurentPoly>>& g, const FracVector& a, const FracVector& b) {
    LaurentFrac s;
    for (size_t r = 0; r < a.size(); ++r) {
        if (a[r].is_zero()) continue;
        for (size_t c = 0; c < b.size(); ++c)
            if (!b[c].is_zero() && !g[r][c].is_zero()) s += a[r] * LaurentFrac(g[r][c]) * b[c];
    }
    return s;
}

}  // namespace

bool verify_biadjoint(const HighestWeightModule& m) {
    for (const auto& [beta, s] : m.spaces)
        for (int i = 1; i <= m.rank(); ++i) {
            RootVec up = beta;
            ++up[i - 1];
            const WeightSpace* t = m.space(up);
            if (!t) continue;
            for (size_t a = 0; a < s.basis.size(); ++a)
                for (size_t b = 0; b < t->basis.size(); ++b) {
                    FracVector x(s.basis.size()), y(t->basis.size());
                    x[a] = LaurentFrac(1);
                    y[b] = LaurentFrac(1);
                    auto fx = m.apply_f(i, beta, x);
                    auto ey = m.apply_e(i, up, y);
                    if (!fx || !ey) continue;
                    FracVector phi_y = m.apply_k(i, beta, *ey);
                    for (auto& e : phi_y) e = e * LaurentFrac(LaurentPoly::q(-1));
                    if (pair_with(t->gram, *fx, y) != pair_with(s.gram, x, phi_y)) return false;
                }
        }
    return true;
}

std::map<SlWeight, int> weight_multiset(const HighestWeightModule& m) {
    std::map<SlWeight, int> out;
    for (const auto& [b, s] : m.spaces) out[s.weight] += static_cast<int>(s.basis.size());
    return out;
}

bool branching_character_check(const Partition& lambda) {
    if (lambda.size() < 2) throw std::invalid_argument("branching_character_check: need at least two parts");
    std::map<SlWeight, int> lhs;
    for (const auto& [w, c] : weight_multiset(build_irreducible(weight_of_partition(lambda)))) {
        SlWeight r(w.begin(), w.end() - 1);
        lhs[r] += c;
    }
    std::map<SlWeight, int> rhs;
    for (const Partition& mu : interlacing_set(lambda)) {
        if (mu.size() == 1) {
            rhs[SlWeight{}] += 1;
            continue;
        }
        for (const auto& [w, c] : weight_multiset(build_irreducible(weight_of_partition(mu)))) rhs[w] += c;
    }
    return lhs == rhs;
}

}  // namespace klrlab
