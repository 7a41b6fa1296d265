#include "klrlab/cyclo.hpp"
#include "klrlab/uqmod.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace klrlab {

std::string to_string(CycStatus s) { return s == CycStatus::exact ? "exact" : "capped"; }

QElement QElement::from(const KLRElement& x) {
    QElement q;
    q.rank = x.rank();
    for (const auto& [w, c] : x.terms()) q.terms.emplace(w, mpq_class(c));
    return q;
}

void QElement::add(const KLRWord& w, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string QElement::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*" << KLRElement::from_word(rank, w).to_string();
    }
    return os.str();
}

QElement multiply(const QElement& a, const QElement& b) {
    QElement out;
    out.rank = a.rank;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            if (wa.bottom != wb.top()) continue;
            KLRElement p = multiply(KLRElement::from_word(a.rank, wa), KLRElement::from_word(a.rank, wb));
            for (const auto& [w, c] : p.terms()) out.add(w, ca * cb * mpq_class(c));
        }
    return out;
}

void Echelon::reduce(SparseRow& row) const {
    for (auto it = row.begin(); it != row.end();) {
        auto piv = rows_.find(it->first);
        if (piv == rows_.end()) {
            ++it;
            continue;
        }
        const mpq_class f = it->second;
        const int col = it->first;
        for (const auto& [c, v] : piv->second) {
            mpq_class& e = row[c];
            e -= f * v;
        }
        // entries at or after col may have changed; drop zeros and resume
        for (auto z = row.begin(); z != row.end();) z = z->second == 0 ? row.erase(z) : std::next(z);
        it = row.upper_bound(col);
    }
}

bool Echelon::insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    const int p = row.begin()->first;
    const mpq_class lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    for (auto& [q, r] : rows_) {
        auto hit = r.find(p);
        if (hit == r.end()) continue;
        const mpq_class f = hit->second;
        for (const auto& [c, v] : row) r[c] -= f * v;
        for (auto z = r.begin(); z != r.end();) z = z->second == 0 ? r.erase(z) : std::next(z);
    }
    rows_.emplace(p, std::move(row));
    return true;
}

SparseRow Echelon::remainder(SparseRow row) const {
    reduce(row);
    return row;
}

std::vector<StrandSeq> rearrangements(StrandSeq s) {
    std::sort(s.begin(), s.end());
    std::vector<StrandSeq> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::vector<std::vector<int>> perms_between(const StrandSeq& bottom, const StrandSeq& top) {
    std::vector<std::vector<int>> out;
    if (bottom.size() != top.size()) return out;
    const int m = static_cast<int>(bottom.size());
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = top[p[i]] == bottom[i];
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& f) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        f();
        cur.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur.push_back(v);
        compositions(total - v, parts, cur, f);
        cur.pop_back();
    }
}

void for_each_dots(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
    if (parts == 0) {
        if (total == 0) f({});
        return;
    }
    std::vector<int> cur;
    compositions(total, parts, cur, [&] { f(cur); });
}

std::vector<int> identity_perm(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Word with dots c added below a normal word.
KLRWord add_dots(const KLRWord& w, const std::vector<int>& c) {
    std::vector<int> dots, perm;
    split_normal_word(w, dots, perm);
    for (size_t i = 0; i < c.size(); ++i) dots[i] += c[i];
    return normal_word(w.bottom, dots, perm);
}

bool same_content(const StrandSeq& a, const StrandSeq& b) {
    StrandSeq x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

}  // namespace

CycContext::CycContext(Partition lambda, int degree_cap, int dot_cap)
    : lambda_(std::move(lambda)), degree_cap_(degree_cap), dot_cap_(dot_cap) {
    if (lambda_.size() < 1) throw std::invalid_argument("context: empty partition");
    if (degree_cap_ <= 0) throw std::invalid_argument("context: degree cap must be positive");
    if (lambda_.size() == 1)
        lbar_.clear();
    else
        lbar_ = weight_of_partition(lambda_);
    if (dot_cap_ < 0) {
        int mx = 0;
        for (int v : lbar_) mx = std::max(mx, v);
        dot_cap_ = std::max(1, lambda_.weight() + mx);
    }
    if (dot_cap_ <= 0) throw std::invalid_argument("context: dot cap must be positive");
}

CycContext make_context(const Partition& lambda, int degree_cap, int dot_cap) {
    return CycContext(lambda, degree_cap, dot_cap);
}

const std::vector<CycContext::Gen>& CycContext::generators(const StrandSeq& bottom, const StrandSeq& top) {
    auto key = std::make_pair(bottom, top);
    if (auto it = gens_.find(key); it != gens_.end()) return it->second;
    std::vector<Gen> out;
    const int m = static_cast<int>(bottom.size());
    if (m > 0) {
        for (const StrandSeq& mid : rearrangements(bottom)) {
            std::vector<int> g(m, 0);
            g[0] = lbar_[mid[0] - 1];
            const KLRWord gw = normal_word(mid, g, identity_perm(m));
            for (const auto& v : perms_between(bottom, mid)) {
                const KLRWord vw = normal_word(bottom, std::vector<int>(m, 0), v);
                for (const auto& u : perms_between(mid, top)) {
                    const KLRWord uw = normal_word(mid, std::vector<int>(m, 0), u);
                    std::vector<klrlab::Gen> ops = vw.ops;
                    ops.insert(ops.end(), gw.ops.begin(), gw.ops.end());
                    ops.insert(ops.end(), uw.ops.begin(), uw.ops.end());
                    const KLRWord raw = make_word(bottom, ops);
                    KLRElement y = normal_form(rank(), raw);
                    if (!y.is_zero()) out.push_back({std::move(y), degree(raw)});
                }
            }
        }
    }
    return gens_.emplace(std::move(key), std::move(out)).first->second;
}

CycPiece CycContext::build(const StrandSeq& bottom, const StrandSeq& top, int deg, int dot_cap) {
    CycPiece p;
    if (bottom.size() != top.size() || !same_content(bottom, top)) return p;
    const int m = static_cast<int>(bottom.size());
    for (const auto& perm : perms_between(bottom, top)) {
        const KLRWord w = normal_word(bottom, std::vector<int>(m, 0), perm);
        const int rest = deg - degree(w);
        if (rest < 0 || rest % 2 != 0) continue;
        for_each_dots(rest / 2, m, [&](const std::vector<int>& a) {
            p.basis.push_back(normal_word(bottom, a, perm));
        });
    }
    std::sort(p.basis.begin(), p.basis.end());
    for (size_t i = 0; i < p.basis.size(); ++i) p.index.emplace(p.basis[i], static_cast<int>(i));
    if (p.basis.empty()) return p;
    for (const Gen& g : generators(bottom, top)) {
        const int rest = deg - g.degree;
        if (rest < 0 || rest % 2 != 0) continue;
        if (rest / 2 > dot_cap) {
            p.truncated = true;
            continue;
        }
        for_each_dots(rest / 2, m, [&](const std::vector<int>& c) {
            SparseRow row;
            for (const auto& [w, coef] : g.y.terms()) {
                const KLRWord shifted = add_dots(w, c);
                row[p.index.at(shifted)] += mpq_class(coef);
            }
            for (auto z = row.begin(); z != row.end();) z = z->second == 0 ? row.erase(z) : std::next(z);
            p.ideal.insert(std::move(row));
        });
        if (p.ideal.rank() == static_cast<int>(p.basis.size())) break;
    }
    return p;
}

const CycPiece& CycContext::piece(const StrandSeq& bottom, const StrandSeq& top, int deg, CycStatus* status) {
    auto key = std::make_tuple(bottom, top, deg);
    auto it = pieces_.find(key);
    if (it == pieces_.end()) {
        CycPiece p = build(bottom, top, deg, dot_cap_);
        CycStatus st = CycStatus::exact;
        if (p.truncated) {
            // the dot multipliers in a fixed degree are finite, so without a cap
            // the spanning set is complete
            CycPiece p1 = build(bottom, top, deg, std::numeric_limits<int>::max());
            if (p1.truncated) st = CycStatus::capped;
            p = std::move(p1);
        }
        it = pieces_.emplace(std::move(key), Entry{std::move(p), st}).first;
    }
    if (status) *status = it->second.status;
    return it->second.piece;
}

CycContext& CycContext::sub(const XiSequence& xi) {
    auto it = subs_.find(xi);
    if (it != subs_.end()) return *it->second;
    const Partition mu = xi_apply(xi, lambda_);
    Partition head(std::vector<int>(mu.parts.begin(), mu.parts.end() - 1));
    auto ctx = std::make_unique<CycContext>(head, degree_cap_, dot_cap_);
    return *subs_.emplace(xi, std::move(ctx)).first->second;
}

CycResult cyc_reduce(const QElement& x, CycContext& ctx) {
    if (x.rank != ctx.rank() && !x.is_zero()) throw std::invalid_argument("cyc_reduce: rank mismatch");
    // normal form first, keeping rational coefficients
    QElement nf;
    nf.rank = ctx.rank();
    for (const auto& [w, c] : x.terms) {
        const KLRElement e = normal_form(ctx.rank(), w);
        for (const auto& [v, d] : e.terms()) nf.add(v, c * mpq_class(d));
    }

    std::map<std::tuple<StrandSeq, StrandSeq, int>, std::vector<std::pair<KLRWord, mpq_class>>> groups;
    for (const auto& [w, c] : nf.terms) groups[{w.bottom, w.top(), degree(w)}].emplace_back(w, c);

    CycResult out;
    out.value.rank = ctx.rank();
    for (const auto& [key, terms] : groups) {
        const auto& [b, t, d] = key;
        CycStatus st;
        const CycPiece& p = ctx.piece(b, t, d, &st);
        out.status = combine(out.status, st);
        SparseRow row;
        for (const auto& [w, c] : terms) row[p.index.at(w)] += c;
        const SparseRow rem = p.ideal.remainder(std::move(row));
        for (const auto& [col, c] : rem) out.value.add(p.basis[col], c);
    }
    return out;
}

CycResult cyc_reduce(const KLRElement& x, CycContext& ctx) { return cyc_reduce(QElement::from(x), ctx); }

namespace {

int min_degree(const StrandSeq& bottom, const StrandSeq& top) {
    const int m = static_cast<int>(bottom.size());
    int best = 0;
    bool any = false;
    for (const auto& perm : perms_between(bottom, top)) {
        const int d = degree(normal_word(bottom, std::vector<int>(m, 0), perm));
        if (!any || d < best) best = d;
        any = true;
    }
    return best;
}

int piece_dim(CycContext& ctx, const StrandSeq& bottom, const StrandSeq& top, int d, const WordFilter& kill,
              CycStatus& status) {
    CycStatus st;
    const CycPiece& p = ctx.piece(bottom, top, d, &st);
    status = combine(status, st);
    if (!kill) return p.dim();
    Echelon e = p.ideal;
    for (size_t i = 0; i < p.basis.size(); ++i)
        if (kill(p.basis[i])) e.insert(SparseRow{{static_cast<int>(i), mpq_class(1)}});
    return static_cast<int>(p.basis.size()) - e.rank();
}

}  // namespace

GdimResult gdim_hom_killing(const StrandSeq& bottom, const StrandSeq& top, CycContext& ctx, const WordFilter& kill) {
    GdimResult r;
    if (bottom.size() != top.size() || !same_content(bottom, top)) return r;
    for (int l : bottom)
        if (l < 1 || l > ctx.rank()) throw std::invalid_argument("gdim_hom: label out of range");
    const int lo = min_degree(bottom, top);
    for (int d = lo; d <= ctx.degree_cap(); ++d) {
        const int dim = piece_dim(ctx, bottom, top, d, kill, r.status);
        if (dim) r.gdim.add_term(d, dim);
    }
    // two further degrees must vanish for the truncation to be trusted
    for (int d = std::max(lo, ctx.degree_cap() + 1); d <= ctx.degree_cap() + 2; ++d)
        if (piece_dim(ctx, bottom, top, d, kill, r.status) != 0) r.status = CycStatus::capped;
    return r;
}

GdimResult gdim_hom(const StrandSeq& bottom, const StrandSeq& top, CycContext& ctx) {
    return gdim_hom_killing(bottom, top, ctx, nullptr);
}

ShapovalovComparison compare_shapovalov(const std::vector<StrandSeq>& seqs, CycContext& ctx) {
    ShapovalovComparison c;
    c.labels = seqs;
    VermaForm form(ctx.lbar());
    const size_t n = seqs.size();
    c.gdim.assign(n, std::vector<LaurentPoly>(n));
    c.gram.assign(n, std::vector<LaurentPoly>(n));
    std::optional<int> shift;
    bool ok = true;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            GdimResult g = gdim_hom(seqs[a], seqs[b], ctx);
            c.status = combine(c.status, g.status);
            c.gdim[a][b] = g.gdim;
            c.gram[a][b] = form.entry(seqs[a], seqs[b]);
            const LaurentPoly& x = c.gdim[a][b];
            const LaurentPoly& y = c.gram[a][b];
            if (x.is_zero() || y.is_zero()) {
                ok = ok && x.is_zero() && y.is_zero();
                continue;
            }
            const int s = x.min_exp() - y.min_exp();
            if (!shift) shift = s;
            ok = ok && s == *shift && x == y.shifted(s);
        }
    c.qshift = shift.value_or(0);
    c.ok = ok;
    return c;
}

ShapovalovComparison compare_shapovalov(const std::vector<int>& beta, CycContext& ctx) {
    if (static_cast<int>(beta.size()) != ctx.rank()) throw std::invalid_argument("compare: rank mismatch");
    StrandSeq s;
    for (size_t i = 0; i < beta.size(); ++i)
        for (int k = 0; k < beta[i]; ++k) s.push_back(static_cast<int>(i) + 1);
    return compare_shapovalov(rearrangements(s), ctx);
}

SpecialIdempotentSpec special_idempotent(const XiSequence& xi, const StrandSeq& tail, const CycContext& ctx) {
    if (!std::is_sorted(xi.begin(), xi.end())) throw std::invalid_argument("special idempotent: xi must be weakly increasing");
    if (!is_dominant_sequence(xi, ctx.lambda()))
        throw std::invalid_argument("special idempotent: xi is not dominant for lambda");
    const int n = ctx.rank();
    for (int l : tail)
        if (l < 1 || l >= n) throw std::invalid_argument("special idempotent: tail label out of range");
    return SpecialIdempotentSpec{xi, tail, n};
}

PGroupMask PGroupMask::for_special(const SpecialIdempotentSpec& e) {
    PGroupMask m;
    const size_t p = p_block(e.xi, e.rank).size();
    m.group.assign(p, 0);
    m.group.resize(p + e.tail.size(), -1);
    return m;
}

bool tilde_kernel_test(const KLRWord& w, const PGroupMask& mask) {
    if (mask.group.size() != w.bottom.size()) throw std::invalid_argument("tilde_kernel_test: mask size mismatch");
    std::vector<int> at(w.bottom.size());  // strand at each position
    std::iota(at.begin(), at.end(), 0);
    for (const auto& g : w.ops) {
        const int r = g.pos - 1;
        if (!g.cross) {
            if (mask.group[at[r]] >= 0) return true;
            continue;
        }
        const int a = mask.group[at[r]], b = mask.group[at[r + 1]];
        if (a >= 0 && a == b) return true;
        std::swap(at[r], at[r + 1]);
    }
    return false;
}

KLRElement lift_through(const KLRElement& x, const XiSequence& xi, int rank) {
    const StrandSeq p = p_block(xi, rank);
    const int P = static_cast<int>(p.size());
    KLRElement out(rank);
    for (const auto& [w, c] : x.terms()) {
        StrandSeq b = p;
        b.insert(b.end(), w.bottom.begin(), w.bottom.end());
        std::vector<klrlab::Gen> ops;
        for (auto g : w.ops) {
            g.pos += P;
            ops.push_back(g);
        }
        out.add(make_word(b, ops), c);
    }
    return out;
}

CycResult pi_project(const KLRElement& x, const XiSequence& xi, CycContext& ctx) {
    if (!std::is_sorted(xi.begin(), xi.end()) || !is_dominant_sequence(xi, ctx.lambda()))
        throw std::invalid_argument("pi_project: xi is not dominant for lambda");
    const int n = ctx.rank();
    const StrandSeq p = p_block(xi, n);
    const size_t P = p.size();
    CycContext& target = ctx.sub(xi);
    QElement img;
    img.rank = target.rank();
    const KLRElement nx = normal_form(x);
    for (const auto& [w, c] : nx.terms()) {
        const StrandSeq top = w.top();
        if (w.bottom.size() < P || !std::equal(p.begin(), p.end(), w.bottom.begin()) ||
            !std::equal(p.begin(), p.end(), top.begin()))
            throw std::invalid_argument("pi_project: word does not begin with the p-block");
        std::vector<int> dots, perm;
        split_normal_word(w, dots, perm);
        bool pure = true;
        for (size_t i = 0; i < P && pure; ++i) pure = perm[i] == static_cast<int>(i) && dots[i] == 0;
        if (!pure) continue;
        StrandSeq b(w.bottom.begin() + static_cast<long>(P), w.bottom.end());
        for (int l : b)
            if (l >= n) throw std::invalid_argument("pi_project: free strand labeled n");
        std::vector<int> d(dots.begin() + static_cast<long>(P), dots.end());
        std::vector<int> q;
        for (size_t i = P; i < perm.size(); ++i) q.push_back(perm[i] - static_cast<int>(P));
        img.add(normal_word(b, d, q), mpq_class(c));
    }
    return cyc_reduce(img, target);
}

KLRElement x_generator(int i, int j, int r, int rank) {
    const StrandSeq p = p_block(i, rank);
    const int P = static_cast<int>(p.size());
    StrandSeq b = p;
    b.push_back(j);
    std::vector<klrlab::Gen> ops;
    for (int pos = P; pos >= 1; --pos) ops.push_back(klrlab::Gen::crossing(pos));
    for (int k = 0; k < r; ++k) ops.push_back(klrlab::Gen::dot(1));
    for (int pos = 1; pos <= P; ++pos) ops.push_back(klrlab::Gen::crossing(pos));
    return KLRElement::from_word(rank, make_word(b, ops));
}

KLRElement append_strand(const KLRElement& x, int j) {
    KLRElement out(x.rank());
    for (const auto& [w, c] : x.terms()) {
        StrandSeq b = w.bottom;
        b.push_back(j);
        out.add(make_word(b, w.ops), c);
    }
    return out;
}

QElement append_strand(const QElement& x, int j) {
    QElement out;
    out.rank = x.rank;
    for (const auto& [w, c] : x.terms) {
        StrandSeq b = w.bottom;
        b.push_back(j);
        out.add(make_word(b, w.ops), c);
    }
    return out;
}

GTIdempotent gt_idempotent(const GTPattern& s) {
    if (!is_gt_pattern(s)) throw std::invalid_argument("gt_idempotent: not a Gelfand-Tsetlin pattern");
    GTIdempotent g;
    g.pattern = s;
    for (size_t t = 0; t + 1 < s.layers.size(); ++t) {
        const int r = s.layers[t].size() - 1;
        const StrandSeq block = p_block(xi_between(s.layers[t], s.layers[t + 1]), r);
        g.sequence.insert(g.sequence.end(), block.begin(), block.end());
        g.layer.insert(g.layer.end(), block.size(), static_cast<int>(t));
    }
    return g;
}

bool gt_killed(const KLRWord& w, const GTIdempotent& bottom, const GTIdempotent& top) {
    std::vector<int> dots, perm;
    split_normal_word(w, dots, perm);
    const size_t m = perm.size();
    for (size_t i = 0; i < m; ++i) {
        if (dots[i] != 0) return true;
        if (bottom.layer[i] != top.layer[perm[i]]) return true;
        for (size_t j = i + 1; j < m; ++j)
            if (perm[j] < perm[i] && bottom.layer[i] == bottom.layer[j]) return true;
    }
    return false;
}

GTOrthogonality gt_orthogonality_check(CycContext& ctx) {
    GTOrthogonality r;
    std::vector<GTIdempotent> es;
    for (const auto& s : enumerate_gt_patterns(ctx.lambda())) es.push_back(gt_idempotent(s));
    r.patterns = static_cast<int>(es.size());
    std::vector<StrandSeq> seqs;
    bool ok = true;
    for (size_t a = 0; a < es.size(); ++a) {
        seqs.push_back(es[a].sequence);
        for (size_t b = 0; b < es.size(); ++b) {
            const auto& bot = es[a];
            const auto& top = es[b];
            GdimResult g = gdim_hom_killing(bot.sequence, top.sequence, ctx,
                                            [&](const KLRWord& w) { return gt_killed(w, bot, top); });
            r.status = combine(r.status, g.status);
            if (a == b) {
                if (!g.gdim.is_zero()) ++r.nonzero_diagonal;
            } else if (!g.gdim.is_zero()) {
                ok = false;
            }
        }
    }
    std::sort(seqs.begin(), seqs.end());
    r.distinct_sequences = static_cast<int>(std::unique(seqs.begin(), seqs.end()) - seqs.begin());
    r.ok = ok && r.status == CycStatus::exact;
    return r;
}

Sl2Vanishing sl2_vanishing_check(int lbar1, int degree_cap, int dot_cap) {
    if (lbar1 < 0) throw std::invalid_argument("sl2_vanishing_check: negative weight");
    CycContext ctx(Partition({lbar1, 0}), degree_cap, dot_cap);
    Sl2Vanishing v;
    CycResult top = cyc_reduce(KLRElement::idempotent(1, StrandSeq(lbar1 + 1, 1)), ctx);
    CycResult below = cyc_reduce(KLRElement::idempotent(1, StrandSeq(lbar1, 1)), ctx);
    v.vanishes = top.value.is_zero();
    v.below_nonzero = !below.value.is_zero();
    v.status = combine(top.status, below.status);
    return v;
}

WeylVanishing weyl_vanishing_check(const StrandSeq& idem, CycContext& ctx) {
    WeylVanishing v;
    const RegionDecoration d = decorate_regions(make_word(idem, {}), ctx.lambda().parts);
    for (int e : d.rightmost) v.flagged = v.flagged || e < 0;
    if (!v.flagged) {
        v.holds = true;
        return v;
    }
    CycResult r = cyc_reduce(KLRElement::idempotent(ctx.rank(), idem), ctx);
    v.status = r.status;
    v.holds = r.value.is_zero();
    return v;
}

}  // namespace klrlab
