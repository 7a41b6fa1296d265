#include "klrlab/acceptance.hpp"
#include "klrlab/batch.hpp"
#include "klrlab/cyclo.hpp"
#include "klrlab/io.hpp"
#include "klrlab/uqmod.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

using namespace klrlab;

namespace {

struct Options {
    std::string partition, seq, seq2, beta, ops;
    bool has_seq = false, has_seq2 = false;
    int rank = 0;
    int size = -1;
    int height = 3;
    int deg_cap = 12;
    int dot_cap = -1;
    bool dominant = false;
    bool require_exact = false;
    bool no_cache = false;
    std::string format = "json";
    std::string cache_dir, in, out;
};

// A command result: the document to emit and whether every check held.
struct Outcome {
    Json doc;
    bool ok = true;
    bool capped = false;
};

Partition need_partition(const Options& o) {
    if (o.partition.empty()) throw UsageError("--partition is required");
    return parse_partition(o.partition);
}

CycContext context_for(const Options& o, const Partition& lam) {
    if (lam.size() < 2) throw UsageError("the partition needs at least two parts");
    if (o.deg_cap <= 0) throw UsageError("--deg-cap must be positive");
    if (o.dot_cap == 0 || o.dot_cap < -1) throw UsageError("--dot-cap must be positive");
    return make_context(lam, o.deg_cap, o.dot_cap);
}

StrandSeq need_seq(const Options& o, int rank) {
    if (!o.has_seq) throw UsageError("--seq is required");
    StrandSeq s = parse_int_list(o.seq, true);
    for (int l : s)
        if (l < 1 || (rank > 0 && l > rank)) throw UsageError("label " + std::to_string(l) + " out of range");
    return s;
}

StrandSeq second_seq(const Options& o, int rank, const StrandSeq& first) {
    if (!o.has_seq2) return first;
    StrandSeq s = parse_int_list(o.seq2, true);
    for (int l : s)
        if (l < 1 || l > rank) throw UsageError("label " + std::to_string(l) + " out of range");
    return s;
}

Json read_input(const Options& o) {
    std::ifstream in(o.in);
    if (!in) throw UsageError("cannot read " + o.in);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw UsageError(o.in + " is not valid JSON");
    return j;
}

// An element from --in, or from --seq/--ops with the rank from --rank or the context.
KLRElement input_element(const Options& o, int rank) {
    if (!o.in.empty()) {
        KLRElement x = element_from_json(read_input(o));
        if (rank > 0 && x.rank() != rank) throw UsageError("element rank does not match");
        return x;
    }
    int r = rank > 0 ? rank : o.rank;
    StrandSeq b = need_seq(o, 0);
    if (r <= 0) r = b.empty() ? 1 : *std::max_element(b.begin(), b.end());
    for (int l : b)
        if (l > r) throw UsageError("label " + std::to_string(l) + " exceeds the rank");
    try {
        return KLRElement::from_word(r, make_word(b, parse_ops(o.ops)));
    } catch (const std::logic_error& e) {
        throw UsageError(e.what());
    }
}

std::optional<ResultCache> cache_for(const Options& o) {
    if (o.no_cache) return std::nullopt;
    return ResultCache(ResultCache::resolve_dir(o.cache_dir.empty() ? std::nullopt
                                                                     : std::optional<std::string>(o.cache_dir)));
}

Json cached(const Options& o, const std::string& key, const std::function<Json()>& f) {
    auto c = cache_for(o);
    return c ? c->get_or_compute(key, f) : f();
}

std::string caps_key(const Options& o) {
    return "deg=" + std::to_string(o.deg_cap) + "|dot=" + std::to_string(o.dot_cap);
}

Json seq_json(const StrandSeq& s) { return Json(s); }

// ---- commands ----

Outcome gt_enum(const Options& o) {
    Json out = Json::array();
    for (const auto& s : enumerate_gt_patterns(need_partition(o))) out.push_back(to_json(s));
    return {out};
}

Outcome gt_idem(const Options& o) {
    Json out = Json::array();
    for (const auto& s : enumerate_gt_patterns(need_partition(o)))
        out.push_back(Json{{"pattern", to_json(s)}, {"sequence", gt_idempotent(s).sequence}});
    return {out};
}

Outcome branch_check(const Options& o) {
    const Partition lam = need_partition(o);
    if (lam.size() < 2) throw UsageError("the partition needs at least two parts");
    std::vector<Partition> mus = interlacing_set(lam);
    std::sort(mus.begin(), mus.end(), std::greater<>());
    Json rhs = Json::array();
    long sum = 0;
    for (const auto& mu : mus) {
        rhs.push_back(weyl_dim(mu));
        sum += weyl_dim(mu);
    }
    const long lhs = weyl_dim(lam);
    return {Json{{"ok", lhs == sum}, {"lhs", lhs}, {"rhs", rhs}}, lhs == sum};
}

Outcome weights_schur(const Options& o) {
    int n = o.rank, d = o.size;
    if (!o.partition.empty()) {
        const Partition lam = need_partition(o);
        n = lam.size();
        d = lam.weight();
    }
    if (n < 1 || d < 0) throw UsageError("give --partition, or --rank and --size");
    Json out = Json::array();
    for (const auto& w : schur_weights(n, d, o.dominant)) out.push_back(w);
    return {out};
}

Outcome klr_nf(const Options& o) { return {to_json(normal_form(input_element(o, 0)))}; }

Outcome klr_factor(const Options& o) {
    if (o.rank < 2) throw UsageError("--rank of at least 2 is required");
    const StrandSeq s = need_seq(o, o.rank);
    Json out = Json::array();
    for (const auto& t : factor_general(s, o.rank))
        out.push_back(Json{{"coeff", to_json(t.coeff)},
                           {"through",
                            Json{{"xi", t.through.xi}, {"tail", t.through.tail}, {"sequence", t.through.sequence()}}},
                           {"left", to_json(t.left)},
                           {"right", to_json(t.right)}});
    return {out};
}

Outcome klr_degree(const Options& o) {
    const KLRElement x = input_element(o, 0);
    int d = 0;
    const bool homog = x.homogeneous(&d);
    Json out{{"homogeneous", homog}};
    out["degree"] = homog ? Json(d) : Json(nullptr);
    return {out, homog};
}

Outcome cyc_reduce_cmd(const Options& o) {
    const Partition lam = need_partition(o);
    CycContext ctx = context_for(o, lam);
    const CycResult r = cyc_reduce(input_element(o, ctx.rank()), ctx);
    Outcome out{Json{{"lambda", to_json(lam)}, {"value", to_json(r.value)}, {"status", to_string(r.status)}}};
    out.capped = r.status == CycStatus::capped;
    return out;
}

Outcome cyc_gdim(const Options& o) {
    const Partition lam = need_partition(o);
    const int rank = lam.size() - 1;
    const StrandSeq left = need_seq(o, rank);
    const StrandSeq right = second_seq(o, rank, left);
    const std::string key = "cyc-gdim|" + o.partition + "|" + seq_json(left).dump() + "|" + seq_json(right).dump() +
                            "|" + caps_key(o);
    Json doc = cached(o, key, [&] {
        CycContext ctx = context_for(o, lam);
        return cyc_record(lam, left, right, gdim_hom(left, right, ctx));
    });
    Outcome out{doc};
    out.capped = doc.at("status") == "capped";
    return out;
}

Outcome cyc_compare(const Options& o) {
    const Partition lam = need_partition(o);
    const int rank = lam.size() - 1;
    if (!o.beta.empty()) {
        const std::vector<int> beta = parse_int_list(o.beta);
        if (static_cast<int>(beta.size()) != rank) throw UsageError("--beta needs one entry per label");
        const std::string key = "cyc-compare|" + o.partition + "|beta=" + o.beta + "|" + caps_key(o);
        Json doc = cached(o, key, [&] {
            CycContext ctx = context_for(o, lam);
            return to_json(compare_shapovalov(beta, ctx));
        });
        return {doc, doc.at("ok").get<bool>(), doc.at("status") == "capped"};
    }
    const StrandSeq left = need_seq(o, rank);
    const StrandSeq right = second_seq(o, rank, left);
    const std::string key = "cyc-compare|" + o.partition + "|" + seq_json(left).dump() + "|" +
                            seq_json(right).dump() + "|" + caps_key(o);
    Json doc = cached(o, key, [&] {
        CycContext ctx = context_for(o, lam);
        const GdimResult g = gdim_hom(left, right, ctx);
        const LaurentPoly s = VermaForm(ctx.lbar()).entry(left, right);
        bool ok = g.gdim.is_zero() == s.is_zero();
        int shift = 0;
        if (ok && !s.is_zero()) {
            shift = g.gdim.min_exp() - s.min_exp();
            ok = g.gdim == s.shifted(shift);
        }
        return Json{{"gdim", to_json(g.gdim)}, {"shapovalov", to_json(s)}, {"ok", ok}, {"qshift", shift},
                    {"status", to_string(g.status)}};
    });
    return {doc, doc.at("ok").get<bool>(), doc.at("status") == "capped"};
}

Outcome cyc_sl2(const Options& o) {
    const Partition lam = need_partition(o);
    if (lam.size() != 2) throw UsageError("sl2-vanish needs a two-part partition");
    const int l = lam[0] - lam[1];
    const Sl2Vanishing v = sl2_vanishing_check(l, o.deg_cap, o.dot_cap);
    return {Json{{"lambda", to_json(lam)},
                 {"lbar", l},
                 {"vanishes", v.vanishes},
                 {"below_nonzero", v.below_nonzero},
                 {"ok", v.ok()},
                 {"status", to_string(v.status)}},
            v.ok(), v.status == CycStatus::capped};
}

Outcome cyc_weyl(const Options& o) {
    const Partition lam = need_partition(o);
    CycContext ctx = context_for(o, lam);
    auto one = [&](const StrandSeq& s, Outcome& acc) {
        const WeylVanishing v = weyl_vanishing_check(s, ctx);
        acc.ok = acc.ok && v.holds;
        acc.capped = acc.capped || v.status == CycStatus::capped;
        return Json{{"seq", s}, {"flagged", v.flagged}, {"holds", v.holds}, {"status", to_string(v.status)}};
    };
    Outcome out;
    if (o.has_seq) {
        out.doc = one(need_seq(o, ctx.rank()), out);
        out.doc["lambda"] = to_json(lam);
        return out;
    }
    if (o.height < 0) throw UsageError("--height must be nonnegative");
    std::vector<StrandSeq> seqs{{}};
    for (size_t k = 0; k < seqs.size(); ++k) {
        if (static_cast<int>(seqs[k].size()) == o.height) continue;
        for (int l = 1; l <= ctx.rank(); ++l) {
            StrandSeq s = seqs[k];
            s.push_back(l);
            seqs.push_back(s);
        }
    }
    out.doc = Json::array();
    for (const auto& s : seqs) out.doc.push_back(one(s, out));
    return out;
}

Outcome cyc_gt_ortho(const Options& o) {
    const Partition lam = need_partition(o);
    const std::string key = "cyc-gt-ortho|" + o.partition + "|" + caps_key(o);
    Json doc = cached(o, key, [&] {
        CycContext ctx = context_for(o, lam);
        const GTOrthogonality r = gt_orthogonality_check(ctx);
        return Json{{"lambda", to_json(lam)},
                    {"ok", r.ok},
                    {"status", to_string(r.status)},
                    {"patterns", r.patterns},
                    {"nonzero_diagonal", r.nonzero_diagonal},
                    {"distinct_sequences", r.distinct_sequences}};
    });
    return {doc, doc.at("ok").get<bool>(), doc.at("status") == "capped"};
}

Outcome oracle_gram(const Options& o) {
    const Partition lam = need_partition(o);
    if (lam.size() < 2) throw UsageError("the partition needs at least two parts");
    const std::vector<int> beta = parse_int_list(o.beta);
    if (static_cast<int>(beta.size()) != lam.size() - 1) throw UsageError("--beta needs one entry per label");
    const std::string key = "oracle-gram|" + o.partition + "|" + o.beta;
    return {cached(o, key, [&] { return gram_json(lam, shapovalov_gram(weight_of_partition(lam), beta)); })};
}

Outcome suite_acceptance(const Options&) {
    Outcome out{Json::array()};
    for (int id = 1; id <= 11; ++id) {
        const CriterionResult r = run_criterion(id);
        std::cerr << format_line(r) << std::endl;
        out.ok = out.ok && r.pass;
        out.doc.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    }
    return out;
}

void emit(const Options& o, const Json& doc) {
    const std::string text = o.format == "csv" ? to_csv(doc) : doc.dump() + "\n";
    if (o.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(o.out, std::ios::trunc);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"klrlab: KLR algebras, Gelfand-Tsetlin combinatorics and Shapovalov forms"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--partition", o.partition, "comma-separated parts, trailing zeros included");
    app.add_option("--rank", o.rank, "number of strand labels");
    app.add_option("--seq", o.seq, "label sequence, comma-separated (may be empty)");
    app.add_option("--seq2", o.seq2, "second label sequence for two-sided queries");
    app.add_option("--beta", o.beta, "content vector, comma-separated");
    app.add_option("--ops", o.ops, "generators bottom to top, e.g. c1,d2");
    app.add_option("--size", o.size, "total degree for weights schur");
    app.add_option("--height", o.height, "maximal sequence length for weyl-vanish");
    app.add_option("--deg-cap", o.deg_cap, "degree cap");
    app.add_option("--dot-cap", o.dot_cap, "dot cap (default |λ| + max λ̄)");
    app.add_flag("--dominant", o.dominant, "dominant weights only");
    app.add_flag("--require-exact", o.require_exact, "fail when a result is capped");
    app.add_flag("--no-cache", o.no_cache, "bypass the result cache");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", o.cache_dir, "cache directory");
    app.add_option("--in", o.in, "input JSON file");
    app.add_option("--out", o.out, "output file");

    std::function<Outcome(const Options&)> run;
    auto group = [&](const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    auto leaf = [&](CLI::App* g, const std::string& name, const std::string& help, Outcome (*f)(const Options&)) {
        auto* c = g->add_subcommand(name, help);
        c->fallthrough();
        c->callback([&run, f] { run = f; });
    };
    auto* gt = group("gt", "Gelfand-Tsetlin patterns");
    leaf(gt, "enum", "list the patterns of a partition", gt_enum);
    leaf(gt, "idem", "idempotent sequences e(s)", gt_idem);
    auto* branch = group("branch", "branching rule");
    leaf(branch, "check", "dimension check of the branching rule", branch_check);
    auto* weights = group("weights", "weight lattices");
    leaf(weights, "schur", "weights of the q-Schur algebra", weights_schur);
    auto* klr = group("klr", "KLR algebra");
    leaf(klr, "nf", "normal form", klr_nf);
    leaf(klr, "factor", "factor an idempotent through special idempotents", klr_factor);
    leaf(klr, "degree", "degree of an element", klr_degree);
    auto* cyc = group("cyc", "cyclotomic quotients");
    leaf(cyc, "reduce", "reduce modulo the cyclotomic ideal", cyc_reduce_cmd);
    leaf(cyc, "gdim", "graded dimension of a Hom space", cyc_gdim);
    leaf(cyc, "compare", "compare graded dimensions with the Shapovalov form", cyc_compare);
    leaf(cyc, "sl2-vanish", "sl2 base case", cyc_sl2);
    leaf(cyc, "weyl-vanish", "region-weight vanishing", cyc_weyl);
    leaf(cyc, "gt-ortho", "Gelfand-Tsetlin orthogonality", cyc_gt_ortho);
    auto* oracle = group("oracle", "quantum group oracle");
    leaf(oracle, "gram", "Shapovalov Gram matrix", oracle_gram);
    auto* suite = group("suite", "test suites");
    leaf(suite, "acceptance", "run the acceptance criteria", suite_acceptance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    auto* seq_opt = app.get_option("--seq");
    auto* seq2_opt = app.get_option("--seq2");
    o.has_seq = seq_opt->count() > 0;
    o.has_seq2 = seq2_opt->count() > 0;
    try {
        Outcome r = run(o);
        emit(o, r.doc);
        if (!r.ok) return 1;
        if (o.require_exact && r.capped) {
            std::cerr << "error: result is capped" << std::endl;
            return 1;
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
