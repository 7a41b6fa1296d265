#include "klrlab/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace klrlab {

namespace fs = std::filesystem;

Json to_json(const BigInt& c) {
    if (c.fits_slong_p()) return Json(static_cast<std::int64_t>(c.get_si()));
    return Json(c.get_str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        BigInt c;
        if (c.set_str(j.get<std::string>(), 10) != 0) throw UsageError("not an integer: " + j.dump());
        return c;
    }
    throw UsageError("not an integer: " + j.dump());
}

Json to_json(const mpq_class& c) {
    if (c.get_den() == 1) return to_json(BigInt(c.get_num()));
    return Json(c.get_str());
}

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c)}));
    return out;
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_array()) throw UsageError("laurent polynomial must be an array");
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw UsageError("laurent term must be [exponent, coefficient]");
        p.add_term(t[0].get<int>(), bigint_from_json(t[1]));
    }
    return p;
}

Json to_json(const LaurentFrac& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const Partition& p) { return Json(p.parts); }

Json to_json(const GTPattern& s) {
    Json out = Json::array();
    for (const auto& l : s.layers) out.push_back(to_json(l));
    return out;
}

Json to_json(int rank, const KLRWord& w) {
    Json ops = Json::array();
    for (const Gen& g : w.ops) ops.push_back(Json{{"kind", g.cross ? "cross" : "dot"}, {"pos", g.pos}});
    return Json{{"rank", rank}, {"bottom", w.bottom}, {"ops", ops}};
}

KLRWord word_from_json(const Json& j, int* rank) {
    if (!j.is_object() || !j.contains("bottom")) throw UsageError("word needs a bottom sequence");
    if (rank && j.contains("rank")) *rank = j.at("rank").get<int>();
    std::vector<Gen> ops;
    for (const auto& o : j.value("ops", Json::array())) {
        const std::string kind = o.at("kind").get<std::string>();
        const int pos = o.at("pos").get<int>();
        if (kind == "dot")
            ops.push_back(Gen::dot(pos));
        else if (kind == "cross")
            ops.push_back(Gen::crossing(pos));
        else
            throw UsageError("unknown op kind: " + kind);
    }
    try {
        return make_word(j.at("bottom").get<StrandSeq>(), ops);
    } catch (const std::logic_error& e) {
        throw UsageError(e.what());
    }
}

Json to_json(const KLRElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"word", to_json(x.rank(), w)}});
    return Json{{"rank", x.rank()}, {"terms", terms}};
}

KLRElement element_from_json(const Json& j) {
    if (!j.is_object()) throw UsageError("element must be an object");
    if (j.contains("bottom")) {
        int rank = 0;
        KLRWord w = word_from_json(j, &rank);
        return KLRElement::from_word(rank, w);
    }
    KLRElement x(j.at("rank").get<int>());
    for (const auto& t : j.at("terms")) x.add(word_from_json(t.at("word")), bigint_from_json(t.at("coeff")));
    return x;
}

Json to_json(const QElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms) terms.push_back(Json{{"coeff", to_json(c)}, {"word", to_json(x.rank, w)}});
    return Json{{"rank", x.rank}, {"terms", terms}};
}

Json gram_json(const Partition& lambda, const ShapovalovGram& g) {
    Json entries = Json::array();
    for (const auto& row : g.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_json(LaurentFrac(e)));
        entries.push_back(r);
    }
    return Json{{"lambda", to_json(lambda)}, {"beta", g.beta}, {"labels", g.labels}, {"entries", entries}};
}

Json cyc_record(const Partition& lambda, const StrandSeq& left, const StrandSeq& right, const GdimResult& g,
                int qshift) {
    return Json{{"lambda", to_json(lambda)}, {"left", left},           {"right", right},
                {"gdim", to_json(g.gdim)},   {"status", to_string(g.status)}, {"qshift", qshift}};
}

Json to_json(const ShapovalovComparison& c) {
    auto matrix = [](const std::vector<std::vector<LaurentPoly>>& m) {
        Json out = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(to_json(e));
            out.push_back(r);
        }
        return out;
    };
    return Json{{"labels", c.labels},     {"gdim", matrix(c.gdim)},         {"shapovalov", matrix(c.gram)},
                {"ok", c.ok},             {"qshift", c.qshift},             {"status", to_string(c.status)}};
}

std::vector<int> parse_int_list(const std::string& text, bool allow_empty) {
    std::vector<int> out;
    if (text.empty()) {
        if (allow_empty) return out;
        throw UsageError("empty list");
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("expected comma-separated nonnegative integers, got '" + text + "'");
        long v = 0;
        try {
            v = std::stol(item);
        } catch (const std::exception&) {
            throw UsageError("integer out of range in '" + text + "'");
        }
        if (v > std::numeric_limits<int>::max()) throw UsageError("integer out of range in '" + text + "'");
        out.push_back(static_cast<int>(v));
    }
    if (text.back() == ',') throw UsageError("trailing comma in '" + text + "'");
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts = parse_int_list(text);
    if (!is_partition(parts)) throw UsageError("not a weakly decreasing partition: '" + text + "'");
    return Partition(parts);
}

std::vector<Gen> parse_ops(const std::string& text) {
    std::vector<Gen> ops;
    if (text.empty()) return ops;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() < 2 || (item[0] != 'c' && item[0] != 'd') ||
            item.find_first_not_of("0123456789", 1) != std::string::npos)
            throw UsageError("ops are written c<pos> or d<pos>, got '" + item + "'");
        const int pos = std::stoi(item.substr(1));
        ops.push_back(item[0] == 'c' ? Gen::crossing(pos) : Gen::dot(pos));
    }
    return ops;
}

namespace {

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    return out + "\n";
}

}  // namespace

std::string to_csv(const Json& j) {
    std::string out;
    if (j.is_object()) {
        std::vector<std::string> head, row;
        for (const auto& [k, v] : j.items()) {
            head.push_back(k);
            row.push_back(csv_cell(v));
        }
        return csv_row(head) + csv_row(row);
    }
    if (j.is_array()) {
        if (!j.empty() && j[0].is_object()) {
            std::vector<std::string> head;
            for (const auto& [k, v] : j[0].items()) head.push_back(k);
            out += csv_row(head);
            for (const auto& e : j) {
                std::vector<std::string> row;
                for (const auto& k : head) row.push_back(e.contains(k) ? csv_cell(e.at(k)) : "");
                out += csv_row(row);
            }
            return out;
        }
        for (const auto& e : j) {
            std::vector<std::string> row;
            if (e.is_array())
                for (const auto& c : e) row.push_back(csv_cell(c));
            else
                row.push_back(csv_cell(e));
            out += csv_row(row);
        }
        return out;
    }
    return csv_row({csv_cell(j)});
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

}  // namespace

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::resolve_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return fs::path(*flag);
    if (const char* env = std::getenv("KLRLAB_CACHE"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "klrlab";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "klrlab";
    return fs::temp_directory_path() / "klrlab-cache";
}

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / (hex64(fnv1a64(key)) + ".json"); }

std::optional<Json> ResultCache::load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    Json entry = Json::parse(in, nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || entry.value("key", "") != key || !entry.contains("payload") ||
        !entry.contains("hash"))
        return std::nullopt;
    const Json& payload = entry.at("payload");
    if (entry.at("hash") != hex64(fnv1a64(payload.dump()))) return std::nullopt;
    return payload;
}

void ResultCache::store(const std::string& key, const Json& payload) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;
    const Json entry{{"key", key}, {"hash", hex64(fnv1a64(payload.dump()))}, {"payload", payload}};
    std::random_device rd;
    const fs::path final_path = path_for(key);
    const fs::path tmp = final_path.string() + ".tmp" + hex64((std::uint64_t(rd()) << 32) | rd());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << entry.dump() << "\n";
        if (!out) {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, final_path, ec);
    if (ec) fs::remove(tmp, ec);
}

Json ResultCache::get_or_compute(const std::string& key, const std::function<Json()>& compute) const {
    if (auto hit = load(key)) return *hit;
    Json v = compute();
    store(key, v);
    return v;
}

}  // namespace klrlab
