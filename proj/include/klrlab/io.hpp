#pragma once

#include "klrlab/cyclo.hpp"
#include "klrlab/uqmod.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace klrlab {

using Json = nlohmann::ordered_json;

// Malformed user input; the CLI maps it to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json to_json(const BigInt& c);
BigInt bigint_from_json(const Json& j);
// Integers as numbers, other rationals as "p/q".
Json to_json(const mpq_class& c);

// [[exp, coeff], ...] ascending by exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json to_json(const LaurentFrac& f);  // {"num": laurent, "den": laurent}

Json to_json(const Partition& p);
Json to_json(const GTPattern& s);

// {"rank", "bottom", "ops": [{"kind": "dot"|"cross", "pos"}]}
Json to_json(int rank, const KLRWord& w);
KLRWord word_from_json(const Json& j, int* rank = nullptr);
// {"rank", "terms": [{"coeff", "word"}]}
Json to_json(const KLRElement& x);
KLRElement element_from_json(const Json& j);
Json to_json(const QElement& x);

Json gram_json(const Partition& lambda, const ShapovalovGram& g);
// {"lambda", "left", "right", "gdim", "status", "qshift"}
Json cyc_record(const Partition& lambda, const StrandSeq& left, const StrandSeq& right, const GdimResult& g,
                int qshift = 0);
Json to_json(const ShapovalovComparison& c);

// Comma-separated nonnegative integers; trailing zeros are kept.
std::vector<int> parse_int_list(const std::string& text, bool allow_empty = false);
Partition parse_partition(const std::string& text);
// Ops written as "c1,d2,...": c for a crossing, d for a dot, then the position.
std::vector<Gen> parse_ops(const std::string& text);

// Flattens a JSON document into CSV. Arrays become one row per element,
// objects one row keyed by their fields; nested values are written as JSON.
std::string to_csv(const Json& j);

std::uint64_t fnv1a64(const std::string& s);

// Content-addressed result store. Each entry records its key and a hash of the
// payload; entries that fail either check are treated as missing.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    // --cache-dir, then KLRLAB_CACHE, then $XDG_CACHE_HOME/klrlab or ~/.cache/klrlab.
    static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

    std::optional<Json> load(const std::string& key) const;
    void store(const std::string& key, const Json& payload) const;
    std::filesystem::path path_for(const std::string& key) const;
    const std::filesystem::path& dir() const { return dir_; }

    Json get_or_compute(const std::string& key, const std::function<Json()>& compute) const;

private:
    std::filesystem::path dir_;
};

}  // namespace klrlab
