#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "motsq/diff.hpp"
#include "motsq/ext.hpp"

namespace motsq {

inline constexpr int kChartSchemaVersion = 1;
inline constexpr const char* kCacheDirEnv = "MOTSQ_CACHE_DIR";

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    Range range;
    int generator_cap = 6;
    std::string cache_dir;
    int threads = 1;
    std::string out;
    std::uint64_t max_basis = 20000;
    std::uint64_t sparse_threshold = 8192;
    bool min_p_explicit = false;   // otherwise min_p follows min(0, min_q)

    void set(const std::string& key, const std::string& value);   // throws ConfigError
    void validate() const;                                         // throws ConfigError
    // key=value lines, '#' comments.
    static Config parse(const std::string& text, Config base);
    static Config load(const std::string& path, Config base);
    static Config parse(const std::string& text);
    static Config load(const std::string& path);
    std::string to_string() const;
    bool operator==(const Config&) const = default;
};

struct ChartGroup {
    TriDegree t;
    std::size_t dim = 0;
    std::size_t basis_size = 0;
    bool skipped = false;
    std::string reason;
    bool operator==(const ChartGroup&) const = default;
};

struct ChartProduct {
    std::string left, right;
    TriDegree t;
    std::string result;   // "0" or a sum of class keys
    bool operator==(const ChartProduct&) const = default;
};

struct ChartOperation {
    std::string op;       // "sq^i"
    std::string input;
    TriDegree t;
    std::string result;
    bool operator==(const ChartOperation&) const = default;
};

struct ChartDifferential {
    std::string statement;
    std::string source;
    TriDegree source_t;
    std::string coefficient;
    std::string target;
    TriDegree target_t;
    std::string verdict;   // "zero", "nonzero" or "unevaluated"
    std::string value;     // class keys when evaluated
    std::vector<std::string> facts;
    std::vector<std::string> assumptions;
    bool operator==(const ChartDifferential&) const = default;
};

struct Chart {
    int schema_version = kChartSchemaVersion;
    Config config;
    std::vector<ChartGroup> groups;               // nonzero or skipped groups, sorted
    std::map<std::string, std::string> classes;   // "s.p.q.i" -> alias ("" when none)
    std::map<std::string, std::string> names;     // generator name -> sum of class keys
    std::vector<ChartProduct> products;
    std::vector<ChartOperation> operations;
    std::vector<ChartDifferential> differentials;

    nlohmann::json to_json() const;
    static Chart from_json(const nlohmann::json& j);   // throws std::runtime_error
    std::string dump() const;
    static Chart load(const std::string& path);
    void validate() const;   // every referenced class exists
    bool operator==(const Chart&) const = default;
};

std::string class_key(TriDegree t, std::size_t i);
std::string class_keys(const ExtClass& x);   // "0" or "k1 + k2"

struct ResolveOptions {
    std::vector<std::string> d2_sources{"h1", "h2", "h3"};
    PermanenceRegistry permanence;
};

// Engine over the config's range, cache directory and basis limit.
ExtEngine engine_for(const Config& config, BasisOrder order = BasisOrder::Natural);

Chart resolve(ExtEngine& engine, const Config& config, const ResolveOptions& options = {});

// Dots at (p - s, s); d2 arrows drawn from source to target. weight filters by q when set.
std::string chart_svg(const Chart& chart, std::optional<int> weight = std::nullopt);

}  // namespace motsq
