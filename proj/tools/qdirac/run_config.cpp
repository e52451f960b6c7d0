#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace qdirac::cli {

DiracConfig RunConfig::dirac() const {
    DiracConfig d;
    d.q = q;
    d.twist = twist;
    d.alpha = alpha;
    d.c = c;
    d.gamma = gamma;
    d.shift = shift;
    d.K = K;
    d.M = M;
    return d;
}

void RunConfig::validate() const {
    try {
        dirac().validate();
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    if (margin < 0 || margin >= K) throw ConfigError("margin must satisfy 0 <= margin < K");
    if (format != "json" && format != "csv") throw ConfigError("format must be json or csv, got '" + format + "'");
    static const char* suites[] = {"algebra", "calculus", "adjoints", "dirac", "all"};
    if (std::find(std::begin(suites), std::end(suites), suite) == std::end(suites))
        throw ConfigError("suite must be one of algebra, calculus, adjoints, dirac, all; got '" + suite + "'");
    if (reading != "collapsed" && reading != "two_sided" && reading != "both")
        throw ConfigError("reading must be collapsed, two_sided or both; got '" + reading + "'");
    if (pairs < 1 || leibniz_pairs < 1 || random_words < 0) throw ConfigError("pair and word counts must be positive");
    if (count && *count < 0) throw ConfigError("count must be non-negative");
    if (delta_step < 0) throw ConfigError("delta_step must be non-negative");
    if (dimension_cap < 1) throw ConfigError("dimension_cap must be positive");
    for (int k : sweep)
        if (k < 1) throw ConfigError("sweep sizes must be positive");
}

namespace {

using json = nlohmann::json;

template <typename T>
T get(const json& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config key '" + key + "' has the wrong type");
    }
}

double get_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

int get_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
    return get<int>(v, key);
}

std::string get_string(const json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
    return v.get<std::string>();
}

void merge(const json& doc, RunConfig& c) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    using Setter = std::function<void(const json&, const std::string&)>;
    const std::map<std::string, Setter> setters = {
        {"q", [&](const json& v, const std::string& k) { c.q = get_number(v, k); }},
        {"twist", [&](const json& v, const std::string& k) { c.twist = get_int(v, k); }},
        {"alpha", [&](const json& v, const std::string& k) { c.alpha = get_number(v, k); }},
        {"c", [&](const json& v, const std::string& k) { c.c = get_number(v, k); }},
        {"gamma", [&](const json& v, const std::string& k) { c.gamma = get_number(v, k); }},
        {"shift", [&](const json& v, const std::string& k) { c.shift = get_number(v, k); }},
        {"K", [&](const json& v, const std::string& k) { c.K = get_int(v, k); }},
        {"M", [&](const json& v, const std::string& k) { c.M = get_int(v, k); }},
        {"margin", [&](const json& v, const std::string& k) { c.margin = get_int(v, k); }},
        {"seed",
         [&](const json& v, const std::string& k) {
             if (!v.is_number_unsigned()) throw ConfigError("config key '" + k + "' must be a non-negative integer");
             c.seed = v.get<std::uint64_t>();
         }},
        {"out", [&](const json& v, const std::string& k) { c.out = get_string(v, k); }},
        {"format", [&](const json& v, const std::string& k) { c.format = get_string(v, k); }},
        {"suite", [&](const json& v, const std::string& k) { c.suite = get_string(v, k); }},
        {"pairs", [&](const json& v, const std::string& k) { c.pairs = get_int(v, k); }},
        {"leibniz_pairs", [&](const json& v, const std::string& k) { c.leibniz_pairs = get_int(v, k); }},
        {"random_words", [&](const json& v, const std::string& k) { c.random_words = get_int(v, k); }},
        {"grade", [&](const json& v, const std::string& k) { c.grade = get_int(v, k); }},
        {"count", [&](const json& v, const std::string& k) { c.count = get_int(v, k); }},
        {"delta_step", [&](const json& v, const std::string& k) { c.delta_step = get_int(v, k); }},
        {"dimension_cap", [&](const json& v, const std::string& k) { c.dimension_cap = get_int(v, k); }},
        {"phi", [&](const json& v, const std::string& k) { c.phi = get_string(v, k); }},
        {"reading", [&](const json& v, const std::string& k) { c.reading = get_string(v, k); }},
        {"sweep",
         [&](const json& v, const std::string& k) {
             if (!v.is_array()) throw ConfigError("config key '" + k + "' must be an array of integers");
             c.sweep.clear();
             for (const auto& e : v) c.sweep.push_back(get_int(e, k));
         }},
    };
    for (const auto& [key, value] : doc.items()) {
        auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
        it->second(value, key);
    }
}

}  // namespace

void merge_json_text(const std::string& text, RunConfig& config) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    merge(doc, config);
}

void merge_json_file(const std::string& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    merge_json_text(buf.str(), config);
}

std::vector<int> parse_sweep(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        int v = 0;
        const auto res = std::from_chars(text.data() + start, text.data() + end, v);
        if (start == end || res.ec != std::errc() || res.ptr != text.data() + end)
            throw ConfigError("sweep must be a comma-separated list of integers, got '" + text + "'");
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

}  // namespace qdirac::cli
