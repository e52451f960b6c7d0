#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdirac/dirac.hpp"
#include "qdirac/errors.hpp"

namespace qdirac::cli {

/// Exit codes of the qdirac tool.
enum Exit : int { kPass = 0, kCheckFailed = 1, kConfigError = 2, kSizeCap = 3, kDomainError = 4 };

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Settings shared by all commands. A JSON config file uses the same keys;
/// command-line flags override it.
struct RunConfig {
    double q = 0.5;
    int twist = 1;
    std::optional<double> alpha;
    double c = 1.0;
    std::optional<double> gamma;
    double shift = 2.0;
    int K = 16;
    int M = 4;
    int margin = 4;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";

    // verify
    std::string suite = "all";
    int pairs = 100;
    int leibniz_pairs = 200;
    int random_words = 20;
    // spectrum
    std::optional<int> grade;
    std::optional<int> count;
    int delta_step = 8;
    long dimension_cap = 6000;
    // commutator, symbol
    std::string phi = "a";
    std::string reading = "both";
    std::vector<int> sweep;

    DiracConfig dirac() const;
    /// Throws ConfigError with a message naming the offending key.
    void validate() const;
};

/// Reads keys from a JSON object into `config`. Unknown keys and wrong types are errors.
void merge_json_file(const std::string& path, RunConfig& config);
void merge_json_text(const std::string& text, RunConfig& config);

/// Parses "16,32,64".
std::vector<int> parse_sweep(const std::string& text);

}  // namespace qdirac::cli
