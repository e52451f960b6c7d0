#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace qdirac::cli;

int main(int argc, char** argv) {
    CLI::App app{"Twisted Dirac operators on quantum SU(2): verification suites, spectra and commutator sweeps"};
    app.require_subcommand(1);

    std::string config_file;
    std::optional<double> q, c, gamma, alpha, shift;
    std::optional<int> twist, K, M, margin, grade, count, pairs, delta_step;
    std::optional<std::uint64_t> seed;
    std::optional<long> cap;
    std::optional<std::string> out, format, suite, phi, reading, sweep;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_file, "JSON config file; flags override it");
        sub->add_option("--q", q, "deformation parameter in (0, 1)");
        sub->add_option("--twist", twist, "1 (sigma^1, alpha = 2) or 2 (sigma^2, alpha = 1)");
        sub->add_option("--alpha", alpha, "measure exponent; must match the twist");
        sub->add_option("--c", c, "rescaling of E and F");
        sub->add_option("--gamma", gamma, "gamma_q of twist 2");
        sub->add_option("--shift", shift, "constant subtracted on both diagonal blocks (0 drops it)");
        sub->add_option("--K", K, "disc truncation");
        sub->add_option("--M", M, "circle mode cutoff");
        sub->add_option("--margin", margin, "interior margin for identity checks");
        sub->add_option("--seed", seed, "seed of the random suites");
        sub->add_option("--out", out, "write the report here instead of stdout");
        sub->add_option("--format", format, "json or csv");
    };

    CLI::App* verify = app.add_subcommand("verify", "run identity suites");
    common(verify);
    verify->add_option("suite,--suite", suite, "algebra, calculus, adjoints, dirac or all");
    verify->add_option("--pairs", pairs, "random pairs per adjoint identity");

    CLI::App* spectrum = app.add_subcommand("spectrum", "per-grade eigenvalues of the symmetrized truncation");
    common(spectrum);
    spectrum->add_option("--grade", grade, "single grade (j - k) - m");
    spectrum->add_option("--count", count, "eigenvalues of smallest magnitude per grade");
    spectrum->add_option("--delta-step", delta_step, "compare with K + step (0 disables)");
    spectrum->add_option("--dimension-cap", cap, "largest dense block");

    CLI::App* commutator = app.add_subcommand("commutator", "norm sweep of [D, pi(phi)] and H, E, F of phi");
    common(commutator);
    commutator->add_option("--phi", phi, "algebra expression, e.g. \"a\" or \"a* c + 0.5 u\"");
    commutator->add_option("--reading", reading, "collapsed, two_sided or both");
    commutator->add_option("--sweep", sweep, "comma-separated K values");

    CLI::App* symbol = app.add_subcommand("symbol", "boundary symbol of an expression");
    common(symbol);
    symbol->add_option("--phi", phi, "algebra expression");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kConfigError;
    }

    RunConfig config;
    CommandResult result;
    try {
        if (!config_file.empty()) merge_json_file(config_file, config);
        if (q) config.q = *q;
        if (twist) config.twist = *twist;
        if (alpha) config.alpha = *alpha;
        if (c) config.c = *c;
        if (gamma) config.gamma = *gamma;
        if (shift) config.shift = *shift;
        if (K) config.K = *K;
        if (M) config.M = *M;
        if (margin) config.margin = *margin;
        if (seed) config.seed = *seed;
        if (out) config.out = *out;
        if (format) config.format = *format;
        if (suite) config.suite = *suite;
        if (pairs) config.pairs = *pairs;
        if (grade) config.grade = *grade;
        if (count) config.count = *count;
        if (delta_step) config.delta_step = *delta_step;
        if (cap) config.dimension_cap = *cap;
        if (phi) config.phi = *phi;
        if (reading) config.reading = *reading;
        if (sweep) config.sweep = parse_sweep(*sweep);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    result = run_command(command, config);
    std::cerr << result.diagnostics;
    if (!result.report.empty()) {
        if (config.out.empty()) {
            std::cout << result.report;
        } else {
            std::ofstream f(config.out, std::ios::binary);
            if (!f) {
                std::cerr << "cannot write " << config.out << "\n";
                return kConfigError;
            }
            f << result.report;
        }
    }
    return result.exit_code;
}
