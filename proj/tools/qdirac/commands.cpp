#include "commands.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "expr.hpp"
#include "qdirac/gamma1.hpp"
#include "qdirac/spectrum.hpp"
#include "suites.hpp"

namespace qdirac::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : ""; }

ojson header(const RunConfig& c) {
    const DiracConfig d = c.dirac();
    ojson j;
    j["q"] = c.q;
    j["twist"] = c.twist;
    j["alpha"] = d.alpha_value();
    j["K"] = c.K;
    j["M"] = c.M;
    return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandResult cmd_verify(const RunConfig& config) {
    const std::vector<Check> checks = run_suite(config.suite, config);
    CommandResult r;
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    r.exit_code = pass ? kPass : kCheckFailed;
    if (config.format == "csv") {
        std::ostringstream s;
        s << "name,max_residual,threshold,pass\n";
        for (const auto& c : checks)
            s << c.name << ',' << csv_number(c.max_residual) << ',' << format_double(c.threshold) << ','
              << (c.pass ? "true" : "false") << '\n';
        r.report = s.str();
    } else {
        ojson j;
        j["suite"] = config.suite;
        const ojson h = header(config);
        for (const auto& [k, v] : h.items()) j[k] = v;
        j["checks"] = ojson::array();
        for (const auto& c : checks)
            j["checks"].push_back(
                {{"name", c.name}, {"max_residual", number(c.max_residual)}, {"threshold", c.threshold}, {"pass", c.pass}});
        r.report = dump(j);
    }
    for (const auto& c : checks)
        if (!c.pass) r.diagnostics += "FAILED " + c.name + ": residual " + format_double(c.max_residual) + "\n";
    return r;
}

CommandResult cmd_spectrum(const RunConfig& config) {
    SpectrumOptions options;
    options.grade = config.grade;
    options.count = config.count;
    options.delta_step = config.delta_step;
    options.dimension_cap = config.dimension_cap;
    const SpectrumReport rep = spectrum(config.dirac(), options);
    CommandResult r;
    if (config.format == "csv") {
        std::ostringstream s;
        s << "grade,index,eigenvalue,delta_K\n";
        for (const auto& e : rep.values)
            s << e.grade << ',' << e.index << ',' << format_double(e.value) << ',' << csv_number(e.delta_K) << '\n';
        r.report = s.str();
    } else {
        ojson j = header(config);
        j["c"] = config.c;
        j["shift"] = config.shift;
        j["delta_step"] = config.delta_step;
        j["max_abs_imag"] = rep.max_abs_imag;
        j["hermiticity_defect"] = rep.hermiticity_defect;
        j["eigenvalues"] = ojson::array();
        for (const auto& e : rep.values)
            j["eigenvalues"].push_back(
                {{"grade", e.grade}, {"index", e.index}, {"eigenvalue", e.value}, {"delta_K", number(e.delta_K)}});
        r.report = dump(j);
    }
    return r;
}

CommandResult cmd_commutator(const RunConfig& config) {
    const Expr e = parse(config.phi);
    const SU2Builder phi = compile(e);
    const std::vector<int> sweep = config.sweep.empty() ? std::vector<int>{config.K} : config.sweep;
    const Gamma1Report rep = gamma1_report(config.dirac(), phi, sweep, config.margin);

    CommandResult r;
    bool pass = true;
    for (const auto& o : rep.oracle) pass = pass && o.relative() <= kOperatorTolerance;
    r.exit_code = pass ? kPass : kCheckFailed;
    auto wanted = [&](Reading reading) { return config.reading == "both" || config.reading == name(reading); };

    if (config.format == "csv") {
        std::ostringstream s;
        s << "series,reading,K,norm\n";
        for (const auto& ser : rep.series) {
            if (!wanted(ser.reading)) continue;
            for (std::size_t i = 0; i < sweep.size(); ++i)
                s << ser.name << ',' << name(ser.reading) << ',' << sweep[i] << ',' << csv_number(ser.norms[i]) << '\n';
        }
        for (std::size_t i = 0; i < sweep.size(); ++i)
            s << "oracle_residual,two_sided," << sweep[i] << ',' << csv_number(rep.oracle[i].relative()) << '\n';
        r.report = s.str();
    } else {
        ojson j = header(config);
        j.erase("K");
        j["phi"] = print(e);
        j["reading"] = config.reading;
        j["sweep"] = sweep;
        j["series"] = ojson::array();
        for (const auto& ser : rep.series) {
            if (!wanted(ser.reading)) continue;
            ojson norms = ojson::array();
            for (double v : ser.norms) norms.push_back(number(v));
            j["series"].push_back({{"name", ser.name},
                                   {"reading", name(ser.reading)},
                                   {"norms", norms},
                                   {"growth_exponent", ser.fit.slope},
                                   {"growth", name(ser.fit.growth)}});
        }
        j["oracle"] = ojson::array();
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            const double res = rep.oracle[i].relative();
            j["oracle"].push_back({{"K", sweep[i]},
                                   {"max_residual", number(res)},
                                   {"threshold", kOperatorTolerance},
                                   {"pass", res <= kOperatorTolerance}});
        }
        r.report = dump(j);
    }
    if (!pass) r.diagnostics = "FAILED commutator oracle exceeds " + format_double(kOperatorTolerance) + "\n";
    return r;
}

CommandResult cmd_symbol(const RunConfig& config) {
    const Expr e = parse(config.phi);
    const SU2Element x = compile(e)(DiscGrid(config.q, config.K));
    CommandResult r;
    struct Row {
        int circle_mode;
        int symbol_mode;
        cplx value;
    };
    std::vector<Row> rows;
    for (const auto& [m, part] : x.parts()) {
        const CircleElement sym = symbol(part);
        for (const auto& [n, v] : sym.modes()) rows.push_back({m, n, v});
    }
    if (config.format == "csv") {
        std::ostringstream s;
        s << "circle_mode,symbol_mode,re,im\n";
        for (const auto& row : rows)
            s << row.circle_mode << ',' << row.symbol_mode << ',' << format_double(row.value.real()) << ','
              << format_double(row.value.imag()) << '\n';
        r.report = s.str();
    } else {
        ojson j;
        j["phi"] = print(e);
        j["q"] = config.q;
        j["terms"] = ojson::array();
        for (const auto& row : rows)
            j["terms"].push_back({{"circle_mode", row.circle_mode},
                                  {"symbol_mode", row.symbol_mode},
                                  {"re", row.value.real()},
                                  {"im", row.value.imag()}});
        r.report = dump(j);
    }
    return r;
}

CommandResult run_command(const std::string& command, const RunConfig& config) {
    CommandResult r;
    try {
        config.validate();
        if (command == "verify") return cmd_verify(config);
        if (command == "spectrum") return cmd_spectrum(config);
        if (command == "commutator") return cmd_commutator(config);
        if (command == "symbol") return cmd_symbol(config);
        throw ConfigError("unknown command '" + command + "'");
    } catch (const ConfigError& e) {
        r.exit_code = kConfigError;
        r.diagnostics = std::string("config error: ") + e.what() + "\n";
    } catch (const ParseError& e) {
        r.exit_code = kConfigError;
        r.diagnostics = std::string("phi: ") + e.what() + "\n";
    } catch (const ParameterError& e) {
        r.exit_code = kConfigError;
        r.diagnostics = std::string("parameter error: ") + e.what() + "\n";
    } catch (const SizeError& e) {
        r.exit_code = kSizeCap;
        r.diagnostics = std::string("size cap: ") + e.what() + " (use --grade, smaller --K/--M, or --dimension-cap)\n";
    } catch (const DomainError& e) {
        r.exit_code = kDomainError;
        r.diagnostics = "domain error in " + e.operation() + ": " + e.what() + "\n";
    } catch (const UnboundedSymbolError& e) {
        r.exit_code = kDomainError;
        r.diagnostics = std::string("domain error: ") + e.what() + "\n";
    } catch (const DivergenceError& e) {
        r.exit_code = kDomainError;
        r.diagnostics = std::string("domain error: ") + e.what() + "\n";
    }
    return r;
}

}  // namespace qdirac::cli
