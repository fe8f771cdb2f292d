#include "bbsp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "bbsp/resources.hpp"
#include "bbsp/spec_io.hpp"

namespace bbsp {

namespace {

struct RunConfig {
    std::string problem = "linear";
    std::optional<int> bits;
    std::string backend = "functional";
    std::string rounds = "auto";
    std::optional<double> eps;
    std::uint64_t seed = 1;
    std::string input;
    std::string output;
    std::string counting = "paper";
    int dim = 4;
    int min_bits = 4;
};

Form form_for(Problem p) {
    switch (p) {
        case Problem::linear:
        case Problem::root: return Form::real;
        case Problem::polar_linear:
        case Problem::polar_root: return Form::polar;
        default: return Form::cartesian;
    }
}

PrepOptions options_from(const RunConfig& c, Problem problem) {
    PrepOptions o;
    o.backend = parse_backend(c.backend);
    o.counting = parse_counting_mode(c.counting);
    if (c.rounds != "auto") {
        std::size_t used = 0;
        int k = -1;
        try {
            k = std::stoi(c.rounds, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != c.rounds.size() || k < 0) throw ArgumentError("--rounds takes 'auto' or a non-negative integer");
        o.rounds = k;
    }
    if (uses_unif_inverse(problem) != c.eps.has_value())
        throw ArgumentError(c.eps ? "--eps applies only to root and polar-root" : "--eps is required for this problem");
    if (c.eps) {
        if (!(*c.eps > 0.0 && *c.eps < 1.0)) throw ArgumentError("--eps must lie in (0, 1)");
        o.eps = *c.eps;
    }
    return o;
}

AmplitudeSpec spec_from(const RunConfig& c, Problem problem, int n_default) {
    AmplitudeSpec spec = c.input.empty() ? random_spec(c.dim, c.bits.value_or(n_default), form_for(problem), c.seed)
                                         : load_spec(c.input);
    if (c.bits) spec.n = *c.bits;
    if (spec.form != form_for(problem))
        throw ArgumentError("spec form '" + to_string(spec.form) + "' does not fit problem '" + to_string(problem) + "'");
    validate_spec(spec);
    return spec;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw ArgumentError("cannot write '" + c.output + "'");
    f << text;
}

std::string cmd_prepare(const RunConfig& c) {
    const Problem problem = parse_problem(c.problem);
    PrepOptions o = options_from(c, problem);
    AmplitudeSpec spec = spec_from(c, problem, 4);
    PrepResult r = prepare(spec, problem, o);
    return to_json(r, spec.n, spec.d).dump(2) + "\n";
}

std::string cmd_table() {
    std::ostringstream s;
    s << "n,comp_toffolis,arcsine_toffolis,factor\n";
    for (const ImprovementRow& row : improvement_table())
        s << row.n << ',' << row.comp_toffolis << ',' << row.arcsine_toffolis << ',' << row.factor << '\n';
    return s.str();
}

std::string cmd_sweep(const RunConfig& c) {
    const Problem problem = parse_problem(c.problem);
    PrepOptions o = options_from(c, problem);
    const int hi = c.bits.value_or(10);
    if (c.min_bits < 1 || c.min_bits > hi) throw ArgumentError("--min-bits must lie in [1, --bits]");
    AmplitudeSpec spec = spec_from(c, problem, hi);
    std::ostringstream s;
    s << "n,infidelity\n";
    for (int n = c.min_bits; n <= hi; ++n) {
        spec.n = n;
        PrepResult r = prepare(spec, problem, o);
        const double f = state_fidelity(r.output.head(spec.d), exact_target(spec, problem));
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", std::max(0.0, 1.0 - f));
        s << n << ',' << buf << '\n';
    }
    return s.str();
}

int fail(std::ostream& err, const char* kind, const std::string& what, int code) {
    std::string msg = what;
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error:" << kind << ": " << msg << '\n';
    return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"black-box state preparation simulator"};
    app.require_subcommand(1);
    auto add_common = [&c](CLI::App* sub) {
        sub->add_option("--problem", c.problem, "linear|root|polar-linear|polar-root|cartesian-linear|cartesian-root");
        sub->add_option("--bits", c.bits, "precision bits n");
        sub->add_option("--backend", c.backend, "functional|circuit|cdkm");
        sub->add_option("--rounds", c.rounds, "auto or an integer");
        sub->add_option("--eps", c.eps, "unif inverse error (root problems)");
        sub->add_option("--seed", c.seed, "seed for random specs");
        sub->add_option("--input", c.input, "spec JSON");
        sub->add_option("--output", c.output, "output file");
        sub->add_option("--counting", c.counting, "paper|full");
        sub->add_option("--dim", c.dim, "label count d of random specs");
    };
    CLI::App* prepare_cmd = app.add_subcommand("prepare", "run one preparation and print the result JSON");
    add_common(prepare_cmd);
    CLI::App* table_cmd = app.add_subcommand("table", "print the comparator vs arcsine Toffoli table");
    table_cmd->add_option("--output", c.output, "output file");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "infidelity vs unquantized target over n");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--min-bits", c.min_bits, "first n of the sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return fail(err, "usage", e.what(), 2);
    }

    try {
        std::string text;
        if (*prepare_cmd)
            text = cmd_prepare(c);
        else if (*table_cmd)
            text = cmd_table();
        else
            text = cmd_sweep(c);
        emit(c, text, out);
        return 0;
    } catch (const DegenerateError& e) {
        return fail(err, "degenerate", e.what(), 3);
    } catch (const ContractError& e) {
        return fail(err, "contract", e.what(), 4);
    } catch (const EntanglementError& e) {
        return fail(err, "contract", e.what(), 4);
    } catch (const ResourceError& e) {
        return fail(err, "usage", e.what(), 2);
    } catch (const ArgumentError& e) {
        return fail(err, "usage", e.what(), 2);
    }
}

}  // namespace bbsp
