// Command-line front end: algebra verification, single-point measurement,
// parameter sweeps, figure reproduction, and oracle comparison. Emits
// deterministic CSV (12 significant digits, byte-identical across runs).

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "ybcorr/cli_commands.hpp"

namespace {

using namespace ybcorr;

std::optional<Model> model_from_name(const std::string& name) {
    if (name == "h1") return Model::H1;
    if (name == "h2") return Model::H2;
    if (name == "h3") return Model::H3;
    return std::nullopt;
}

std::optional<StateFamily> state_from_name(const std::string& name) {
    if (name == "werner") return StateFamily::Werner;
    if (name == "xlike") return StateFamily::Xlike;
    return std::nullopt;
}

struct CommonFlags {
    std::string model = "h1";
    std::string state = "werner";
    std::string phi = "0.25pi";
    std::string theta = "0.5pi";
    double B = 1.0;
    double J = 1.0;
    double g = 0.5;
    int epsilon = +1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "Hamiltonian model")
            ->check(CLI::IsMember({"h1", "h2", "h3"}));
        cmd->add_option("--state", state, "input state family")
            ->check(CLI::IsMember({"werner", "xlike"}));
        cmd->add_option("--phi", phi, "phi angle (accepts 'pi' suffix, e.g. 0.25pi)");
        cmd->add_option("--theta", theta, "theta angle (default 0.5pi)");
        cmd->add_option("--B", B, "mean field B = (mu1+mu2)/2");
        cmd->add_option("--J", J, "field imbalance J = (mu1-mu2)/2");
        cmd->add_option("--g", g, "zz coupling");
        cmd->add_option("--epsilon", epsilon, "sign parameter of R3/H3")
            ->check(CLI::IsMember({+1, -1}));
    }

    SweepSpec spec() const {
        SweepSpec s;
        s.model = *model_from_name(model);
        s.state = *state_from_name(state);
        s.phi = parse_angle(phi);
        s.theta = parse_angle(theta);
        s.B = B;
        s.J = J;
        s.g = g;
        s.epsilon = epsilon;
        if (epsilon != +1 && s.model != Model::H3)
            std::cerr << "warning: --epsilon only enters h3/R3; ignored for "
                      << model << "\n";
        return s;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yang-Baxter two-qubit correlation dynamics"};
    app.require_subcommand(1);

    // verify-algebra
    auto* verify = app.add_subcommand(
        "verify-algebra", "check unitarity, Temperley-Lieb, Yang-Baxter and "
                          "Hamiltonian-consistency relations");
    double verify_tol = 0.0;
    int sites = 3;
    auto* tol_opt = verify->add_option("--tol", verify_tol, "override gated tolerances");
    verify->add_option("--sites", sites, "chain length for the TLA checks")
        ->check(CLI::IsMember({3, 4}));

    // measure
    auto* measure = app.add_subcommand("measure", "one CSV row for a single point");
    CommonFlags measure_flags;
    measure_flags.attach(measure);
    double point_p = 0.0, point_time = 0.0;
    measure->add_option("--p", point_p, "state parameter p")->required();
    measure->add_option("--time", point_time, "scaled time (Bt for h1/h3, Jt for h2)")
        ->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid sweep written as CSV");
    CommonFlags sweep_flags;
    sweep_flags.attach(sweep);
    std::string p_grid_text, time_grid_text, sweep_out;
    sweep->add_option("--p-grid", p_grid_text, "p grid as min:max:count")->required();
    sweep->add_option("--time-grid", time_grid_text, "scaled-time grid as min:max:count")
        ->required();
    sweep->add_option("--out", sweep_out, "output path (default: stdout)");

    // figures
    auto* figures = app.add_subcommand("figures", "emit a preset figure grid");
    std::string which, figures_out;
    figures->add_option("--which", which, "fig1 | fig2 | fig3 | fig4")->required();
    figures->add_option("--out", figures_out, "output path (default: stdout)");

    // compare
    auto* compare = app.add_subcommand(
        "compare", "numeric vs closed-form comparison (h3: equality with h1)");
    CommonFlags compare_flags;
    compare_flags.attach(compare);
    double compare_tol = 1e-9;
    compare->add_option("--tol", compare_tol, "pass tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ybcorr::kExitUsage;
    }

    try {
        if (verify->parsed()) {
            VerifyOptions opts;
            if (*tol_opt) opts.tol = verify_tol;
            opts.sites = sites;
            return cmd_verify_algebra(opts, std::cout);
        }
        if (measure->parsed()) {
            SweepSpec spec = measure_flags.spec();
            spec.p_grid = {point_p};
            spec.time_grid = {point_time};
            return cmd_measure(spec, std::cout);
        }
        if (sweep->parsed()) {
            SweepSpec spec = sweep_flags.spec();
            spec.p_grid = parse_grid(p_grid_text);
            spec.time_grid = parse_grid(time_grid_text);
            return cmd_sweep(spec, sweep_out, std::cout, std::cerr);
        }
        if (figures->parsed()) {
            const auto fig = figure_from_name(which);
            if (!fig) {
                std::cerr << "unknown figure id '" << which << "'\n";
                return kExitUsage;
            }
            return cmd_figures(*fig, figures_out, std::cout, std::cerr);
        }
        if (compare->parsed()) {
            const SweepSpec spec = compare_flags.spec();
            return cmd_compare(spec.model, spec.state, compare_tol, std::cout);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ZeroScaleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
