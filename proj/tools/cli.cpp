#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "specvar/report.hpp"

namespace specvar::cli {

namespace {

std::vector<Rational> parse_weight_list(const std::string& csv) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw BadParams("empty weight list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw BadParams("empty integer list");
    return out;
}

void emit(const std::string& payload, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw BadParams("cannot open output file '" + out_file + "'");
    f << payload;
}

frob::MetricKind parse_metric(const std::string& name) {
    return name == "test" ? frob::MetricKind::test_metric : frob::MetricKind::flat_potential;
}

std::vector<frob::CheckResult> run_checks(const frob::FrobeniusModel& model,
                                          const std::string& which, unsigned seed) {
    if (which == "axioms") return frob::axiom_checks(model, seed);
    if (which == "socle") return frob::socle_checks(model, seed);
    if (which == "tau") return frob::tau_checks(model);
    if (which == "residue") return frob::residue_checks(model);
    if (which == "euler") return frob::euler_checks(model);
    return frob::all_checks(model, seed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"singularity spectra, variance identity, and Frobenius model checks"};
    app.name("specvar");
    app.require_subcommand(1);
    app.fallthrough();  // --csv/--out may follow the subcommand

    std::string out_file;
    bool csv = false;
    app.add_option("--out", out_file, "write the report to a file instead of stdout");
    app.add_flag("--csv", csv, "emit CSV instead of JSON");

    auto* cmd_spectrum = app.add_subcommand("spectrum", "spectrum and variance-identity report");
    std::string weights_arg;
    cmd_spectrum->add_option("--weights", weights_arg, "comma-separated weights, e.g. 1/3,1/5")
        ->required();

    auto* cmd_bp = app.add_subcommand("bp", "Brieskorn-Pham spectrum from exponents");
    std::string exponents_arg;
    cmd_bp->add_option("--exponents", exponents_arg, "comma-separated exponents, e.g. 3,5")
        ->required();

    auto* cmd_join = app.add_subcommand("join", "Thom-Sebastiani join of two weight spectra");
    std::string left_arg, right_arg;
    cmd_join->add_option("--left", left_arg, "weights of the first singularity")->required();
    cmd_join->add_option("--right", right_arg, "weights of the second singularity")->required();

    auto* cmd_families = app.add_subcommand("families", "closed-form gamma of a family member");
    std::string tpqr_arg, series_arg;
    int series_p = 1;
    cmd_families->add_option("--tpqr", tpqr_arg, "cusp parameters p,q,r");
    cmd_families->add_option("--series", series_arg,
                             "bimodal series (E3p Z1p Q2p W1p S1p W1p# S1p# U1p)");
    cmd_families->add_option("--p", series_p, "bimodal series parameter (>= 1)");

    auto* cmd_scan = app.add_subcommand("scan", "gamma >= 0 sweep over a family");
    std::string scan_family;
    int scan_max = 12;
    int scan_pmax = 100;
    cmd_scan->add_option("--family", scan_family, "tpqr or bimodal")
        ->required()
        ->check(CLI::IsMember({"tpqr", "bimodal"}));
    cmd_scan->add_option("--max", scan_max, "tpqr: scan 2 <= p <= q <= r <= max");
    cmd_scan->add_option("--pmax", scan_pmax, "bimodal: scan 1 <= p <= pmax");

    auto* cmd_frob = app.add_subcommand("frobenius", "I_2(n) x A_1^(m-2) model checks");
    int frob_n = 3, frob_m = 2;
    std::string frob_metric = "flat";
    std::string frob_check = "all";
    unsigned frob_seed = 1234;
    std::optional<double> tol_override;
    cmd_frob->add_option("--n", frob_n, "I_2(n) parameter (>= 2)")->required();
    cmd_frob->add_option("--m", frob_m, "manifold dimension (>= 2)")->required();
    cmd_frob->add_option("--metric", frob_metric, "test or flat")
        ->check(CLI::IsMember({"test", "flat"}));
    cmd_frob->add_option("--check", frob_check, "axioms, socle, tau, residue, euler, or all")
        ->check(CLI::IsMember({"axioms", "socle", "tau", "residue", "euler", "all"}));
    cmd_frob->add_option("--seed", frob_seed, "seed for sampled points");
    cmd_frob->add_option("--tol", tol_override,
                         "override the tolerance of every inexact check");

    std::vector<const char*> argv;
    argv.push_back("specvar");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        std::string payload;
        if (app.got_subcommand(cmd_spectrum)) {
            const WeightSystem w(parse_weight_list(weights_arg));
            payload = csv ? report::spectrum_csv(w) : report::spectrum_json(w);
        } else if (app.got_subcommand(cmd_bp)) {
            const auto exponents = parse_int_list(exponents_arg);
            payload = csv ? report::bp_csv(exponents) : report::bp_json(exponents);
        } else if (app.got_subcommand(cmd_join)) {
            const WeightSystem left(parse_weight_list(left_arg));
            const WeightSystem right(parse_weight_list(right_arg));
            payload = csv ? report::join_csv(left, right) : report::join_json(left, right);
        } else if (app.got_subcommand(cmd_families)) {
            if (!tpqr_arg.empty() == !series_arg.empty())
                throw BadParams("families needs exactly one of --tpqr or --series");
            if (!tpqr_arg.empty()) {
                const auto pqr = parse_int_list(tpqr_arg);
                if (pqr.size() != 3) throw BadParams("--tpqr needs exactly three parameters");
                payload = csv ? report::tpqr_csv(pqr[0], pqr[1], pqr[2])
                              : report::tpqr_json(pqr[0], pqr[1], pqr[2]);
            } else {
                const auto series = parse_bimodal_series(series_arg);
                if (!series) throw BadParams("unknown bimodal series '" + series_arg + "'");
                payload = csv ? report::bimodal_csv(*series, series_p)
                              : report::bimodal_json(*series, series_p);
            }
        } else if (app.got_subcommand(cmd_scan)) {
            if (scan_family == "tpqr")
                payload = csv ? report::scan_tpqr_csv(scan_max) : report::scan_tpqr_json(scan_max);
            else
                payload = csv ? report::scan_bimodal_csv(scan_pmax)
                              : report::scan_bimodal_json(scan_pmax);
        } else if (app.got_subcommand(cmd_frob)) {
            const frob::FrobeniusModel model(frob_n, frob_m, parse_metric(frob_metric));
            auto checks = run_checks(model, frob_check, frob_seed);
            if (tol_override) {
                for (auto& c : checks) {
                    if (c.tol == 0.0) continue;  // exact checks stay exact
                    c.tol = *tol_override;
                    const double dr = c.measured - c.expected;
                    c.pass = std::sqrt(dr * dr + c.measured_imag * c.measured_imag) <= c.tol;
                }
            }
            payload = csv ? report::checks_csv(checks) : report::checks_json(model, checks);
        }
        emit(payload, out_file, out);
        return 0;
    } catch (const DomainError& e) {
        emit(report::error_json(e), out_file, out);
        return 2;
    } catch (const std::exception& e) {
        const DomainError wrapped("Internal", e.what());
        emit(report::error_json(wrapped), out_file, out);
        return 2;
    }
}

}  // namespace specvar::cli
