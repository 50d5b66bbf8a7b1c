// fockpt: spectra, PT-symmetry verdicts and deformed-algebra checks for
// quadratic two-mode boson operators on homogeneous polynomial spaces.

#include <fockpt/instantiations.hpp>
#include <fockpt/report.hpp>

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>

namespace
{

using fockpt::report::json;

enum exit_code : int
{
    ok = 0,
    usage = 2,
    numerical = 3,
    domain = 4,
};

std::atomic<bool> interrupted{false};

extern "C" void on_signal(int) { interrupted.store(true); }

struct global_options
{
    std::string format = "json";
    double tol = 0.0; // 0: command default
    std::string out;
};

struct point_options
{
    double c1 = 1.0;
    double c2 = -1.0;
    double alpha = 0.0;
    int m = 1;
    double p = 0.0;
};

void add_point_options(CLI::App* cmd, point_options& o, bool with_couplings)
{
    if (with_couplings) {
        cmd->add_option("--c1", o.c1, "coefficient B11")->capture_default_str();
        cmd->add_option("--c2", o.c2, "coefficient B22")->capture_default_str();
    }
    cmd->add_option("--alpha", o.alpha, "coupling, B12 = B21 = i alpha")->required();
    cmd->add_option("--m", o.m, "homogeneous degree")->required()->check(CLI::Range(0, fockpt::max_degree));
}

class output
{
public:
    explicit output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw fockpt::usage_error("cannot open output file '" + path + "'");
        }
    }

    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit(const global_options& g, const json& doc, std::string (*to_csv)(const json&))
{
    output out(g.out);
    if (fockpt::report::parse_format(g.format) == fockpt::report::output_format::csv)
        out.stream() << to_csv(doc);
    else
        out.stream() << doc.dump(2) << '\n';
}

/// Applies a flat `key = value` file to `cmd`. Keys name the long options
/// without dashes; options already given on the command line win.
void apply_config_file(CLI::App* cmd, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw fockpt::usage_error("cannot read config file '" + path + "'");
    for (const auto& item : CLI::ConfigTOML().from_config(in)) {
        if (item.name == "++" || item.name == "--")
            continue; // section markers
        if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == cmd->get_name()))
            throw fockpt::usage_error("config key '" + item.fullname() + "' does not belong to '" + cmd->get_name() + "'");
        CLI::Option* opt = cmd->get_option_no_throw("--" + item.name);
        if (!opt || item.name == "config")
            throw fockpt::usage_error("unknown config key '" + item.name + "'");
        if (opt->count() > 0)
            continue;
        try {
            opt->add_result(item.inputs);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw fockpt::usage_error("config key '" + item.name + "': " + e.what());
        }
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectra and partial-PT symmetry of non-Hermitian quadratic boson operators"};
    app.require_subcommand(1);
    app.fallthrough();

    global_options g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--tol", g.tol, "tolerance for the command's main check (default per command)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write the report to this path instead of stdout");

    point_options spec_o, sym_o, fn_o, alg_o;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of 2B by recursion, dense solver and closed form");
    add_point_options(spectrum, spec_o, true);

    auto* symmetry = app.add_subcommand("symmetry", "W2(1), W2(2), W2 verdicts for each eigenfunction");
    add_point_options(symmetry, sym_o, true);

    auto* eigenfunctions = app.add_subcommand("eigenfunctions", "gauge-fixed eigenfunction coefficients");
    add_point_options(eigenfunctions, fn_o, true);

    auto* algebra = app.add_subcommand("algebra-check", "commutator, Killing form and Casimir residuals");
    add_point_options(algebra, alg_o, false);
    algebra->add_option("--p", alg_o.p, "ladder exponent p")->capture_default_str();

    fockpt::report::scan_config scan_cfg;
    std::string scan_format;
    auto* scan = app.add_subcommand("scan", "alpha sweep over the J0 family; records ordered by (m, alpha)");
    std::string scan_config_path;
    scan->add_option("--config", scan_config_path, "flat key = value file with scan settings; flags override it")
        ->check(CLI::ExistingFile);
    scan->add_option("--m_values,--m-values", scan_cfg.m_values, "degrees to scan")->expected(1, -1);
    scan->add_option("--alpha_start,--alpha-start", scan_cfg.alpha.start)->capture_default_str();
    scan->add_option("--alpha_stop,--alpha-stop", scan_cfg.alpha.stop)->capture_default_str();
    scan->add_option("--alpha_count,--alpha-count", scan_cfg.alpha.count)->capture_default_str();
    scan->add_option("--p", scan_cfg.p, "ladder exponent for the algebra residuals")->capture_default_str();
    scan->add_option("--tol_eigen,--tol-eigen", scan_cfg.tol.eigen)->capture_default_str();
    scan->add_option("--tol_symmetry,--tol-symmetry", scan_cfg.tol.symmetry)->capture_default_str();
    scan->add_option("--tol_algebra,--tol-algebra", scan_cfg.tol.algebra)->capture_default_str();
    scan->add_option("--output_format,--output-format", scan_format, "json or csv (same as --format)");
    scan->add_option("--threads", scan_cfg.threads, "worker threads, 0 = hardware concurrency");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*spectrum) {
            const double tol = g.tol > 0 ? g.tol : fockpt::report::tolerances{}.eigen;
            emit(g, fockpt::report::spectrum_report(spec_o.c1, spec_o.c2, spec_o.alpha, spec_o.m, tol),
                 fockpt::report::spectrum_csv);
        } else if (*symmetry) {
            const double tol = g.tol > 0 ? g.tol : fockpt::default_symmetry_tol;
            emit(g, fockpt::report::symmetry_report(sym_o.c1, sym_o.c2, sym_o.alpha, sym_o.m, tol),
                 fockpt::report::symmetry_csv);
        } else if (*eigenfunctions) {
            emit(g, fockpt::report::eigenfunctions_report(fn_o.c1, fn_o.c2, fn_o.alpha, fn_o.m),
                 fockpt::report::eigenfunctions_csv);
        } else if (*algebra) {
            const double tol = g.tol > 0 ? g.tol : fockpt::report::tolerances{}.algebra;
            const json doc = fockpt::report::algebra_report(alg_o.alpha, alg_o.p, alg_o.m, tol);
            emit(g, doc, fockpt::report::algebra_csv);
            if (!doc.at("pass").get<bool>()) {
                std::cerr << "algebra-check: residual above tolerance " << tol << '\n';
                return numerical;
            }
        } else if (*scan) {
            if (!scan_config_path.empty())
                apply_config_file(scan, scan_config_path);
            const bool format_on_cli = app.get_option("--format")->count() > 0;
            scan_cfg.format = fockpt::report::parse_format(format_on_cli || scan_format.empty() ? g.format : scan_format);
            if (g.tol > 0)
                scan_cfg.tol = {g.tol, g.tol, g.tol};
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            output out(g.out);
            const auto result = fockpt::report::run_scan(scan_cfg, out.stream(), &interrupted);
            if (result.interrupted) {
                std::cerr << "scan interrupted after " << result.records.size() << " records\n";
                return numerical;
            }
        }
    } catch (const fockpt::usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const fockpt::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain;
    } catch (const fockpt::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    }
    return ok;
}
