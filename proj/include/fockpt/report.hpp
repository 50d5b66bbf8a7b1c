#pragma once

// Machine-readable reports behind the fockpt command-line tool.
//
// Every computation runs in `wide` precision; values are emitted as doubles
// rounded to 12 significant digits so that reports are deterministic.

#include "fockpt.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fockpt::report
{

using json = nlohmann::json;

enum class output_format
{
    json,
    csv,
};

inline output_format parse_format(const std::string& s)
{
    if (s == "json")
        return output_format::json;
    if (s == "csv")
        return output_format::csv;
    throw usage_error("unknown output format '" + s + "' (expected json or csv)");
}

/// Rounds to 12 significant digits; magnitudes below 1e-20 print as 0.
inline double round12(double x)
{
    if (!std::isfinite(x))
        return x;
    if (std::abs(x) < 1e-20)
        return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline std::string fmt12(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(x));
    return buf;
}

inline json complex_json(const std::complex<double>& z)
{
    return {{"re", round12(z.real())}, {"im", round12(z.imag())}};
}

template <typename T>
json complex_json(const std::complex<T>& z)
{
    return complex_json(to_double(z));
}

template <typename T>
json values_json(const std::vector<std::complex<T>>& values)
{
    json a = json::array();
    for (const auto& v : values)
        a.push_back(complex_json(v));
    return a;
}

struct tolerances
{
    double eigen = 1e-8;
    double symmetry = default_symmetry_tol;
    double algebra = 1e-10;
};

inline constexpr std::array<pt_operator, 3> classified_operators{partial_pt_first, partial_pt_second, global_pt};

inline json verdicts_json(const homogeneous_polynomial<wide>& psi, double tol)
{
    json v = json::object();
    for (const auto& w : classified_operators) {
        const auto verdict = classify_symmetry(psi, w, tol);
        v[std::string(name(w))] = {{"verdict", std::string(name(verdict.verdict))},
                                   {"residual", round12(verdict.residual)}};
    }
    return v;
}

inline tridiagonal_matrix<wide> scaled_operator(double c1, double c2, double alpha, int m)
{
    const auto op = quadratic_boson_operator<wide>::coupled(wide(c1), wide(c2), wide(alpha));
    return scale(tridiagonal_rep(op, m), std::complex<wide>(wide(2)));
}

inline void check_degree(int m)
{
    if (m < 0 || m > max_degree)
        throw usage_error("degree m must lie in [0, " + std::to_string(max_degree) + "]");
}

/// Eigenvalues of A = 2 B(c1, c2, i alpha, i alpha) by both routes, plus the
/// closed form when (c1, c2) = (1, -1).
inline json spectrum_report(double c1, double c2, double alpha, int m, double tol)
{
    check_degree(m);
    const auto t = scaled_operator(c1, c2, alpha, m);
    json r = {{"command", "spectrum"}, {"c1", c1}, {"c2", c2}, {"alpha", alpha}, {"m", m}, {"matrix", "2B"}};

    const auto dense = dense_eigensolve(t.dense());
    const auto dense_values = values_of(dense);
    r["dense"] = values_json(dense_values);

    if (t.recursion_applicable()) {
        const auto rec = eigen_via_recursion(t);
        const auto rec_values = values_of(rec);
        wide worst_residual(0);
        for (const auto& p : rec)
            worst_residual = std::max(worst_residual, p.residual);
        r["recursion"] = values_json(rec_values);
        r["recursion_max_residual"] = round12(to_double(worst_residual));
        r["recursion_vs_dense"] = round12(to_double(spectrum_distance(rec_values, dense_values)));
        r["eigenvalues"] = r["recursion"];
        r["route"] = "recursion";
    } else {
        r["recursion"] = nullptr;
        r["recursion_note"] = "zero super-diagonal entry; dense route only";
        r["eigenvalues"] = r["dense"];
        r["route"] = "dense";
    }

    if (c1 == 1.0 && c2 == -1.0) {
        const auto cf = closed_form_spectrum(m, wide(alpha));
        r["closed_form"] = values_json(cf);
        r["closed_form_deviation"] = round12(to_double(spectrum_distance(dense_values, cf)));
    } else {
        r["closed_form"] = nullptr;
    }

    double max_imag = 0;
    for (const auto& v : dense_values)
        max_imag = std::max(max_imag, std::abs(to_double(v.imag())));
    r["max_imag"] = round12(max_imag);
    r["phase_transition"] = max_imag > tol;
    if (max_imag > tol)
        r["note"] = "complex eigenvalues: spectrum has left the real line (|alpha| > 1 regime)";
    return r;
}

inline std::vector<eigen_pair<wide>> solve_pairs(const tridiagonal_matrix<wide>& t)
{
    return eigensolve(t).pairs;
}

/// Eigenvalue and verdicts under W2(1), W2(2) and W2 for each eigenfunction.
inline json symmetry_report(double c1, double c2, double alpha, int m, double tol)
{
    check_degree(m);
    const auto t = scaled_operator(c1, c2, alpha, m);
    json rows = json::array();
    for (const auto& p : solve_pairs(t)) {
        const auto psi = homogeneous_polynomial<wide>(p.vector);
        rows.push_back({{"eigenvalue", complex_json(p.value)}, {"verdicts", verdicts_json(psi, tol)}});
    }
    return {{"command", "symmetry"}, {"c1", c1}, {"c2", c2}, {"alpha", alpha}, {"m", m}, {"tol", tol},
            {"eigenfunctions", rows}};
}

/// Gauge-fixed eigenfunction coefficients (coefficient k multiplies z1^(m-k) z2^k).
inline json eigenfunctions_report(double c1, double c2, double alpha, int m)
{
    check_degree(m);
    const auto t = scaled_operator(c1, c2, alpha, m);
    json rows = json::array();
    for (const auto& p : solve_pairs(t)) {
        const auto psi = gauge_fix(homogeneous_polynomial<wide>(p.vector));
        json coeffs = json::array();
        for (const auto& c : psi.coeffs())
            coeffs.push_back(complex_json(c));
        rows.push_back({{"eigenvalue", complex_json(p.value)},
                        {"coefficients", coeffs},
                        {"residual", round12(to_double(p.residual))}});
    }
    return {{"command", "eigenfunctions"}, {"c1", c1}, {"c2", c2}, {"alpha", alpha}, {"m", m},
            {"basis", "z1^(m-k) z2^k"}, {"eigenfunctions", rows}};
}

inline json algebra_residuals_json(const algebra_residuals<wide>& r)
{
    return {{"commutator_plus", round12(to_double(r.commutators.r_plus))},
            {"commutator_minus", round12(to_double(r.commutators.r_minus))},
            {"commutator_plus_minus", round12(to_double(r.commutators.r_pm))},
            {"killing_deviation", round12(to_double(r.killing_deviation))},
            {"casimir_branch_gap", round12(to_double(r.casimir_gap))},
            {"casimir_commutation", round12(to_double(r.casimir_commutation))}};
}

inline double worst_residual(const algebra_residuals<wide>& r)
{
    return to_double(std::max({r.commutators.max(), r.killing_deviation, r.casimir_gap, r.casimir_commutation}));
}

/// Commutator, Killing-form and Casimir residuals; "pass" is false when any
/// exceeds tol. Throws domain_error for |alpha| >= 1.
inline json algebra_report(double alpha, double p, int m, double tol)
{
    check_degree(m);
    const auto r = check_algebra(wide(alpha), wide(p), m);
    json out = {{"command", "algebra-check"}, {"alpha", alpha}, {"p", p}, {"m", m}, {"tol", tol},
                {"omega", round12(std::sqrt(1 - alpha * alpha))}, {"residuals", algebra_residuals_json(r)}};
    if (alpha == 0.0)
        out["banner"] = "undeformed su(2): alpha = 0, omega = 1";
    const auto k = expected_killing_form(wide(alpha), wide(p));
    json g = json::array();
    for (const auto& row : k.g) {
        json jr = json::array();
        for (const auto& x : row)
            jr.push_back(round12(to_double(x.real())));
        g.push_back(jr);
    }
    out["killing_expected"] = g;
    out["pass"] = worst_residual(r) <= tol;
    return out;
}

// ---------------------------------------------------------------------------
// Scans

struct alpha_grid
{
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    std::vector<double> values() const
    {
        std::vector<double> a;
        for (int i = 0; i < count; ++i)
            a.push_back(count == 1 ? start : round12(start + (stop - start) * i / (count - 1)));
        return a;
    }
};

struct scan_config
{
    std::vector<int> m_values;
    alpha_grid alpha;
    double p = 0.0;
    tolerances tol;
    output_format format = output_format::json;
    unsigned threads = 0; ///< 0 selects hardware concurrency

    void validate() const
    {
        if (m_values.empty())
            throw usage_error("scan needs at least one m value");
        for (int m : m_values)
            check_degree(m);
        if (alpha.count < 1)
            throw usage_error("alpha grid count must be >= 1");
        if (alpha.start > alpha.stop)
            throw usage_error("alpha grid start must not exceed stop");
        if (!(tol.eigen > 0 && tol.symmetry > 0 && tol.algebra > 0))
            throw usage_error("tolerances must be positive");
    }

    json to_json() const
    {
        return {{"m_values", m_values},
                {"alpha_start", alpha.start},
                {"alpha_stop", alpha.stop},
                {"alpha_count", alpha.count},
                {"p", p},
                {"tol_eigen", tol.eigen},
                {"tol_symmetry", tol.symmetry},
                {"tol_algebra", tol.algebra}};
    }
};

/// One grid point of a scan over the J_0 family, A = 2 B(1, -1, i alpha, i alpha).
inline json scan_record(double alpha, int m, double p, const tolerances& tol)
{
    const auto t = scaled_operator(1.0, -1.0, alpha, m);
    const auto solved = eigensolve(t);
    json eig = json::array();
    json sym = json::array();
    double max_imag = 0, max_res = 0;
    for (const auto& pair : solved.pairs) {
        eig.push_back(complex_json(pair.value));
        max_imag = std::max(max_imag, std::abs(to_double(pair.value.imag())));
        max_res = std::max(max_res, to_double(pair.residual));
        sym.push_back(verdicts_json(homogeneous_polynomial<wide>(pair.vector), tol.symmetry));
    }
    const auto ep = detect_exceptional_point(t);
    json rec = {{"alpha", alpha},
                {"m", m},
                {"route", solved.route == solver_route::recursion ? "recursion" : "dense"},
                {"eigenvalues", eig},
                {"max_imag", round12(max_imag)},
                {"max_residual", round12(max_res)},
                {"symmetry", sym},
                {"ep_flag", ep.exceptional_point},
                {"max_pairwise_gap", round12(ep.max_pairwise_gap)},
                {"cluster_tolerance", round12(ep.tolerance)}};
    if (std::abs(alpha) < 1.0)
        rec["residuals"] = algebra_residuals_json(check_algebra(wide(alpha), wide(p), m));
    else
        rec["residuals"] = nullptr;
    return rec;
}

/// Per m: first alpha whose spectrum leaves the real line (max_imag > tol)
/// and every alpha flagged as an exceptional point. Works on emitted
/// records, so a parsed report reproduces it exactly.
inline json summarize(const std::vector<json>& records, double tol_eigen)
{
    std::vector<int> ms;
    for (const auto& r : records) {
        const int m = r.at("m").get<int>();
        if (std::find(ms.begin(), ms.end(), m) == ms.end())
            ms.push_back(m);
    }
    json out = json::array();
    for (int m : ms) {
        json first_complex = nullptr;
        json ep_alphas = json::array();
        for (const auto& r : records) {
            if (r.at("m").get<int>() != m)
                continue;
            if (first_complex.is_null() && r.at("max_imag").get<double>() > tol_eigen)
                first_complex = r.at("alpha");
            if (r.at("ep_flag").get<bool>())
                ep_alphas.push_back(r.at("alpha"));
        }
        out.push_back({{"m", m}, {"first_complex_alpha", first_complex}, {"ep_alphas", ep_alphas}});
    }
    return out;
}

inline std::string csv_header(int max_m)
{
    std::string h = "alpha,m,route,max_imag,max_residual,ep_flag,max_pairwise_gap,max_algebra_residual";
    for (int k = 0; k <= max_m; ++k)
        h += ",eig_re_" + std::to_string(k) + ",eig_im_" + std::to_string(k);
    return h;
}

inline std::string csv_row(const json& r, int max_m)
{
    std::ostringstream s;
    s << fmt12(r.at("alpha").get<double>()) << ',' << r.at("m").get<int>() << ',' << r.at("route").get<std::string>()
      << ',' << fmt12(r.at("max_imag").get<double>()) << ',' << fmt12(r.at("max_residual").get<double>()) << ','
      << (r.at("ep_flag").get<bool>() ? 1 : 0) << ',' << fmt12(r.at("max_pairwise_gap").get<double>()) << ',';
    if (!r.at("residuals").is_null()) {
        double worst = 0;
        for (const auto& [k, v] : r.at("residuals").items())
            worst = std::max(worst, v.get<double>());
        s << fmt12(worst);
    }
    const auto& eig = r.at("eigenvalues");
    for (int k = 0; k <= max_m; ++k) {
        s << ',';
        if (k < static_cast<int>(eig.size()))
            s << fmt12(eig[static_cast<std::size_t>(k)].at("re").get<double>()) << ','
              << fmt12(eig[static_cast<std::size_t>(k)].at("im").get<double>());
        else
            s << ',';
    }
    return s.str();
}

struct scan_outcome
{
    std::vector<json> records;
    json summary;
    bool interrupted = false;
};

/// Runs the scan, computing grid points concurrently and writing records in
/// (m, alpha) order as soon as each is available. When `stop` becomes true
/// no further points are started; completed records stay in the output and
/// the document is closed with "interrupted": true.
inline scan_outcome run_scan(const scan_config& cfg, std::ostream& out, const std::atomic<bool>* stop = nullptr)
{
    cfg.validate();
    struct point
    {
        int m;
        double alpha;
    };
    std::vector<int> ms = cfg.m_values;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<point> grid;
    for (int m : ms)
        for (double a : cfg.alpha.values())
            grid.push_back({m, a});
    const int max_m = ms.back();

    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<json>> jobs(grid.size());
    std::size_t launched = 0;
    auto stopped = [&] { return stop && stop->load(); };
    auto launch_up_to = [&](std::size_t limit) {
        while (launched < grid.size() && launched < limit && !stopped()) {
            const point pt = grid[launched];
            jobs[launched] = std::async(std::launch::async,
                                        [pt, &cfg] { return scan_record(pt.alpha, pt.m, cfg.p, cfg.tol); });
            ++launched;
        }
    };

    scan_outcome result;
    if (cfg.format == output_format::json)
        out << "{\n\"config\": " << cfg.to_json().dump() << ",\n\"records\": [\n";
    else
        out << csv_header(max_m) << '\n';
    out.flush();

    launch_up_to(workers);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i >= launched)
            break;
        json rec = jobs[i].get();
        launch_up_to(i + 1 + workers);
        if (cfg.format == output_format::json)
            out << (i ? ",\n" : "") << rec.dump();
        else
            out << csv_row(rec, max_m) << '\n';
        out.flush();
        result.records.push_back(std::move(rec));
    }
    result.interrupted = result.records.size() < grid.size();
    result.summary = summarize(result.records, cfg.tol.eigen);

    if (cfg.format == output_format::json) {
        out << "\n],\n\"summary\": " << result.summary.dump() << ",\n\"interrupted\": "
            << (result.interrupted ? "true" : "false") << "\n}\n";
    } else {
        for (const auto& s : result.summary) {
            out << "# summary m=" << s.at("m").get<int>() << " first_complex_alpha="
                << (s.at("first_complex_alpha").is_null() ? std::string("none")
                                                          : fmt12(s.at("first_complex_alpha").get<double>()))
                << " ep_alphas=";
            bool first = true;
            for (const auto& a : s.at("ep_alphas")) {
                out << (first ? "" : ";") << fmt12(a.get<double>());
                first = false;
            }
            out << '\n';
        }
        if (result.interrupted)
            out << "# interrupted\n";
    }
    out.flush();
    return result;
}

// ---------------------------------------------------------------------------
// CSV renderings of the single-point reports

inline std::string spectrum_csv(const json& r)
{
    std::size_t width = 0;
    for (const char* src : {"recursion", "dense", "closed_form"})
        if (!r.at(src).is_null())
            width = std::max(width, r.at(src).size());
    std::ostringstream s;
    s << "source";
    for (std::size_t k = 0; k < width; ++k)
        s << ",eig_re_" << k << ",eig_im_" << k;
    s << '\n';
    for (const char* src : {"recursion", "dense", "closed_form"}) {
        if (r.at(src).is_null())
            continue;
        s << src;
        for (const auto& v : r.at(src))
            s << ',' << fmt12(v.at("re").get<double>()) << ',' << fmt12(v.at("im").get<double>());
        s << '\n';
    }
    return s.str();
}

inline std::string symmetry_csv(const json& r)
{
    std::ostringstream s;
    s << "eig_re,eig_im";
    for (const auto& w : classified_operators)
        s << ',' << name(w) << "_verdict," << name(w) << "_residual";
    s << '\n';
    for (const auto& row : r.at("eigenfunctions")) {
        s << fmt12(row.at("eigenvalue").at("re").get<double>()) << ','
          << fmt12(row.at("eigenvalue").at("im").get<double>());
        for (const auto& w : classified_operators) {
            const auto& v = row.at("verdicts").at(std::string(name(w)));
            s << ',' << v.at("verdict").get<std::string>() << ',' << fmt12(v.at("residual").get<double>());
        }
        s << '\n';
    }
    return s.str();
}

inline std::string eigenfunctions_csv(const json& r)
{
    std::ostringstream s;
    s << "eig_re,eig_im,k,coeff_re,coeff_im\n";
    for (const auto& row : r.at("eigenfunctions")) {
        int k = 0;
        for (const auto& c : row.at("coefficients"))
            s << fmt12(row.at("eigenvalue").at("re").get<double>()) << ','
              << fmt12(row.at("eigenvalue").at("im").get<double>()) << ',' << k++ << ','
              << fmt12(c.at("re").get<double>()) << ',' << fmt12(c.at("im").get<double>()) << '\n';
    }
    return s.str();
}

inline std::string algebra_csv(const json& r)
{
    std::ostringstream s;
    s << "quantity,residual\n";
    for (const auto& [k, v] : r.at("residuals").items())
        s << k << ',' << fmt12(v.get<double>()) << '\n';
    return s.str();
}

} // namespace fockpt::report
