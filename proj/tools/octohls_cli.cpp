// octohls: constants, eigenvalue tables, margin scans and the verification suite.
// Exit codes: 0 all checks pass, 1 a check failed, 2 configuration or domain error.
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "octohls/constants.hpp"
#include "octohls/errors.hpp"
#include "octohls/nilgroup.hpp"
#include "octohls/spectra.hpp"
#include "octohls/verify.hpp"

namespace {

using octohls::kQ;
using Json = nlohmann::ordered_json;

struct Options {
    std::vector<double> lambda;
    std::vector<double> alpha;
    std::vector<double> d;
    int jmax = -1;
    int kmax = -1;
    int nodes_theta = 256;
    int nodes_phi = 256;
    std::size_t mc_samples = 200000;
    std::uint64_t seed = 20240917;
    std::string format = "json";
    std::string out;
    std::optional<double> tolerance;
    std::vector<int> criteria;
    bool skip_mc = false;
};

// A table with fixed columns, rendered as CSV or as JSON rows.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

std::string cell_csv(const Json& v)
{
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string render(const Table& t, const std::string& command, const Json& extra, const std::string& format)
{
    if (format == "csv") {
        std::string s;
        for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
        s += "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + cell_csv(row[i]);
            s += "\n";
        }
        return s;
    }
    Json root;
    root["schema_version"] = 1;
    root["command"] = command;
    for (const auto& [k, v] : extra.items()) root[k] = v;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r;
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
        rows.push_back(std::move(r));
    }
    root["rows"] = std::move(rows);
    return root.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw octohls::DomainError("cannot open output file " + out);
    f << text;
}

int cmd_constants(const Options& o)
{
    for (double l : o.lambda) octohls::make_hls_params(l);
    std::set<double> grid(o.lambda.begin(), o.lambda.end());
    Table t{{"lambda", "p", "C_lambda", "C_prime", "C_prime_spectral", "identity_rel_residual", "d", "C_sobolev",
             "C_logsobolev"},
            {}};
    for (double l : grid) {
        const double Cp = octohls::C_hls_sphere(l);
        const double Cs = octohls::C_hls_sphere_spectral(l);
        const double d = kQ - l;
        const bool sob = d > 0.0 && d < kQ - 12.0;  // C''_d degenerates to 0 at d = Q - 12
        t.rows.push_back({l, octohls::make_hls_params(l).p(), number(octohls::C_hls_group(l)), number(Cp), number(Cs),
                          number(std::abs(Cs - Cp) / Cp), d, sob ? number(octohls::C_sobolev(d)) : Json(nullptr),
                          number(octohls::C_logsobolev())});
    }
    emit(render(t, "constants", Json::object(), o.format), o.out);
    return 0;
}

int cmd_eigs(const Options& o)
{
    const int jmax = o.jmax < 0 ? 6 : o.jmax;
    const int kmax = o.kmax < 0 ? jmax : o.kmax;
    if (jmax > 60 || kmax < 0) throw octohls::DomainError("eigs: require 0 <= kmax and jmax <= 60");
    for (double a : o.alpha)
        if (!(a > -1.0 && a < kQ / 4.0)) throw octohls::DomainError("eigs: alpha must lie in (-1, Q/4)");
    const double tol = o.tolerance.value_or(1e-6);
    octohls::QuadratureOptions qopt;
    qopt.nodes_theta = o.nodes_theta;
    qopt.nodes_phi = o.nodes_phi;
    Table t{{"alpha", "j", "k", "K1_closed", "K1_oracle", "K1_rel_diff", "K2_closed", "K2_oracle", "K2_rel_diff", "pass"},
            {}};
    bool all = true;
    std::set<double> grid(o.alpha.begin(), o.alpha.end());
    for (double a : grid) {
        const auto tabs = octohls::eig_quadrature_table({octohls::kernel_K1(a), octohls::kernel_K2(a)}, jmax, qopt);
        for (int j = 0; j <= jmax; ++j)
            for (int k = 0; k <= std::min(j, kmax); ++k) {
                const double c1 = octohls::eig_K1(j, k, a), q1 = tabs[0].values.at({j, k});
                const double c2 = octohls::eig_K2(j, k, a), q2 = tabs[1].values.at({j, k});
                auto chk1 = octohls::make_check("", a, q1, c1, tol, octohls::CheckKind::RelOrAbs);
                auto chk2 = octohls::make_check("", a, q2, c2, tol, octohls::CheckKind::RelOrAbs);
                const bool ok = chk1.pass && chk2.pass;
                all = all && ok;
                t.rows.push_back({a, j, k, number(c1), number(q1), number(chk1.rel_err), number(c2), number(q2),
                                  number(chk2.rel_err), ok});
            }
    }
    emit(render(t, "eigs", Json{{"tolerance", tol}, {"pass", all}}, o.format), o.out);
    return all ? 0 : 1;
}

int cmd_margin(const Options& o)
{
    const int jmax = o.jmax < 0 ? 200 : o.jmax;
    if (jmax < 0 || jmax > 2000) throw octohls::DomainError("margin: require 0 <= jmax <= 2000");
    for (double a : o.alpha)
        if (!(a > 0.0 && a < kQ / 4.0)) throw octohls::DomainError("margin: alpha must lie in (0, Q/4)");
    constexpr double zero_tol = 1e-12;
    Table t{{"alpha", "jmax", "min_margin", "min_j", "min_k", "zero_set", "violated", "witness_j", "witness_k"}, {}};
    std::set<double> grid(o.alpha.begin(), o.alpha.end());
    for (double a : grid) {
        double best = INFINITY;
        int bj = 0, bk = 0;
        std::vector<std::pair<int, int>> zeros;
        bool k_ge_2_all_zero = jmax >= 2;
        bool others_nonzero = true;
        for (int j = 0; j <= jmax; ++j)
            for (int k = 0; k <= j; ++k) {
                const auto m = octohls::bilinear_margin_terms(j, k, a);
                const double v = m.normalized();
                if (v < best) {
                    best = v;
                    bj = j;
                    bk = k;
                }
                const bool zero = std::abs(v) <= zero_tol;
                if (zero) zeros.push_back({j, k});
                if (k >= 2 && !zero) k_ge_2_all_zero = false;
                if (k < 2 && !(j == 0 && k == 0) && zero) others_nonzero = false;
            }
        std::string zs;
        const bool origin_zero = !zeros.empty() && zeros.front() == std::make_pair(0, 0);
        if (origin_zero && zeros.size() == 1) {
            zs = "{(0,0)}";
        } else if (origin_zero && k_ge_2_all_zero && others_nonzero) {
            zs = "{(0,0)} U {k>=2}";
        } else {
            std::ostringstream os;
            os << "{";
            for (std::size_t i = 0; i < zeros.size() && i < 20; ++i)
                os << (i ? "," : "") << "(" << zeros[i].first << "," << zeros[i].second << ")";
            if (zeros.size() > 20) os << ",...";
            os << "}";
            zs = os.str();
        }
        const bool violated = best < -zero_tol;
        t.rows.push_back({a, jmax, number(best), bj, bk, zs, violated, violated ? Json(bj) : Json(nullptr),
                          violated ? Json(bk) : Json(nullptr)});
    }
    emit(render(t, "margin", Json::object(), o.format), o.out);
    return 0;
}

int cmd_verify(const Options& o)
{
    octohls::VerifyConfig cfg;
    cfg.seed = o.seed;
    cfg.nodes_theta = o.nodes_theta;
    cfg.nodes_phi = o.nodes_phi;
    if (o.jmax >= 0) cfg.jmax = o.jmax;
    cfg.mc_samples = o.mc_samples;
    cfg.tolerance_override = o.tolerance;
    if (cfg.mc_samples < 2) throw octohls::DomainError("verify: --mc-samples must be at least 2");
    std::vector<int> ids = o.criteria;
    if (ids.empty())
        for (int i = 1; i <= octohls::kCriterionCount; ++i) ids.push_back(i);
    std::set<int> sorted(ids.begin(), ids.end());
    std::vector<octohls::CriterionReport> reports;
    for (int id : sorted) reports.push_back(octohls::run_criterion(id, cfg));
    if (!o.skip_mc) reports.push_back(octohls::run_mc_crosschecks(cfg));
    bool all = true;
    for (const auto& r : reports) all = all && r.pass();
    emit(o.format == "csv" ? octohls::report_csv(reports) : octohls::report_json(reports), o.out);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"octonionic HLS numerics"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", o.out, "output path (default stdout)");
        sub->add_option("--nodes-theta", o.nodes_theta, "quadrature nodes in theta")->check(CLI::Range(8, 4096));
        sub->add_option("--nodes-phi", o.nodes_phi, "quadrature nodes in phi")->check(CLI::Range(8, 4096));
        sub->add_option("--tolerance", o.tolerance, "override every check tolerance")->check(CLI::PositiveNumber);
    };

    auto* constants = app.add_subcommand("constants", "sharp constants on a lambda grid");
    constants->add_option("--lambda", o.lambda, "lambda values in (0, Q)");
    common(constants);

    auto* eigs = app.add_subcommand("eigs", "closed-form vs quadrature eigenvalues");
    eigs->add_option("--alpha", o.alpha, "alpha values")->required();
    eigs->add_option("--jmax", o.jmax, "largest j (default 6)");
    eigs->add_option("--kmax", o.kmax, "largest k (default jmax)");
    common(eigs);

    auto* margin = app.add_subcommand("margin", "bilinear margin scan and sharpness witness");
    margin->add_option("--alpha", o.alpha, "alpha values")->required();
    margin->add_option("--jmax", o.jmax, "largest j (default 200)");
    common(margin);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--criterion", o.criteria, "criterion ids (default all)")
        ->check(CLI::Range(1, octohls::kCriterionCount));
    verify->add_option("--jmax", o.jmax, "spectral truncation (default 40)");
    verify->add_option("--mc-samples", o.mc_samples, "Monte-Carlo samples per cross-check");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_flag("--skip-mc", o.skip_mc, "omit Monte-Carlo cross-checks");
    common(verify);

    // unused flags are accepted on every command so one flag set works everywhere
    for (auto* sub : {constants, eigs, margin}) {
        sub->add_option("--d", o.d, "Sobolev orders (informational)");
        sub->add_option("--seed", o.seed, "random seed (unused)");
        sub->add_option("--mc-samples", o.mc_samples, "Monte-Carlo samples (unused)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*constants) return cmd_constants(o);
        if (*eigs) return cmd_eigs(o);
        if (*margin) return cmd_margin(o);
        if (*verify) return cmd_verify(o);
    } catch (const octohls::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
