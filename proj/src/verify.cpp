#include "octohls/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>

#include <json.hpp>

#include "octohls/cayley.hpp"
#include "octohls/constants.hpp"
#include "octohls/errors.hpp"
#include "octohls/functional.hpp"
#include "octohls/nilgroup.hpp"
#include "octohls/rng.hpp"
#include "octohls/specfun.hpp"
#include "octohls/spectra.hpp"

namespace octohls {

CheckResult make_check(std::string name, double param, double value, double reference, double tolerance,
                       CheckKind kind)
{
    CheckResult c;
    c.check = std::move(name);
    c.lambda_or_alpha = param;
    c.value = value;
    c.reference = reference;
    c.abs_err = std::abs(value - reference);
    c.rel_err = reference != 0.0 ? c.abs_err / std::abs(reference) : c.abs_err;
    c.tolerance = tolerance;
    c.kind = kind;
    switch (kind) {
    case CheckKind::Abs: c.pass = c.abs_err <= tolerance; break;
    case CheckKind::Rel: c.pass = c.rel_err <= tolerance; break;
    case CheckKind::RelOrAbs: c.pass = c.rel_err <= tolerance || c.abs_err <= 1e-8; break;
    case CheckKind::AtMost: c.pass = value <= reference + tolerance; break;
    case CheckKind::AtLeast: c.pass = value >= reference - tolerance; break;
    case CheckKind::Below: c.pass = value < reference - tolerance; break;
    case CheckKind::Above: c.pass = value > reference + tolerance; break;
    }
    if (!std::isfinite(value)) c.pass = false;
    return c;
}

bool CriterionReport::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

// Running maximum of an error measure, recorded as one check.
struct MaxErr {
    double worst = 0.0;
    void add(double e) { worst = std::isfinite(e) ? std::max(worst, e) : std::numeric_limits<double>::infinity(); }
};

Octonion random_octonion(CounterRng& rng)
{
    Octonion x;
    for (double& c : x.c) c = rng.normal();
    return x;
}

Octonion random_unit_octonion(CounterRng& rng)
{
    Octonion x = random_octonion(rng);
    return (1.0 / oct_norm(x)) * x;
}

GroupElement random_group(CounterRng& rng)
{
    GroupElement u;
    for (double& c : u.z.c) c = rng.normal();
    for (double& c : u.t.c) c = rng.normal();
    return u;
}

double gdiff(const GroupElement& a, const GroupElement& b)
{
    return std::sqrt(oct_norm2(a.z - b.z) + im_norm2(a.t - b.t));
}

double gsize(const GroupElement& a) { return std::sqrt(oct_norm2(a.z) + im_norm2(a.t)); }

double rel(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

struct Ctx {
    const VerifyConfig& cfg;
    std::vector<CheckResult>& out;

    void add(std::string name, double param, double value, double reference, double tol, CheckKind kind)
    {
        out.push_back(make_check(std::move(name), param, value, reference, cfg.tolerance_override.value_or(tol), kind));
    }
    void add_max(std::string name, double param, const MaxErr& m, double tol)
    {
        add(std::move(name), param, m.worst, 0.0, tol, CheckKind::Abs);
    }
    SphereQuadratureOptions quad() const { return {cfg.nodes_theta, cfg.nodes_phi}; }
};

// ---- 1: octonion algebra
void criterion_octonion(Ctx& c)
{
    constexpr int n = 100000;
    MaxErr comp, moufang, alt, conj;
    double max_assoc = 0.0;
    for (int i = 0; i < n; ++i) {
        CounterRng rng(c.cfg.seed, 101, static_cast<std::uint64_t>(i));
        const Octonion x = random_unit_octonion(rng), y = random_unit_octonion(rng), z = random_unit_octonion(rng);
        comp.add(std::abs(oct_norm(x * y) - oct_norm(x) * oct_norm(y)));
        moufang.add(oct_norm((z * (x * (z * y))) - (((z * x) * z) * y)));
        moufang.add(oct_norm((x * (z * (y * z))) - (((x * z) * y) * z)));
        moufang.add(oct_norm(((z * x) * (y * z)) - ((z * (x * y)) * z)));
        alt.add(oct_norm(((x * x) * y) - (x * (x * y))));
        alt.add(oct_norm(((y * x) * x) - (y * (x * x))));
        alt.add(oct_norm(((x * y) * x) - (x * (y * x))));
        conj.add(oct_norm(oct_conj(x * y) - oct_conj(y) * oct_conj(x)));
        max_assoc = std::max(max_assoc, oct_norm(oct_associator(x, y, z)));
    }
    c.add_max("octonion.composition", 0, comp, 1e-12);
    c.add_max("octonion.moufang", 0, moufang, 1e-12);
    c.add_max("octonion.alternativity", 0, alt, 1e-12);
    c.add_max("octonion.conjugate_antihomomorphism", 0, conj, 1e-12);
    // the algebra must not collapse to an associative one
    c.add("octonion.nonassociative", 0, max_assoc, 0.0, 0.1, CheckKind::Above);
}

// ---- 2: group axioms and metric
void criterion_group(Ctx& c)
{
    constexpr int n = 10000;
    MaxErr assoc, inv, left, dil, dil_dist, closed;
    for (int i = 0; i < n; ++i) {
        CounterRng rng(c.cfg.seed, 102, static_cast<std::uint64_t>(i));
        const GroupElement u = random_group(rng), v = random_group(rng), w = random_group(rng);
        const double delta = std::exp(4.0 * rng.uniform() - 2.0);
        const GroupElement a = gmul(gmul(u, v), w), b = gmul(u, gmul(v, w));
        assoc.add(gdiff(a, b) / std::max(1.0, gsize(a)));
        inv.add(gsize(gmul(u, ginv(u))) / std::max(1.0, gsize(u) * gsize(u)));
        inv.add(gsize(gmul(ginv(u), u)) / std::max(1.0, gsize(u) * gsize(u)));
        const double d = gdist(u, v);
        left.add(rel(gdist(gmul(w, u), gmul(w, v)), d));
        dil.add(rel(hnorm(dilate(delta, u)), delta * hnorm(u)));
        dil_dist.add(rel(gdist(dilate(delta, u), dilate(delta, v)), delta * d));
        closed.add(rel(gdist_closed_form(u, v), d));
    }
    c.add_max("group.associativity", 0, assoc, 1e-12);
    c.add_max("group.inverse", 0, inv, 1e-12);
    c.add_max("group.left_invariance", 0, left, 1e-12);
    c.add_max("group.dilation_norm", 0, dil, 1e-12);
    c.add_max("group.dilation_distance", 0, dil_dist, 1e-12);
    c.add_max("group.distance_closed_form", 0, closed, 1e-12);
}

// ---- 3: Cayley identities
void criterion_cayley(Ctx& c)
{
    constexpr int n = 10000;
    MaxErr round, sphere_round, jac, recip, dr;
    for (int i = 0; i < n; ++i) {
        CounterRng rng(c.cfg.seed, 103, static_cast<std::uint64_t>(i));
        const GroupElement u = random_group(rng), v = random_group(rng);
        const SpherePoint zu = cayley(u), zv = cayley(v);
        round.add(gdiff(cayley_inv(zu), u) / std::max(1.0, gsize(u)));
        const SpherePoint zeta = sample_sphere(rng);
        const SpherePoint back = cayley(cayley_inv(zeta));
        sphere_round.add(std::sqrt(oct_norm2(back.zeta1 - zeta.zeta1) + oct_norm2(back.zeta2 - zeta.zeta2)));
        jac.add(rel(jac_cayley_sphere(zu), jac_cayley(u)));
        recip.add(std::abs(jac_cayley(u) * jac_cayley_inv(zu) - 1.0));
        dr.add(rel(sdist(zu, zv), distance_relation_rhs(u, v)));
    }
    c.add_max("cayley.round_trip_group", 0, round, 1e-11);
    c.add_max("cayley.round_trip_sphere", 0, sphere_round, 1e-11);
    c.add_max("cayley.jacobian_forms", 0, jac, 1e-10);
    c.add_max("cayley.jacobian_reciprocity", 0, recip, 1e-10);
    c.add_max("cayley.distance_relation", 0, dr, 1e-10);
}

// ---- 4: eigenvalue oracle
void criterion_eigen_oracle(Ctx& c)
{
    QuadratureOptions opt;
    opt.nodes_theta = c.cfg.nodes_theta;
    opt.nodes_phi = c.cfg.nodes_phi;
    const double tol = c.cfg.tolerance_override.value_or(1e-6);
    for (double alpha : {3.25, 3.5, 4.0, 4.75, 5.0, 5.2}) {
        const auto tabs = eig_quadrature_table({kernel_K1(alpha), kernel_K2(alpha)}, 6, opt);
        for (int kind = 0; kind < 2; ++kind) {
            double worst = 0.0;
            double worst_ref = 1.0, worst_val = 1.0;
            bool ok = true;
            for (const auto& [key, q] : tabs[kind].values) {
                const double ref = kind == 0 ? eig_K1(key.first, key.second, alpha) : eig_K2(key.first, key.second, alpha);
                const auto one = make_check("", alpha, q, ref, tol, CheckKind::RelOrAbs);
                ok = ok && one.pass;
                if (one.rel_err >= worst) {
                    worst = one.rel_err;
                    worst_ref = ref;
                    worst_val = q;
                }
            }
            // reported entry is the worst relative error; pass requires every entry to pass
            auto chk = make_check(kind == 0 ? "eigen.K1_oracle" : "eigen.K2_oracle", alpha, worst_val, worst_ref, tol,
                                  CheckKind::RelOrAbs);
            chk.pass = ok;
            c.out.push_back(chk);
        }
    }
}

// ---- 5: ratio identity
void criterion_ratio(Ctx& c)
{
    for (double alpha : {3.5, 4.0, 5.0}) {
        MaxErr err;
        for (int j = 0; j <= 50; ++j)
            for (int k = 0; k <= j; ++k) {
                const double lhs = eig_K1(j, k, alpha - 1.0) / eig_K1(j, k, alpha);
                const double ref = eig_K1_ratio(j, k, alpha);
                // zero ratios (vanishing lower eigenvalue) are compared absolutely
                err.add(ref == 0.0 ? std::abs(lhs) : rel(lhs, ref));
            }
        c.add_max("eigen.ratio_identity", alpha, err, 1e-12);
    }
}

// ---- 6: bilinear margin
void criterion_margin(Ctx& c)
{
    constexpr int jmax = 200;
    constexpr double zero_tol = 1e-12;
    for (double alpha : {3.0, 3.25, 3.5, 3.75, 4.0, 4.25, 4.5, 4.75, 5.0, 5.25, 5.45}) {
        double min_norm = std::numeric_limits<double>::infinity();
        double min_nonzero_set = std::numeric_limits<double>::infinity();
        int zero_mismatch = 0;
        double origin = 0.0;
        for (int j = 0; j <= jmax; ++j)
            for (int k = 0; k <= j; ++k) {
                const MarginTerms m = bilinear_margin_terms(j, k, alpha);
                const double v = m.normalized();
                min_norm = std::min(min_norm, v);
                if (j == 0 && k == 0) {
                    origin = v;
                    continue;
                }
                const bool expect_zero = alpha == 3.0 && k >= 2;
                if (expect_zero) {
                    if (std::abs(v) > zero_tol) ++zero_mismatch;
                } else {
                    min_nonzero_set = std::min(min_nonzero_set, v);
                }
            }
        c.add("margin.nonnegative", alpha, min_norm, 0.0, zero_tol, CheckKind::AtLeast);
        c.add("margin.zero_at_origin", alpha, origin, 0.0, zero_tol, CheckKind::Abs);
        c.add("margin.positive_off_zero_set", alpha, min_nonzero_set, 0.0, zero_tol, CheckKind::Above);
        if (alpha == 3.0) c.add("margin.zero_set_k_ge_2", alpha, zero_mismatch, 0.0, 0.0, CheckKind::Abs);
    }
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= jmax; ++j)
        for (int k = 0; k <= j; ++k) {
            const MarginTerms m = bilinear_margin_terms(j, k, 2.5);
            worst = std::min(worst, m.normalized());
        }
    c.add("margin.violation_below_3", 2.5, worst, 0.0, zero_tol, CheckKind::Below);
}

// ---- 7: sharp-constant spectral identity
void criterion_constants(Ctx& c)
{
    const double S = sphere_measure();
    for (double lambda : {12.0, 14.0, 16.0, 20.0}) {
        const double Cp = C_hls_sphere(lambda);
        c.add("constants.spectral_identity", lambda, C_hls_sphere_spectral(lambda), Cp, 1e-12, CheckKind::Rel);
        const auto F = project_bispherical(constant_function(1.0), 4, c.quad());
        const double p = make_hls_params(lambda).p();
        const double q = hls_spectral(F, lambda).value / std::pow(S, 2.0 / p);
        c.add("constants.quotient_at_one", lambda, q, Cp, 1e-10, CheckKind::Rel);
    }
}

// ---- 8: intertwining consistency
void criterion_intertwining(Ctx& c)
{
    for (double d : {2.0, 4.0, 8.0}) {
        MaxErr err;
        for (int j = 0; j <= 6; ++j)
            for (int k = 0; k <= j; ++k)
                err.add(std::abs(c_d(d) * std::pow(2.0, (kQ - d) / 2.0) * eig_K1(j, k, (kQ - d) / 4.0) *
                                     intertwining_spectrum(d, j, k) -
                                 1.0));
        c.add_max("intertwining.product_is_one", d, err, 1e-10);
    }
}

// ---- 9: extremality
void criterion_extremality(Ctx& c)
{
    const auto q = hls_quotient(make_extremizer({north_scaled(0.3), 16.0}), 16.0, c.cfg.jmax, c.quad());
    c.add("extremality.extremizer_quotient", 16.0, q.value, C_hls_sphere(16.0), 1e-4, CheckKind::Rel);
    for (double lambda : {12.0, 16.0, 20.0}) {
        const double Cp = C_hls_sphere(lambda);
        double closest = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 50; ++i) {
            CounterRng rng(c.cfg.seed, 109, static_cast<std::uint64_t>(i));
            int j, k;
            do {
                j = static_cast<int>(rng.uniform() * 7.0);
                k = static_cast<int>(rng.uniform() * (j + 1));
            } while (j == 0);
            const double eps = rng.uniform() < 0.5 ? -0.1 : 0.1;
            const auto f = SphereFunction::zonal([j, k, eps](double r, double x) { return 1.0 + eps * zonal_rx({j, k}, r, x); });
            const double v = hls_quotient(f, lambda, 8, c.quad()).value;
            // relative deficit C' - Q(f) normalized by C'
            const double deficit = (Cp - v) / Cp;
            closest = std::max(closest, -deficit);
        }
        // largest (C'-relative) excess over C' among the perturbations; must be negative
        c.add("extremality.perturbations_below", lambda, closest, 0.0, 0.0, CheckKind::Below);
    }
}

// ---- 10: Euler-Lagrange residual
void criterion_euler_lagrange(Ctx& c)
{
    for (double lambda : {12.0, 16.0, 20.0})
        for (double s : {0.0, 0.1, 0.3, -0.5}) {
            const double r = el_residual({north_scaled(s), lambda}, c.cfg.jmax, c.quad());
            c.add("euler_lagrange.extremizer_s=" + std::to_string(s).substr(0, s < 0 ? 4 : 3), lambda, r, 0.0, 1e-4,
                  CheckKind::AtMost);
        }
    const auto control = SphereFunction::zonal([](double r, double x) { return 1.0 + 0.5 * zonal_rx({1, 0}, r, x); });
    c.add("euler_lagrange.negative_control", 16.0, el_residual_function(control, 16.0, c.cfg.jmax, c.quad()), 1e-2, 0.0,
          CheckKind::Above);
}

// ---- 11: recentering
void criterion_recenter(Ctx& c)
{
    const double lambda = 16.0;
    const double p = make_hls_params(lambda).p();
    std::vector<Vec16> xis = {north_scaled(0.3), north_scaled(-0.5)};
    for (int i = 0; i < 4; ++i) {
        CounterRng rng(c.cfg.seed, 111, static_cast<std::uint64_t>(i));
        Vec16 a = sample_sphere_vec(rng);
        const double s = 0.5 * (i + 1) / 4.0;
        for (double& x : a) x *= s;
        xis.push_back(a);
    }
    for (std::size_t i = 0; i < xis.size(); ++i) {
        const SphereFunction h = normalize_lp(make_extremizer({xis[i], lambda}), p, c.quad());
        const RecenterResult rc = recenter(h, p, c.quad());
        const Vec16 m = center_mass(rc.function, p, c.quad());
        double mn = 0.0;
        for (double x : m) mn += x * x;
        const std::string tag = "[" + std::to_string(i) + "]";
        c.add("recenter.center_mass" + tag, lambda, std::sqrt(mn), 0.0, 1e-8, CheckKind::AtMost);
        c.add("recenter.iterations" + tag, lambda, rc.iterations, 200.0, 0.0, CheckKind::AtMost);
        // constancy checked with the octonionic pullback, independent of the profile shortcut
        const SphereFunction pw = SphereFunction::pointwise([h](const SpherePoint& z) { return h(z); });
        const SphereFunction pulled = conformal_pullback(pw, rc.params, p);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int t = 0; t < 200; ++t) {
            CounterRng rng(c.cfg.seed, 112, static_cast<std::uint64_t>(t));
            const double v = pulled(sample_sphere(rng));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        c.add("recenter.constant" + tag, lambda, (hi - lo) / hi, 0.0, 1e-4, CheckKind::AtMost);
    }
}

// ---- 12: Log-Sobolev
void criterion_log_sobolev(Ctx& c)
{
    const auto one = log_sobolev_pair(project_bispherical(constant_function(1.0), 4, c.quad()), c.quad());
    c.add("log_sobolev.one_lhs", 0, one.lhs, 0.0, 1e-12, CheckKind::Abs);
    c.add("log_sobolev.one_rhs", 0, one.rhs, 0.0, 1e-12, CheckKind::Abs);
    for (double s : {0.05, 0.2}) {
        const auto f = log_sobolev_extremizer(north_scaled(s), c.quad());
        const auto pr = log_sobolev_pair(project_bispherical(f, c.cfg.jmax, c.quad()), c.quad());
        c.add("log_sobolev.extremizer_defect", s, std::abs(pr.lhs - pr.rhs) / std::abs(pr.lhs), 0.0, 1e-3,
              CheckKind::AtMost);
    }
    const auto pert = normalize_lp(
        SphereFunction::zonal([](double r, double x) { return 1.0 + 0.1 * zonal_rx({1, 0}, r, x); }), 2.0, c.quad());
    const auto pp = log_sobolev_pair(project_bispherical(pert, c.cfg.jmax, c.quad()), c.quad());
    c.add("log_sobolev.strict_for_perturbation", 0, pp.lhs, pp.rhs, 0.0, CheckKind::Above);
    MaxErr gap;
    for (int j = 1; j <= 6; ++j)
        for (int k = 0; k <= j; ++k) gap.add(rel(logsob_gap_limit(j, k), logsob_gap(j, k)));
    c.add_max("log_sobolev.gap_limit", 0, gap, 1e-6);
}

// ---- Monte-Carlo cross-checks
void mc_crosschecks(Ctx& c)
{
    const std::size_t n = c.cfg.mc_samples;
    const double S = sphere_measure();
    auto within = [&](std::string name, double param, const McEstimate& e, double reference) {
        c.add(std::move(name), param, e.value, reference, 4.0 * e.stderr_, CheckKind::Abs);
    };
    {
        const double lambda = 12.0;
        const double ref = std::pow(2.0, lambda / 2.0) * eig_K1(0, 0, lambda / 4.0) * S;
        within("mc.hls_constant", lambda, hls_mc(constant_function(1.0), constant_function(1.0), lambda, n, c.cfg.seed), ref);
    }
    {
        const double lambda = 16.0;
        const auto h = make_extremizer({north_scaled(0.3), lambda});
        const double ref = hls_spectral(project_bispherical(h, c.cfg.jmax, c.quad()), lambda).value;
        within("mc.hls_extremizer", lambda, hls_mc(h, h, lambda, n, c.cfg.seed), ref);
    }
    {
        // pullback along a generic axis, evaluated pointwise through the octonionic maps: it keeps
        // the L^p norm and the HLS energy of h
        const double lambda = 16.0, p = make_hls_params(lambda).p();
        CounterRng rng(c.cfg.seed, 113, 0);
        const Vec16 axis = sample_sphere_vec(rng);
        const auto h = normalize_lp(make_extremizer({north_scaled(0.2), lambda}), p, c.quad());
        const auto pw = SphereFunction::pointwise([h](const SpherePoint& z) { return h(z); });
        const auto pulled = conformal_pullback(pw, {0.8, axis}, p);
        within("mc.lp_preserved_by_pullback", lambda,
               integrate_mc([&](const SpherePoint& z) { return std::pow(std::abs(pulled(z)), p); }, n, c.cfg.seed, 3), S);
        const double energy = hls_spectral(project_bispherical(h, c.cfg.jmax, c.quad()), lambda).value;
        within("mc.hls_invariant_under_pullback", lambda, hls_mc(pulled, pulled, lambda, n, c.cfg.seed + 1), energy);
    }
    {
        const double lambda = 16.0, p = make_hls_params(lambda).p();
        const auto h = make_extremizer({north_scaled(0.3), lambda});
        const Vec16 m = center_mass(h, p, c.quad());
        const auto mc = center_mass_mc(h, p, n, c.cfg.seed);
        within("mc.center_mass_axis", lambda, mc[8], m[8]);
        within("mc.center_mass_off_axis", lambda, mc[0], 0.0);
    }
}

struct CriterionDef {
    const char* title;
    double budget;
    void (*run)(Ctx&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"octonion algebra", 5.0, criterion_octonion},
    {"group axioms and metric", 5.0, criterion_group},
    {"cayley identities", 10.0, criterion_cayley},
    {"eigenvalue oracle equivalence", 180.0, criterion_eigen_oracle},
    {"ratio identity", 5.0, criterion_ratio},
    {"bilinear margin", 60.0, criterion_margin},
    {"sharp-constant spectral identity", 1.0, criterion_constants},
    {"intertwining consistency", 1.0, criterion_intertwining},
    {"extremality", 300.0, criterion_extremality},
    {"euler-lagrange residual", 120.0, criterion_euler_lagrange},
    {"recentering", 120.0, criterion_recenter},
    {"log-sobolev", 120.0, criterion_log_sobolev},
};

const char* kind_name(CheckKind k)
{
    switch (k) {
    case CheckKind::Abs: return "abs";
    case CheckKind::Rel: return "rel";
    case CheckKind::RelOrAbs: return "rel_or_abs";
    case CheckKind::AtMost: return "at_most";
    case CheckKind::AtLeast: return "at_least";
    case CheckKind::Below: return "below";
    case CheckKind::Above: return "above";
    }
    return "?";
}

nlohmann::ordered_json num(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

} // namespace

CriterionReport run_criterion(int id, const VerifyConfig& config)
{
    if (id < 1 || id > kCriterionCount) throw DomainError("run_criterion: unknown criterion id");
    const CriterionDef& def = kCriteria[id - 1];
    CriterionReport rep;
    rep.id = id;
    rep.title = def.title;
    rep.budget_seconds = def.budget;
    const auto t0 = std::chrono::steady_clock::now();
    Ctx ctx{config, rep.checks};
    def.run(ctx);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CriterionReport run_mc_crosschecks(const VerifyConfig& config)
{
    CriterionReport rep;
    rep.id = kCriterionCount + 1;
    rep.title = "monte-carlo cross-checks";
    rep.budget_seconds = 120.0;
    const auto t0 = std::chrono::steady_clock::now();
    Ctx ctx{config, rep.checks};
    mc_crosschecks(ctx);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_json(const std::vector<CriterionReport>& reports)
{
    nlohmann::ordered_json root;
    root["schema_version"] = 1;
    bool all = true;
    nlohmann::ordered_json crit = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json cj;
        cj["id"] = r.id;
        cj["title"] = r.title;
        cj["pass"] = r.pass();
        all = all && r.pass();
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) {
            nlohmann::ordered_json x;
            x["check"] = c.check;
            x["lambda_or_alpha"] = num(c.lambda_or_alpha);
            x["value"] = num(c.value);
            x["reference"] = num(c.reference);
            x["abs_err"] = num(c.abs_err);
            x["rel_err"] = num(c.rel_err);
            x["tolerance"] = num(c.tolerance);
            x["kind"] = kind_name(c.kind);
            x["pass"] = c.pass;
            checks.push_back(std::move(x));
        }
        cj["checks"] = std::move(checks);
        crit.push_back(std::move(cj));
    }
    root["pass"] = all;
    root["criteria"] = std::move(crit);
    return root.dump(2) + "\n";
}

std::string report_csv(const std::vector<CriterionReport>& reports)
{
    std::string out = "criterion,check,lambda_or_alpha,value,reference,abs_err,rel_err,tolerance,kind,pass\n";
    char buf[512];
    for (const auto& r : reports)
        for (const auto& c : r.checks) {
            std::snprintf(buf, sizeof buf, "%d,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%s\n", r.id, c.check.c_str(),
                          c.lambda_or_alpha, c.value, c.reference, c.abs_err, c.rel_err, c.tolerance, kind_name(c.kind),
                          c.pass ? "true" : "false");
            out += buf;
        }
    return out;
}

} // namespace octohls
