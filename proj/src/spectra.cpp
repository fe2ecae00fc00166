#include "octohls/spectra.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "json.hpp"
#include "octohls/errors.hpp"
#include "octohls/nilgroup.hpp"
#include "octohls/quadrature.hpp"
#include "octohls/specfun.hpp"

namespace octohls {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfQ = kQ / 2.0;  // 11
const double kLog2Pi8 = std::log(2.0) + 8.0 * std::log(kPi);

// value = sign * exp(lg); sign 0 encodes an exact zero.
struct SLog {
    double lg = 0.0;
    int sign = 1;
};

SLog operator*(SLog a, SLog b) { return {a.lg + b.lg, a.sign * b.sign}; }

SLog slog(double v)
{
    if (v == 0.0) return {0.0, 0};
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
}

double value(SLog a) { return a.sign == 0 ? 0.0 : a.sign * std::exp(a.lg); }

// (x)_n in signed log form; exact zero when a factor vanishes.
SLog log_poch(double x, int n)
{
    SLog r;
    int i = 0;
    for (; i < n && x + i <= 1.0; ++i) {
        if (x + i == 0.0) return {0.0, 0};
        r = r * slog(x + i);
    }
    if (i < n) r.lg += boost::math::lgamma(x + n) - boost::math::lgamma(x + i);
    return r;
}

void check_alpha(double alpha, const char* who)
{
    if (!(alpha > -1.0 && alpha < kQ / 4.0))
        throw DomainError(std::string(who) + ": alpha must lie in (-1, Q/4)");
}

void check_index(int j, int k, const char* who)
{
    if (k < 0 || j < k) throw DomainError(std::string(who) + ": require j >= k >= 0");
}

// 2 pi^8 Gamma(Q/2 - 2 alpha) / (Gamma(j + Q/2 - alpha) Gamma(k + Q/2 - 3 - alpha))
SLog log_prefactor(int j, int k, double alpha)
{
    return {kLog2Pi8 + boost::math::lgamma(kHalfQ - 2.0 * alpha) - boost::math::lgamma(j + kHalfQ - alpha) -
                boost::math::lgamma(k + kHalfQ - 3.0 - alpha),
            1};
}

// Analytic continuation used for lambda(K1^{alpha-1}); alpha > -2 keeps every gamma argument positive.
double k1_unchecked(int j, int k, double alpha)
{
    return value(log_prefactor(j, k, alpha) * log_poch(alpha, j) * log_poch(alpha - 3.0, k));
}

double k2_unchecked(int j, int k, double alpha)
{
    const double s = kHalfQ - 2.0 * alpha;       // c - a - b
    const double P = k + kHalfQ - 3.0 - alpha;   // c - a
    const double R = j + kHalfQ - alpha;         // c - b
    const double e = alpha - 4.0;
    const SLog pre = log_prefactor(j, k, alpha);
    if (j == 0) return value(pre) * (1.0 - s / R - e * s / (P * R));
    // (alpha-4)/(b-1) (alpha-3)_k with b - 1 = k + alpha - 4, pole-free
    const SLog eBv = (k == 0) ? SLog{} : slog(e) * log_poch(alpha - 3.0, k - 1);
    const SLog A = log_poch(alpha, j);
    const SLog Au = log_poch(alpha, j - 1);  // A/(a-1)
    const SLog B = log_poch(alpha - 3.0, k);
    const double t1 = value(pre * A * B);
    const double t2 = -e * s / P * value(pre * Au * B);
    const double t3 = -s / R * value(pre * A * eBv);
    const double t4 = e * s * (s + 1.0) / (P * R) * value(pre * Au * eBv);
    return t1 + t2 + t3 + t4;
}

// Gamma(a)/Gamma(b) for real arguments; zero when b is a pole, DomainError when a is.
double gamma_ratio_signed(double a, double b)
{
    auto is_pole = [](double x) { return x <= 0.0 && x == std::floor(x); };
    if (is_pole(a)) throw DomainError("gamma pole in numerator");
    if (is_pole(b)) return 0.0;
    int sa = 1, sb = 1;
    const double la = boost::math::lgamma(a, &sa);
    const double lb = boost::math::lgamma(b, &sb);
    return sa * sb * std::exp(la - lb);
}

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

double ZonalKernel::operator()(const Octonion& w) const
{
    return eval(oct_re(w), oct_norm2(w), oct_norm2(Octonion::real(1.0) - w));
}

ZonalKernel kernel_K1(double alpha)
{
    return {"K1", [alpha](double, double, double d2) { return std::pow(d2, -alpha); }, alpha};
}

ZonalKernel kernel_K2(double alpha)
{
    return {"K2", [alpha](double, double a2, double d2) { return a2 * std::pow(d2, -alpha); }, alpha};
}

ZonalKernel kernel_constant(double c)
{
    return {"constant", [c](double, double, double) { return c; }, 0.0};
}

std::string to_string(Provenance p) { return p == Provenance::ClosedForm ? "closed-form" : "quadrature"; }

std::string EigenTable::to_csv() const
{
    std::string out = "j,k,alpha,value,provenance\n";
    for (const auto& [key, v] : values)
        out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + fmt17(alpha) + "," + fmt17(v) +
               "," + to_string(provenance) + "\n";
    return out;
}

std::string EigenTable::to_json() const
{
    nlohmann::ordered_json j;
    j["alpha"] = alpha;
    j["provenance"] = to_string(provenance);
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [key, v] : values) vals[std::to_string(key.first) + "," + std::to_string(key.second)] = v;
    j["values"] = vals;
    return j.dump(2);
}

std::vector<EigenTable> eig_quadrature_table(const std::vector<ZonalKernel>& kernels, int jmax,
                                             const QuadratureOptions& opt)
{
    if (jmax < 0) throw DomainError("eig_quadrature: jmax must be nonnegative");
    double amax = 0.0;
    for (const auto& K : kernels) {
        if (!(K.alpha_singular < kQ / 4.0))
            throw DomainError("eig_quadrature: kernel " + K.name + " is not integrable (alpha >= Q/4)");
        amax = std::max(amax, K.alpha_singular);
    }
    const bool singular = amax != 0.0;
    const int nK = static_cast<int>(kernels.size());
    const int nn = jmax + 1;
    const double s7 = std::pow(kPi, 4) / 3.0;
    const double s6 = 16.0 * std::pow(kPi, 3) / 15.0;

    std::vector<double> acc(static_cast<std::size_t>(nK) * nn * nn, 0.0);
    std::vector<double> G(static_cast<std::size_t>(nK) * nn);
    std::vector<double> cheb(nn), jac(nn), kv(nK);
    const QuadratureRule& gj = gauss_jacobi(opt.nodes_phi, 2.5, 2.5);
    const QuadratureRule panel = gauss_legendre(opt.panel_order, 0.0, 1.0);

    // One theta node: inner phi integral per (kernel, n), then the theta factor per k.
    // Returns the absolute kernel mass carried by this node.
    auto theta_node = [&](double theta, double wt) {
        const double r = std::cos(theta);
        const double u = std::cos(2.0 * theta);
        const double hs = 2.0 * std::pow(std::sin(0.5 * theta), 2);  // 1 - r
        std::fill(G.begin(), G.end(), 0.0);
        double mass = 0.0;
        auto phi_node = [&](double x, double s2half, double w) {
            const double d2 = hs * hs + 4.0 * r * s2half;
            gegenbauer3_normalized_all(jmax, x, cheb.data());
            for (int q = 0; q < nK; ++q) {
                const double v = kernels[q].eval(r * x, r * r, d2);
                if (!std::isfinite(v)) throw DomainError("eig_quadrature: kernel overflow near the singularity");
                mass += w * std::fabs(v);
                const double wv = w * v;
                double* g = &G[static_cast<std::size_t>(q) * nn];
                for (int n = 0; n < nn; ++n) g[n] += wv * cheb[n];
            }
        };
        if (!singular || theta * theta * opt.nodes_phi >= 60.0) {
            for (std::size_t b = 0; b < gj.size(); ++b) {
                const double x = gj.x[b];
                phi_node(x, 0.5 * (1.0 - x), gj.w[b] * s6);
            }
        } else {
            // geometric panels from the peak width theta^2/2 out to pi
            double lo = 0.0, hi = std::max(0.5 * theta * theta, 1e-300);
            while (lo < kPi) {
                hi = std::min(hi, kPi);
                for (std::size_t b = 0; b < panel.size(); ++b) {
                    const double phi = lo + (hi - lo) * panel.x[b];
                    const double sp = std::sin(phi);
                    const double sh = std::sin(0.5 * phi);
                    phi_node(std::cos(phi), sh * sh, (hi - lo) * panel.w[b] * std::pow(sp, 6) * s6);
                }
                lo = hi;
                hi = 2.0 * hi;
            }
        }
        for (int n = 0; n < nn; ++n) {
            jacobi33_normalized_all(jmax - n, n, u, jac.data());
            const double rn = std::pow(r, n) * wt;
            for (int q = 0; q < nK; ++q) {
                const double g = G[static_cast<std::size_t>(q) * nn + n] * rn;
                for (int k = 0; k + n <= jmax; ++k)
                    acc[(static_cast<std::size_t>(q) * nn + (n + k)) * nn + k] += g * jac[k];
            }
        }
        return mass * wt;
    };

    double total = 0.0;
    if (!singular) {
        const QuadratureRule gu = gauss_legendre(opt.nodes_theta, -1.0, 1.0);
        for (std::size_t a = 0; a < gu.size(); ++a) {
            const double uu = gu.x[a];
            total += theta_node(0.5 * std::acos(uu), gu.w[a] * std::pow(1.0 - uu * uu, 3) / 256.0 * s7);
        }
    } else {
        const double us = std::cos(2.0 * opt.theta_split);
        const QuadratureRule gu = gauss_legendre(opt.nodes_theta, -1.0, us);
        for (std::size_t a = 0; a < gu.size(); ++a) {
            const double uu = gu.x[a];
            total += theta_node(0.5 * std::acos(uu), gu.w[a] * std::pow(1.0 - uu * uu, 3) / 256.0 * s7);
        }
        double hi = opt.theta_split;
        for (int m = 0; m < opt.max_cells; ++m) {
            const double lo = 0.5 * hi;
            double cell = 0.0;
            for (std::size_t b = 0; b < panel.size(); ++b) {
                const double th = lo + (hi - lo) * panel.x[b];
                const double sc = std::sin(th) * std::cos(th);
                cell += theta_node(th, (hi - lo) * panel.w[b] * std::pow(sc, 7) * s7);
            }
            total += cell;
            hi = lo;
            if (m >= 3 && cell < opt.cell_tolerance * total) break;
        }
    }

    std::vector<EigenTable> out(nK);
    for (int q = 0; q < nK; ++q) {
        out[q].alpha = kernels[q].alpha_singular;
        out[q].provenance = Provenance::Quadrature;
        for (int j = 0; j <= jmax; ++j)
            for (int k = 0; k <= j; ++k)
                out[q].values[{j, k}] = acc[(static_cast<std::size_t>(q) * nn + j) * nn + k];
    }
    return out;
}

double eig_quadrature(const ZonalKernel& K, int j, int k, const QuadratureOptions& opt)
{
    check_index(j, k, "eig_quadrature");
    return eig_quadrature_table({K}, j, opt)[0].values.at({j, k});
}

double eig_K1(int j, int k, double alpha)
{
    check_alpha(alpha, "eig_K1");
    check_index(j, k, "eig_K1");
    return k1_unchecked(j, k, alpha);
}

double eig_K2(int j, int k, double alpha)
{
    check_alpha(alpha, "eig_K2");
    check_index(j, k, "eig_K2");
    return k2_unchecked(j, k, alpha);
}

double eig_K2_naive(int j, int k, double alpha)
{
    check_alpha(alpha, "eig_K2_naive");
    check_index(j, k, "eig_K2_naive");
    const double a = j + alpha, b = k + alpha - 3.0, c = j + k + kHalfQ - 3.0;
    const double e = alpha - 4.0, s = c - a - b;
    const double C = 1.0 - e * s *
                               (1.0 / ((a - 1.0) * (c - a)) + 1.0 / ((b - 1.0) * (c - b)) -
                                e * (s + 1.0) / ((a - 1.0) * (b - 1.0) * (c - a) * (c - b)));
    return C * k1_unchecked(j, k, alpha);
}

double eig_K1_ratio(int j, int k, double alpha)
{
    if (!(alpha > 3.0 && alpha < kQ / 4.0)) throw DomainError("eig_K1_ratio: alpha must lie in (3, Q/4)");
    check_index(j, k, "eig_K1_ratio");
    const double a = j + alpha, b = k + alpha - 3.0, c = j + k + kHalfQ - 3.0;
    const double s = c - a - b;
    // (alpha-4)/(b-1) is 1 at k = 0 for every alpha
    const double e_over_b1 = (k == 0) ? 1.0 : (alpha - 4.0) / (b - 1.0);
    return (alpha - 1.0) * e_over_b1 * s * (s + 1.0) / ((a - 1.0) * (c - a) * (c - b));
}

EigenTable eig_table_closed_form(int jmax, double alpha, bool second_kind)
{
    EigenTable t;
    t.alpha = alpha;
    t.provenance = Provenance::ClosedForm;
    for (int j = 0; j <= jmax; ++j)
        for (int k = 0; k <= j; ++k) t.values[{j, k}] = second_kind ? eig_K2(j, k, alpha) : eig_K1(j, k, alpha);
    return t;
}

MarginTerms bilinear_margin_terms(int j, int k, double alpha)
{
    check_alpha(alpha, "bilinear_margin");
    check_index(j, k, "bilinear_margin");
    MarginTerms m;
    m.lambda1 = k1_unchecked(j, k, alpha);
    m.lambda2 = k2_unchecked(j, k, alpha);
    m.lambda1_lower = k1_unchecked(j, k, alpha - 1.0);
    m.weighted = 2.0 * alpha / (kHalfQ - alpha) * m.lambda1;
    m.value = m.lambda1 + m.lambda2 - m.lambda1_lower - m.weighted;
    m.scale = std::fabs(m.lambda1) + std::fabs(m.lambda2) + std::fabs(m.lambda1_lower) + std::fabs(m.weighted);
    if (m.lambda1 == 0.0 && m.scale > 0.0) m.tag = "limit";
    return m;
}

double bilinear_margin(int j, int k, double alpha) { return bilinear_margin_terms(j, k, alpha).value; }

double intertwining_spectrum(double d, int j, int k)
{
    if (!(d > 0.0 && d < kQ)) throw DomainError("intertwining_spectrum: d must lie in (0, Q)");
    check_index(j, k, "intertwining_spectrum");
    const double p = (kQ + d) / 4.0, m = (kQ - d) / 4.0;
    return gamma_ratio_signed(j + p, j + m) * gamma_ratio_signed(k + p - 3.0, k + m - 3.0);
}

double c_d(double d)
{
    if (!(d > 0.0 && d < kQ)) throw DomainError("c_d: d must lie in (0, Q)");
    const double m = (kQ - d) / 4.0;
    auto is_pole = [](double x) { return x <= 0.0 && x == std::floor(x); };
    if (is_pole(m - 3.0)) throw DomainError("c_d: gamma pole, c_d^{-1} vanishes");
    int s1 = 1, s2 = 1;
    const double lg = boost::math::lgamma(m, &s1) + boost::math::lgamma(m - 3.0, &s2);
    const double log_inv = ((kQ - d) / 2.0 + 1.0) * std::log(2.0) + (kHalfQ - 3.0) * std::log(kPi) +
                           boost::math::lgamma(d / 2.0) - lg;
    return s1 * s2 * std::exp(-log_inv);
}

double logsob_gap_constant()
{
    return std::pow(2.0, kHalfQ + 1.0) * std::pow(kPi, 8) /
           (boost::math::tgamma(kQ / 4.0) * boost::math::tgamma(kQ / 4.0 - 3.0));
}

double logsob_gap(int j, int k)
{
    check_index(j, k, "logsob_gap");
    const double q4 = kQ / 4.0;
    return logsob_gap_constant() *
           (digamma(j + q4) + digamma(k + q4 - 3.0) - digamma(q4) - digamma(q4 - 3.0));
}

double logsob_gap_limit(int j, int k, const std::vector<double>& eps)
{
    check_index(j, k, "logsob_gap_limit");
    if (eps.empty()) throw DomainError("logsob_gap_limit: need at least one epsilon");
    std::vector<double> f;
    for (double e : eps) {
        const double a = kQ / 4.0 - e;
        f.push_back(std::pow(2.0, kHalfQ) * (k1_unchecked(0, 0, a) - k1_unchecked(j, k, a)));
    }
    // Neville extrapolation to eps = 0
    const std::size_t n = eps.size();
    for (std::size_t lvl = 1; lvl < n; ++lvl)
        for (std::size_t i = 0; i + lvl < n; ++i)
            f[i] = (eps[i] * f[i + 1] - eps[i + lvl] * f[i]) / (eps[i] - eps[i + lvl]);
    return f[0];
}

} // namespace octohls
