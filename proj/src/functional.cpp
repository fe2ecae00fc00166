#include "octohls/functional.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "octohls/constants.hpp"
#include "octohls/errors.hpp"
#include "octohls/nilgroup.hpp"
#include "octohls/quadrature.hpp"
#include "octohls/rng.hpp"
#include "octohls/simd.hpp"
#include "octohls/specfun.hpp"
#include "octohls/spectra.hpp"

namespace octohls {

namespace {

// where cayley_inv has no finite preimage
bool at_south_pole(const SpherePoint& z) { return !(oct_norm2(z.zeta2 + Octonion::real(1.0)) > 1e-300); }

constexpr int kNorth = 8;  // index of Re zeta2 in the 16-vector

using Mat16 = Eigen::Matrix<double, 16, 16>;
using Col16 = Eigen::Matrix<double, 16, 1>;

Frame frame_from(const Mat16& A)
{
    Frame f;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) f.m[i * 16 + j] = A(i, j);
    return f;
}

Frame reflect_frame(const Frame& A)  // diag(I, -I) A
{
    Frame out = A;
    for (int i = 8; i < 16; ++i)
        for (int j = 0; j < 16; ++j) out.m[i * 16 + j] = -out.m[i * 16 + j];
    return out;
}

// Frames under which |1 - zeta.conj(eta)| is invariant: identity and diag(I, -I).
int symmetric_frame_sign(const Frame& A)
{
    if (A.distance(Frame::identity()) < 1e-14) return 1;
    if (A.distance(reflect_frame(Frame::identity())) < 1e-14) return -1;
    return 0;
}

double vnorm(const Vec16& v)
{
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

template <class F>
double quad_sum(const SphereRule& rule, F&& f)
{
    double total = 0.0;
    for (int a = 0; a < rule.ntheta(); ++a) {
        double row = 0.0;
        for (int b = 0; b < rule.nphi(); ++b) row += rule.wphi[b] * f(rule.r[a], rule.x[b]);
        total += rule.wtheta[a] * row;
    }
    return total;
}

const SphereRule& rule_for(const SphereQuadratureOptions& opt)
{
    thread_local std::shared_ptr<const SphereRule> keep;
    keep = sphere_rule(opt.ntheta, opt.nphi);
    return *keep;
}

const Profile& require_profile(const SphereFunction& f, const char* who)
{
    if (!f.has_profile()) throw UnsupportedInput(std::string(who) + ": requires a zonal or framed function");
    return f.profile();
}

} // namespace

// ---------------------------------------------------------------- Frame

Frame Frame::identity()
{
    Frame f;
    for (int i = 0; i < 16; ++i) f.m[i * 17] = 1.0;
    return f;
}

bool Frame::is_identity() const { return distance(identity()) == 0.0; }

Vec16 Frame::apply(const Vec16& v) const
{
    Vec16 out{};
    for (int i = 0; i < 16; ++i) {
        double s = 0.0;
        for (int j = 0; j < 16; ++j) s += m[i * 16 + j] * v[j];
        out[i] = s;
    }
    return out;
}

Vec16 Frame::apply_transpose(const Vec16& v) const
{
    Vec16 out{};
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) out[j] += m[i * 16 + j] * v[i];
    return out;
}

double Frame::distance(const Frame& other) const
{
    double d = 0.0;
    for (int i = 0; i < 256; ++i) d = std::max(d, std::abs(m[i] - other.m[i]));
    return d;
}

Frame frame_for(const Vec16& xi)
{
    const double nrm = vnorm(xi);
    if (!(std::abs(nrm - 1.0) < 1e-10)) throw DomainError("frame_for: xi must be a unit vector");
    Vec16 unit = xi;
    for (double& c : unit) c /= nrm;
    const SpherePoint p = SpherePoint::from_vec(unit);

    Mat16 S = Mat16::Zero();  // source columns
    Mat16 T = Mat16::Zero();  // target columns
    for (int i = 0; i < 8; ++i) {
        const Octonion e = Octonion::unit(i, 1.0);
        const Vec16 v = SpherePoint{oct_mul(e, p.zeta1), oct_mul(e, p.zeta2)}.to_vec();
        for (int c = 0; c < 16; ++c) S(c, i) = v[c];
        T(8 + i, i) = 1.0;
    }
    // right multiplication by a unit pair is an isometry, so these columns are orthonormal
    // up to rounding; one modified Gram-Schmidt pass tidies them
    for (int i = 0; i < 8; ++i) {
        for (int q = 0; q < i; ++q) S.col(i) -= S.col(q).dot(S.col(i)) * S.col(q);
        S.col(i).normalize();
    }
    std::vector<bool> used(16, false);
    for (int c = 0; c < 8; ++c) {
        int best = -1;
        double best_norm = -1.0;
        Col16 best_res;
        for (int cand = 0; cand < 16; ++cand) {
            if (used[cand]) continue;
            Col16 res = Col16::Unit(cand);
            for (int q = 0; q < 8 + c; ++q) res -= S.col(q).dot(res) * S.col(q);
            const double rn = res.norm();
            if (rn > best_norm + 1e-12) {  // near-ties resolve to the lowest index
                best = cand;
                best_norm = rn;
                best_res = res;
            }
        }
        used[best] = true;
        S.col(8 + c) = best_res / best_norm;
        T(c, 8 + c) = 1.0;
    }
    Mat16 A = T * S.transpose();
    if (A.determinant() < 0.0) {
        S.col(15) = -S.col(15);
        A = T * S.transpose();
    }
    return frame_from(A);
}

// ---------------------------------------------------------------- SphereFunction

ProfileCoords profile_coords(const Vec16& v)
{
    double r2 = 0.0;
    for (int c = 8; c < 16; ++c) r2 += v[c] * v[c];
    const double r = std::sqrt(r2);
    if (r == 0.0) return {0.0, 1.0};
    return {r, std::clamp(v[kNorth] / r, -1.0, 1.0)};
}

ProfileCoords profile_coords(const SpherePoint& zeta)
{
    const double r = oct_norm(zeta.zeta2);
    if (r == 0.0) return {0.0, 1.0};
    return {r, std::clamp(zeta.zeta2[0] / r, -1.0, 1.0)};
}

SphereFunction SphereFunction::pointwise(PointFunction f)
{
    SphereFunction s;
    s.f_ = std::move(f);
    return s;
}

SphereFunction SphereFunction::zonal(Profile g)
{
    SphereFunction s;
    s.g_ = std::move(g);
    return s;
}

SphereFunction SphereFunction::framed(Profile g, const Frame& A)
{
    if (A.is_identity()) return zonal(std::move(g));
    SphereFunction s;
    s.g_ = std::move(g);
    s.framed_ = true;
    s.frame_ = A;
    return s;
}

double SphereFunction::operator()(const SpherePoint& zeta) const
{
    if (g_) {
        if (!framed_) {
            const auto pc = profile_coords(zeta);
            return g_(pc.r, pc.x);
        }
        const auto pc = profile_coords(frame_.apply(zeta.to_vec()));
        return g_(pc.r, pc.x);
    }
    if (f_) return f_(zeta);
    throw PreconditionError("SphereFunction: empty");
}

SphereFunction SphereFunction::scaled(double c) const
{
    SphereFunction s = *this;
    if (g_) {
        Profile g = g_;
        s.g_ = [g, c](double r, double x) { return c * g(r, x); };
    }
    if (f_) {
        PointFunction f = f_;
        s.f_ = [f, c](const SpherePoint& z) { return c * f(z); };
    }
    return s;
}

SphereFunction constant_function(double c)
{
    return SphereFunction::zonal([c](double, double) { return c; });
}

SphereFunction zonal_harmonic(int j, int k)
{
    if (k < 0 || j < k) throw DomainError("zonal_harmonic: require j >= k >= 0");
    return SphereFunction::zonal([j, k](double r, double x) { return zonal_rx({j, k}, r, x); });
}

Vec16 north_scaled(double s)
{
    Vec16 v{};
    v[kNorth] = s;
    return v;
}

// ---------------------------------------------------------------- extremizers

namespace {

void check_extremizer(const ExtremizerParams& p)
{
    make_hls_params(p.lambda);
    if (!(vnorm(p.xi) < 1.0)) throw DomainError("extremizer: require |xi| < 1");
}

} // namespace

namespace {

Profile extremizer_profile(double s, double e)
{
    return [s, e](double r, double x) {
        // |1 - s r e^{i phi}|^2 written to avoid cancellation near r x = 1/s
        const double sr = s * r;
        const double d2 = (1.0 - sr) * (1.0 - sr) + 2.0 * sr * (1.0 - x);
        return std::pow(d2, e);
    };
}

SphereFunction framed_along(Profile g, const Vec16& xi, double s)
{
    if (s == 0.0) return SphereFunction::zonal(std::move(g));
    Vec16 unit = xi;
    for (double& c : unit) c /= s;
    return SphereFunction::framed(std::move(g), frame_for(unit));
}

} // namespace

double extremizer_eval(const ExtremizerParams& params, const SpherePoint& zeta)
{
    check_extremizer(params);
    const SpherePoint xi = SpherePoint::from_vec(params.xi);
    const Octonion w = pair_product(xi, zeta);
    const double d2 = oct_norm2(Octonion::real(1.0) - w);
    return std::pow(d2, -(2.0 * kQ - params.lambda) / 4.0);
}

SphereFunction make_extremizer(const ExtremizerParams& params)
{
    check_extremizer(params);
    const double s = vnorm(params.xi);
    return framed_along(extremizer_profile(s, -(2.0 * kQ - params.lambda) / 4.0), params.xi, s);
}

SphereFunction log_sobolev_extremizer(const Vec16& xi, const SphereQuadratureOptions& opt)
{
    const double s = vnorm(xi);
    if (!(s < 1.0)) throw DomainError("log_sobolev_extremizer: require |xi| < 1");
    return normalize_lp(framed_along(extremizer_profile(s, -kQ / 4.0), xi, s), 2.0, opt);
}

// ---------------------------------------------------------------- integrals

double integrate(const SphereFunction& f, const SphereQuadratureOptions& opt)
{
    const Profile& g = require_profile(f, "integrate");
    return quad_sum(rule_for(opt), g);
}

double lp_norm(const SphereFunction& f, double p, const SphereQuadratureOptions& opt)
{
    const Profile& g = require_profile(f, "lp_norm");
    const double s = quad_sum(rule_for(opt), [&](double r, double x) { return std::pow(std::abs(g(r, x)), p); });
    return std::pow(s, 1.0 / p);
}

SphereFunction normalize_lp(const SphereFunction& f, double p, const SphereQuadratureOptions& opt)
{
    const double n = lp_norm(f, p, opt);
    if (!(n > 0.0)) throw PreconditionError("normalize_lp: zero function");
    return f.scaled(std::pow(sphere_measure(), 1.0 / p) / n);
}

McEstimate integrate_mc(const std::function<double(const SpherePoint&)>& f, std::size_t n, std::uint64_t seed,
                        std::uint64_t stream)
{
    if (n < 2) throw PreconditionError("integrate_mc: need at least two samples");
    double mean = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, stream, i);
        const double v = f(sample_sphere(rng));
        const double d = v - mean;
        mean += d / static_cast<double>(i + 1);
        m2 += d * (v - mean);
    }
    const double S = sphere_measure();
    const double var = m2 / static_cast<double>(n - 1);
    return {S * mean, S * std::sqrt(var / static_cast<double>(n))};
}

// ---------------------------------------------------------------- bispherical projection

double BisphericalFunction::total_norm2() const
{
    double s = 0.0;
    for (const auto& [key, v] : norm2) s += v;
    return s;
}

double BisphericalFunction::parseval_defect() const
{
    return std::abs(total_norm2() - l2_quadrature) / l2_quadrature;
}

double BisphericalFunction::eval(double r, double x) const
{
    double s = 0.0;
    for (const auto& [key, c] : coeff) s += c * zonal_rx({key.first, key.second}, r, x);
    return s;
}

BisphericalFunction project_bispherical(const SphereFunction& f, int jmax, const SphereQuadratureOptions& opt)
{
    if (jmax < 0) throw DomainError("project_bispherical: jmax must be nonnegative");
    if (!f.has_profile()) throw UnsupportedInput("project_bispherical: input is not zonal");
    // identity frame, or diag(I,-I) which maps x -> -x and multiplies Zhat_{j,k} by (-1)^{j-k}
    const int sign = symmetric_frame_sign(f.frame());
    if (sign == 0) throw UnsupportedInput("project_bispherical: input is not zonal about the north pole");

    const SphereRule& rule = rule_for(opt);
    const int nt = rule.ntheta(), np = rule.nphi(), J = jmax + 1;
    const Profile& g = f.profile();

    std::vector<double> F(static_cast<std::size_t>(nt) * np);
    double l2 = 0.0;
    for (int a = 0; a < nt; ++a) {
        double row = 0.0;
        for (int b = 0; b < np; ++b) {
            const double v = g(rule.r[a], rule.x[b]);
            if (!std::isfinite(v)) throw DomainError("project_bispherical: non-finite function value");
            F[static_cast<std::size_t>(a) * np + b] = v;
            row += rule.wphi[b] * v * v;
        }
        l2 += rule.wtheta[a] * row;
    }

    std::vector<double> C(static_cast<std::size_t>(J) * np);  // C[n*np + b]
    std::vector<double> tmp(J);
    for (int b = 0; b < np; ++b) {
        gegenbauer3_normalized_all(jmax, rule.x[b], tmp.data());
        for (int n = 0; n < J; ++n) C[static_cast<std::size_t>(n) * np + b] = tmp[n];
    }
    std::vector<double> H(J, 0.0);
    for (int n = 0; n < J; ++n)
        for (int b = 0; b < np; ++b) H[n] += rule.wphi[b] * C[static_cast<std::size_t>(n) * np + b] * C[static_cast<std::size_t>(n) * np + b];

    // G[a*J + n] = sum_b wphi F C_n
    std::vector<double> G(static_cast<std::size_t>(nt) * J, 0.0);
    for (int a = 0; a < nt; ++a)
        for (int n = 0; n < J; ++n) {
            double s = 0.0;
            const double* Fa = &F[static_cast<std::size_t>(a) * np];
            const double* Cn = &C[static_cast<std::size_t>(n) * np];
            for (int b = 0; b < np; ++b) s += rule.wphi[b] * Fa[b] * Cn[b];
            G[static_cast<std::size_t>(a) * J + n] = s;
        }

    BisphericalFunction out;
    out.jmax = jmax;
    out.l2_quadrature = l2;
    out.pointwise = f;
    std::vector<double> num(J), den(J), P(J);
    for (int n = 0; n < J; ++n) {
        const int kmax = jmax - n;
        std::fill(num.begin(), num.end(), 0.0);
        std::fill(den.begin(), den.end(), 0.0);
        for (int a = 0; a < nt; ++a) {
            jacobi33_normalized_all(kmax, n, rule.u[a], P.data());
            const double rn = std::pow(rule.r[a], n);
            const double ga = G[static_cast<std::size_t>(a) * J + n];
            for (int k = 0; k <= kmax; ++k) {
                const double z = rn * P[k];
                num[k] += rule.wtheta[a] * z * ga;
                den[k] += rule.wtheta[a] * z * z;
            }
        }
        const double s = (sign < 0 && n % 2 == 1) ? -1.0 : 1.0;
        for (int k = 0; k <= kmax; ++k) {
            const double dd = den[k] * H[n];
            out.coeff[{n + k, k}] = s * num[k] / dd;
            out.norm2[{n + k, k}] = num[k] * num[k] / dd;
        }
    }
    return out;
}

// ---------------------------------------------------------------- HLS functional

SpectralValue hls_spectral(const BisphericalFunction& f, double lambda)
{
    make_hls_params(lambda);
    const double alpha = lambda / 4.0;
    const double scale = std::pow(2.0, lambda / 2.0);
    SpectralValue out;
    for (const auto& [key, n2] : f.norm2) out.value += scale * eig_K1(key.first, key.second, alpha) * n2;
    // eigenvalues beyond jmax are bounded by lambda_{jmax+1,0}, which decays in j
    const double missing = std::max(0.0, f.l2_quadrature - f.total_norm2());
    out.tail_bound = scale * std::abs(eig_K1(f.jmax + 1, 0, alpha)) * missing;
    return out;
}

SpectralValue hls_quotient(const SphereFunction& f, double lambda, int jmax, const SphereQuadratureOptions& opt)
{
    const double p = make_hls_params(lambda).p();
    const auto F = project_bispherical(f, jmax, opt);
    SpectralValue s = hls_spectral(F, lambda);
    const double n = lp_norm(f, p, opt);
    return {s.value / (n * n), s.tail_bound / (n * n)};
}

namespace {

// Tangent frame at zeta: u[i] = L_zeta^T e_{i+1}, i = 0..6, orthonormal and orthogonal to zeta,
// where L_zeta(eta) = zeta . conj(eta) is a co-isometry R^16 -> O.
std::array<Vec16, 7> vertical_frame(const SpherePoint& zeta)
{
    std::array<Vec16, 7> u{};
    for (int c = 0; c < 8; ++c) {
        const Octonion e = oct_conj(Octonion::unit(c, 1.0));
        const Octonion w1 = oct_mul(zeta.zeta1, e), w2 = oct_mul(zeta.zeta2, e);
        for (int i = 0; i < 7; ++i) {
            u[i][c] = w1[i + 1];
            u[i][8 + c] = w2[i + 1];
        }
    }
    return u;
}

struct GaugeProposal {
    double beta;     // density ~ N^{-beta} on N < 1
    double log_norm; // log of the normalizing constant of N^{-beta} 1[N<1] on R^15

    explicit GaugeProposal(double lambda) : beta(0.5 * (lambda + kQ))
    {
        // gauge-sphere measure from \int exp(-N^4) = sigma Gamma(Q/4)/4, with the integral
        // factoring as (|S^7| / 4) pi^{7/2}
        const double s7 = std::pow(M_PI, 4) / 3.0;
        const double log_sigma = std::log(s7) + 3.5 * std::log(M_PI) - std::lgamma(kQ / 4.0);
        log_norm = -(log_sigma - std::log(kQ - beta));
    }

    // log density of tangent coordinates with horizontal norm bh and vertical norm av
    double log_density(double bh, double av) const
    {
        const double N4 = bh * bh * bh * bh + av * av;
        if (N4 >= 1.0) return -std::numeric_limits<double>::infinity();
        return log_norm - 0.25 * beta * std::log(N4);
    }
};

// geodesic coordinates of eta about zeta: tangent vector t with |t| = angle
double tangent_of(const Vec16& z, const Vec16& e, Vec16& t)
{
    double c = 0.0;
    for (int q = 0; q < 16; ++q) c += z[q] * e[q];
    double s2 = 0.0;
    for (int q = 0; q < 16; ++q) {
        t[q] = e[q] - c * z[q];
        s2 += t[q] * t[q];
    }
    const double sn = std::sqrt(s2);
    const double psi = std::atan2(sn, c);
    const double k = sn > 0.0 ? psi / sn : 1.0;
    for (double& x : t) x *= k;
    return psi;
}

} // namespace

McEstimate hls_mc(const SphereFunction& f, const SphereFunction& g, double lambda, std::size_t n, std::uint64_t seed)
{
    make_hls_params(lambda);
    if (n < 2) throw PreconditionError("hls_mc: need at least two samples");
    const double S = sphere_measure();
    const double kscale = std::pow(2.0, lambda / 2.0);
    const GaugeProposal prop(lambda);

    constexpr std::size_t B = 256;
    std::vector<double> zs(16 * B), es(16 * B), re(B), ab(B), d2(B), logq(B), fg(B), d2_near(B);
    double mean = 0.0, m2 = 0.0;
    std::size_t count = 0;
    for (std::size_t start = 0; start < n; start += B) {
        const std::size_t m = std::min(B, n - start);
        for (std::size_t i = 0; i < m; ++i) {
            CounterRng rng(seed, 1, start + i);
            const Vec16 z = sample_sphere_vec(rng);
            const SpherePoint zp = SpherePoint::from_vec(z);
            const auto u = vertical_frame(zp);
            Vec16 e;
            if (rng.uniform() < 0.5) {
                e = sample_sphere_vec(rng);
            } else {
                // omega on the gauge sphere: normalize a draw with density exp(-|b|^4 - |a|^2)
                Vec16 b;
                for (double& x : b) x = rng.normal();
                double bz = 0.0;
                for (int q = 0; q < 16; ++q) bz += b[q] * z[q];
                for (int q = 0; q < 16; ++q) b[q] -= bz * z[q];
                for (int k = 0; k < 7; ++k) {
                    double bu = 0.0;
                    for (int q = 0; q < 16; ++q) bu += b[q] * u[k][q];
                    for (int q = 0; q < 16; ++q) b[q] -= bu * u[k][q];
                }
                double bn = 0.0;
                for (double x : b) bn += x * x;
                bn = std::sqrt(bn);
                // |b|^4 ~ Gamma(2) for density rho^7 exp(-rho^4)
                const double rho = std::pow(-std::log(rng.uniform() * rng.uniform()), 0.25);
                std::array<double, 7> a;
                for (double& x : a) x = rng.normal() * M_SQRT1_2;
                double an2 = 0.0;
                for (double x : a) an2 += x * x;
                const double N = std::pow(rho * rho * rho * rho + an2, 0.25);
                // radius r ~ r^{Q-1-beta} on [0,1]; the dilation acts as (r/N, (r/N)^2)
                const double r = std::pow(rng.uniform(), 1.0 / (kQ - prop.beta));
                const double sh = r / N, sv = sh * sh;
                Vec16 t{};
                for (int q = 0; q < 16; ++q) t[q] = sh * rho * b[q] / bn;
                for (int k = 0; k < 7; ++k)
                    for (int q = 0; q < 16; ++q) t[q] += sv * a[k] * u[k][q];
                double tn = 0.0;
                for (double x : t) tn += x * x;
                tn = std::sqrt(tn);
                const double ct = std::cos(tn), st = tn > 0.0 ? std::sin(tn) / tn : 1.0;
                for (int q = 0; q < 16; ++q) e[q] = ct * z[q] + st * t[q];
            }
            // mixture density at e
            Vec16 t;
            const double psi = tangent_of(z, e, t);
            double av2 = 0.0;
            for (int k = 0; k < 7; ++k) {
                double tu = 0.0;
                for (int q = 0; q < 16; ++q) tu += t[q] * u[k][q];
                av2 += tu * tu;
            }
            const double bh = std::sqrt(std::max(0.0, psi * psi - av2));
            const double log_uniform = std::log(0.5 / S);
            double log_local = -std::numeric_limits<double>::infinity();
            if (psi > 0.0) log_local = std::log(0.5) + prop.log_density(bh, std::sqrt(av2)) + 14.0 * std::log(psi / std::sin(psi));
            const double lmax = std::max(log_uniform, log_local);
            logq[i] = lmax + std::log(std::exp(log_uniform - lmax) + std::exp(log_local - lmax));
            // |1 - w|^2 = (2 sin^2(psi/2))^2 + sin^2(psi) |a|^2 / psi^2, free of cancellation near zeta
            d2_near[i] = -1.0;
            if (psi < 1e-2) {
                const double h = 2.0 * std::sin(0.5 * psi) * std::sin(0.5 * psi);
                const double sp = psi > 0.0 ? std::sin(psi) / psi : 1.0;
                d2_near[i] = h * h + sp * sp * av2;
            }
            for (int q = 0; q < 16; ++q) {
                zs[q * m + i] = z[q];
                es[q * m + i] = e[q];
            }
            fg[i] = f(zp) * g(SpherePoint::from_vec(e));
        }
        simd::pair_products(zs.data(), es.data(), re.data(), ab.data(), d2.data(), m);
        for (std::size_t i = 0; i < m; ++i) {
            const double dd = d2_near[i] >= 0.0 ? d2_near[i] : d2[i];
            const double v =
                (dd > 0.0) ? S * fg[i] * std::exp(std::log(kscale) - 0.25 * lambda * std::log(dd) - logq[i]) : 0.0;
            ++count;
            const double d = v - mean;
            mean += d / static_cast<double>(count);
            m2 += d * (v - mean);
        }
    }
    return {mean, std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count))};
}

// ---------------------------------------------------------------- Euler-Lagrange, second variation

double el_residual_function(const SphereFunction& h, double lambda, int jmax, const SphereQuadratureOptions& opt)
{
    const double p = make_hls_params(lambda).p();
    const auto H = project_bispherical(h, jmax, opt);
    const int sign = symmetric_frame_sign(h.frame());
    const Profile& g = h.profile();
    const double scale = std::pow(2.0, lambda / 2.0);
    std::map<std::pair<int, int>, double> eig;
    for (const auto& [key, c] : H.coeff) eig[key] = scale * eig_K1(key.first, key.second, lambda / 4.0);

    std::vector<double> ratio;
    ratio.reserve(100);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double r = std::cos((i + 0.5) * M_PI / 20.0);
            const double x = std::cos((j + 0.5) * M_PI / 10.0);
            // sample in the profile's own coordinates; T commutes with the frame here
            double T = 0.0;
            for (const auto& [key, c] : H.coeff) {
                const double cs = (sign < 0 && (key.first - key.second) % 2 == 1) ? -c : c;
                T += eig.at(key) * cs * zonal_rx({key.first, key.second}, r, x);
            }
            ratio.push_back(T / std::pow(g(r, x), p - 1.0));
        }
    double mean = 0.0;
    for (double v : ratio) mean += v;
    mean /= static_cast<double>(ratio.size());
    double var = 0.0;
    for (double v : ratio) var += (v - mean) * (v - mean);
    var /= static_cast<double>(ratio.size());
    return std::sqrt(var) / std::abs(mean);
}

double el_residual(const ExtremizerParams& params, int jmax, const SphereQuadratureOptions& opt)
{
    const auto hp = make_hls_params(params.lambda);
    if (!hp.sharp_regime()) throw DomainError("el_residual: require 12 <= lambda < Q");
    return el_residual_function(make_extremizer(params), params.lambda, jmax, opt);
}

double second_variation(const SphereFunction& h, const SphereFunction& phi, double lambda, int jmax,
                        const SphereQuadratureOptions& opt)
{
    const double p = make_hls_params(lambda).p();
    if (!h.is_zonal() || !phi.is_zonal()) throw UnsupportedInput("second_variation: requires zonal h and phi");
    const SphereRule& rule = rule_for(opt);
    const Profile& gh = h.profile();
    const Profile& gp = phi.profile();
    const double c1 = quad_sum(rule, [&](double r, double x) { return std::pow(gh(r, x), p - 1.0) * gp(r, x); });
    const double a1 = quad_sum(rule, [&](double r, double x) { return std::pow(gh(r, x), 2.0 * p - 2.0); });
    const double a2 = quad_sum(rule, [&](double r, double x) { return gp(r, x) * gp(r, x); });
    if (std::abs(c1) > 1e-6 * std::sqrt(a1 * a2))
        throw PreconditionError("second_variation: constraint \\int h^{p-1} phi = 0 violated");

    auto energy = [&](const SphereFunction& f) { return hls_spectral(project_bispherical(f, jmax, opt), lambda).value; };
    const double hp = quad_sum(rule, [&](double r, double x) { return std::pow(gh(r, x), p); });
    const double hphi = quad_sum(rule, [&](double r, double x) { return std::pow(gh(r, x), p - 2.0) * gp(r, x) * gp(r, x); });
    return energy(phi) * hp - (p - 1.0) * energy(h) * hphi;
}

// ---------------------------------------------------------------- center of mass

Vec16 center_mass(const SphereFunction& h, double p, const SphereQuadratureOptions& opt)
{
    const Profile& g = require_profile(h, "center_mass");
    // the profile integral only has a component along the frame's north axis
    const double m = quad_sum(rule_for(opt), [&](double r, double x) { return r * x * std::pow(std::abs(g(r, x)), p); });
    return h.frame().apply_transpose(north_scaled(m));
}

std::array<McEstimate, 16> center_mass_mc(const SphereFunction& h, double p, std::size_t n, std::uint64_t seed)
{
    if (n < 2) throw PreconditionError("center_mass_mc: need at least two samples");
    std::array<double, 16> mean{}, m2{};
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, 2, i);
        const Vec16 z = sample_sphere_vec(rng);
        const double w = std::pow(std::abs(h(SpherePoint::from_vec(z))), p);
        for (int q = 0; q < 16; ++q) {
            const double v = z[q] * w;
            const double d = v - mean[q];
            mean[q] += d / static_cast<double>(i + 1);
            m2[q] += d * (v - mean[q]);
        }
    }
    const double S = sphere_measure();
    std::array<McEstimate, 16> out;
    for (int q = 0; q < 16; ++q)
        out[q] = {S * mean[q], S * std::sqrt(m2[q] / static_cast<double>(n - 1) / static_cast<double>(n))};
    return out;
}

// ---------------------------------------------------------------- conformal maps

SpherePoint sigma_dilation(double delta, const SpherePoint& zeta)
{
    if (!(delta > 0.0)) throw DomainError("sigma_dilation: delta must be positive");
    if (at_south_pole(zeta)) throw DomainError("sigma_dilation: south pole is excluded");
    return cayley(dilate(delta, cayley_inv(zeta)));
}

double sigma_jacobian(double delta, const SpherePoint& zeta)
{
    if (!(delta > 0.0)) throw DomainError("sigma_jacobian: delta must be positive");
    if (at_south_pole(zeta)) throw DomainError("sigma_jacobian: south pole is excluded");
    const GroupElement u = cayley_inv(zeta);
    return jac_cayley(dilate(delta, u)) * std::pow(delta, kQ) * jac_cayley_inv(zeta);
}

SigmaImage sigma_profile(double delta, double r, double x)
{
    using C = std::complex<double>;
    if (!(delta > 0.0)) throw DomainError("sigma_profile: delta must be positive");
    // On the complex line of zeta2, C^{-1} is m = (1-w)/(1+w) = |z|^2 - i t and S_delta scales m by
    // delta^2, so sigma is the Moebius map below. w = -1 is the excluded point of C^{-1}.
    const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
    const C w(r * x, r * sx);
    if (!(std::norm(1.0 + w) > 1e-300)) throw DomainError("sigma_profile: south pole is excluded");
    const double d2 = delta * delta;
    const C den = (1.0 + w) + d2 * (1.0 - w);
    const C w2 = ((1.0 + w) - d2 * (1.0 - w)) / den;
    const double r2 = std::min(1.0, std::abs(w2));
    const double x2 = r2 > 0.0 ? std::clamp(w2.real() / std::abs(w2), -1.0, 1.0) : 1.0;
    return {r2, x2, std::pow(2.0 * delta / std::abs(den), kQ)};
}

namespace {

void check_conformal(const ConformalParams& p)
{
    if (!(p.delta > 0.0)) throw DomainError("conformal: delta must be positive");
    if (!(std::abs(vnorm(p.xi) - 1.0) < 1e-10)) throw DomainError("conformal: xi must be a unit vector");
}

SpherePoint rotate(const Frame& A, const SpherePoint& z) { return SpherePoint::from_vec(A.apply(z.to_vec())); }
SpherePoint rotate_back(const Frame& A, const SpherePoint& z)
{
    return SpherePoint::from_vec(A.apply_transpose(z.to_vec()));
}

} // namespace

SpherePoint conformal_map(const ConformalParams& params, const SpherePoint& zeta)
{
    check_conformal(params);
    const Frame A = frame_for(params.xi);
    return rotate_back(A, sigma_dilation(params.delta, rotate(A, zeta)));
}

SpherePoint conformal_map_inverse(const ConformalParams& params, const SpherePoint& zeta)
{
    check_conformal(params);
    const Frame A = frame_for(params.xi);
    return rotate_back(A, sigma_dilation(1.0 / params.delta, rotate(A, zeta)));
}

double conformal_jacobian(const ConformalParams& params, const SpherePoint& zeta)
{
    check_conformal(params);
    return sigma_jacobian(params.delta, rotate(frame_for(params.xi), zeta));
}

namespace {

// J_{sigma_d}(r,x)^{1/p} g(sigma_d(r,x))
Profile pulled_profile(const Profile& g, double d, double p)
{
    return [g, d, p](double r, double x) {
        const SigmaImage s = sigma_profile(d, r, x);
        return std::pow(s.jac, 1.0 / p) * g(s.r, s.x);
    };
}

} // namespace

SphereFunction conformal_pullback(const SphereFunction& h, const ConformalParams& params, double p)
{
    check_conformal(params);
    if (!(p > 0.0)) throw DomainError("conformal_pullback: p must be positive");
    const Frame A = frame_for(params.xi);
    if (h.has_profile()) {
        const Frame Ah = h.frame();
        // gamma^{-1} = A^T sigma_{1/delta} A, and diag(I,-I) sigma_d diag(I,-I) = sigma_{1/d}
        if (Ah.distance(A) < 1e-12) return SphereFunction::framed(pulled_profile(h.profile(), 1.0 / params.delta, p), Ah);
        if (Ah.distance(reflect_frame(A)) < 1e-12)
            return SphereFunction::framed(pulled_profile(h.profile(), params.delta, p), Ah);
    }
    const double dinv = 1.0 / params.delta;
    return SphereFunction::pointwise([h, A, dinv, p](const SpherePoint& zeta) {
        const SpherePoint az = rotate(A, zeta);
        return std::pow(sigma_jacobian(dinv, az), 1.0 / p) * h(rotate_back(A, sigma_dilation(dinv, az)));
    });
}

// ---------------------------------------------------------------- recentering

RecenterResult recenter(const SphereFunction& h, double p, const SphereQuadratureOptions& opt)
{
    const Profile& g = require_profile(h, "recenter");
    const SphereRule& rule = rule_for(opt);
    const double S = sphere_measure();
    double mass = 0.0, gmin = std::numeric_limits<double>::infinity();
    for (int a = 0; a < rule.ntheta(); ++a)
        for (int b = 0; b < rule.nphi(); ++b) {
            const double v = g(rule.r[a], rule.x[b]);
            gmin = std::min(gmin, v);
            mass += rule.weight(a, b) * std::pow(std::abs(v), p);
        }
    if (!(gmin > 0.0)) throw PreconditionError("recenter: h must be positive");
    if (std::abs(mass - S) > 1e-8 * S) throw PreconditionError("recenter: h must satisfy \\int h^p = |S|");

    // For a framed profile the center of mass lies on the axis a = A^T north, and pulling back
    // along a keeps the profile form; the map F reduces to one scalar equation in log(delta).
    const Frame Ah = h.frame();
    const Vec16 axis = Ah.apply_transpose(north_scaled(1.0));
    auto G = [&](double s) {
        const double d = std::exp(s);
        return quad_sum(rule, [&](double r, double x) {
            const SigmaImage im = sigma_profile(d, r, x);
            return r * x * im.jac * std::pow(std::abs(g(im.r, im.x)), p);
        });
    };

    constexpr double tol = 1e-11;
    constexpr int cap = 200;
    double s = 0.0;
    double Gs = G(s);
    int it = 0;
    while (std::abs(Gs) > tol) {
        if (it >= cap) throw ConvergenceError("recenter: iteration cap reached", std::abs(Gs), it);
        ++it;
        const double hstep = 1e-5;
        const double dG = (G(s + hstep) - G(s - hstep)) / (2.0 * hstep);
        if (!(std::abs(dG) > 0.0) || !std::isfinite(dG))
            throw ConvergenceError("recenter: singular derivative", std::abs(Gs), it);
        double step = -Gs / dG;
        double beta = 1.0;
        double s_new = s + step, G_new = G(s_new);
        // residual-norm line search with damping factor 0.5
        int halvings = 0;
        while (!(std::abs(G_new) < std::abs(Gs)) && halvings < 40) {
            beta *= 0.5;
            s_new = s + beta * step;
            G_new = G(s_new);
            ++halvings;
        }
        if (!(std::abs(G_new) < std::abs(Gs))) throw ConvergenceError("recenter: line search failed", std::abs(Gs), it);
        s = s_new;
        Gs = G_new;
    }

    RecenterResult out;
    const double d = std::exp(s);  // sigma_d acts on the profile
    Vec16 xi = axis;
    double delta = 1.0 / d;
    if (delta > 1.0) {
        delta = d;
        for (double& c : xi) c = -c;
    }
    out.params = {delta, xi};
    out.function = SphereFunction::framed(pulled_profile(g, d, p), Ah);
    out.residual = std::abs(Gs);
    out.iterations = it;
    return out;
}

// ---------------------------------------------------------------- Log-Sobolev

LogSobolevPair log_sobolev_pair(const BisphericalFunction& f, const SphereQuadratureOptions& opt)
{
    if (!f.pointwise || !f.pointwise->has_profile())
        throw UnsupportedInput("log_sobolev_pair: requires the projected function's profile");
    const double S = sphere_measure();
    if (std::abs(f.l2_quadrature - S) > 1e-8 * S) throw PreconditionError("log_sobolev_pair: require \\int f^2 = |S|");
    const Profile& g = f.pointwise->profile();
    const SphereRule& rule = rule_for(opt);
    double ent = 0.0;
    for (int a = 0; a < rule.ntheta(); ++a)
        for (int b = 0; b < rule.nphi(); ++b) {
            const double v = g(rule.r[a], rule.x[b]);
            if (v < 0.0) throw PreconditionError("log_sobolev_pair: f must be nonnegative");
            const double v2 = v * v;
            if (v2 > 0.0) ent += rule.weight(a, b) * v2 * std::log(v2);
        }
    LogSobolevPair out;
    for (const auto& [key, n2] : f.norm2)
        if (key != std::make_pair(0, 0)) out.lhs += 2.0 * logsob_gap(key.first, key.second) * n2;
    out.rhs = C_logsobolev() * ent;
    return out;
}

} // namespace octohls
