#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "octohls/cayley.hpp"

namespace octohls {

// Orthogonal 16x16 matrix, row-major, acting on O^2 = R^16.
struct Frame {
    std::array<double, 256> m{};

    static Frame identity();
    bool is_identity() const;
    Vec16 apply(const Vec16& v) const;
    Vec16 apply_transpose(const Vec16& v) const;
    double distance(const Frame& other) const;  // max-abs entry difference
};

// Orthogonal A (det +1) with A xi = north pole and A V_xi = V_north, where
// V_xi = {(u xi1, u xi2) : u in O}: (e_i xi1, e_i xi2) -> (0, e_i), and a pivoted
// Gram-Schmidt completion of V_xi^perp -> (e_i, 0). xi must be a unit vector.
Frame frame_for(const Vec16& xi);

// r = |zeta2| = cos(theta), x = Re zeta2 / |zeta2| = cos(phi)
struct ProfileCoords {
    double r;
    double x;
};
ProfileCoords profile_coords(const SpherePoint& zeta);
ProfileCoords profile_coords(const Vec16& v);

using Profile = std::function<double(double r, double x)>;

// Sphere function with optional axial structure: f(zeta) = g(A zeta) for a profile g of
// (r, x). Identity frame means zonal about the north pole.
class SphereFunction {
public:
    SphereFunction() = default;
    static SphereFunction pointwise(PointFunction f);
    static SphereFunction zonal(Profile g);
    static SphereFunction framed(Profile g, const Frame& A);

    double operator()(const SpherePoint& zeta) const;
    bool has_profile() const { return static_cast<bool>(g_); }
    bool is_zonal() const { return has_profile() && !framed_; }
    const Profile& profile() const { return g_; }
    Frame frame() const { return framed_ ? frame_ : Frame::identity(); }
    SphereFunction scaled(double c) const;

private:
    PointFunction f_;
    Profile g_;
    bool framed_ = false;
    Frame frame_;
};

SphereFunction constant_function(double c);
SphereFunction zonal_harmonic(int j, int k);
// Unit vector (0, s e0) scaled: the point s * north.
Vec16 north_scaled(double s);

struct SphereQuadratureOptions {
    int ntheta = 256;
    int nphi = 256;
};

struct ExtremizerParams {
    Vec16 xi{};            // |xi| < 1
    double lambda = 16.0;  // (0, Q)
};

// |1 - xi . conj(zeta)|^{-(2Q - lambda)/2}
double extremizer_eval(const ExtremizerParams& params, const SpherePoint& zeta);
// Same function in framed-profile form (frame_for(xi/|xi|)).
SphereFunction make_extremizer(const ExtremizerParams& params);
// Endpoint lambda = Q of the family, |1 - xi . conj(zeta)|^{-Q/2}, scaled to \int f^2 = |S|.
SphereFunction log_sobolev_extremizer(const Vec16& xi, const SphereQuadratureOptions& opt = {});

// Quadrature integrals; require a profile (any frame).
double integrate(const SphereFunction& f, const SphereQuadratureOptions& opt = {});
double lp_norm(const SphereFunction& f, double p, const SphereQuadratureOptions& opt = {});
// f scaled so that \int |f|^p = |S|
SphereFunction normalize_lp(const SphereFunction& f, double p, const SphereQuadratureOptions& opt = {});

struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

McEstimate integrate_mc(const std::function<double(const SpherePoint&)>& f, std::size_t n, std::uint64_t seed,
                        std::uint64_t stream = 0);

struct BisphericalFunction {
    int jmax = 0;
    std::map<std::pair<int, int>, double> coeff;  // f ~ sum coeff * Zhat_{j,k}
    std::map<std::pair<int, int>, double> norm2;  // ||f_{j,k}||^2
    double l2_quadrature = 0.0;                   // \int f^2 by direct quadrature
    std::optional<SphereFunction> pointwise;

    double total_norm2() const;
    double parseval_defect() const;  // |sum norm2 - l2| / l2
    double eval(double r, double x) const;
};

// Requires a zonal (north-pole) input; UnsupportedInput otherwise.
BisphericalFunction project_bispherical(const SphereFunction& f, int jmax, const SphereQuadratureOptions& opt = {});

struct SpectralValue {
    double value = 0.0;
    double tail_bound = 0.0;  // bound on the omitted j > jmax part
};

// sum 2^{lambda/2} lambda_{j,k}(K1^{lambda/4}) ||f_{j,k}||^2
SpectralValue hls_spectral(const BisphericalFunction& f, double lambda);
// hls_spectral(f) / ||f||_p^2
SpectralValue hls_quotient(const SphereFunction& f, double lambda, int jmax = 40,
                           const SphereQuadratureOptions& opt = {});
// \int\int f(zeta) g(eta) d_S(zeta, eta)^{-lambda} by pair importance sampling. eta is drawn from
// an equal mixture of the uniform measure and a local proposal homogeneous in the gauge
// (|b|^4 + |a|^2)^{1/4} of tangent coordinates (b horizontal, a vertical), which matches the
// anisotropic singularity and keeps the estimator's fourth moment finite for lambda < Q.
McEstimate hls_mc(const SphereFunction& f, const SphereFunction& g, double lambda, std::size_t n, std::uint64_t seed);

// Coefficient of variation of (\int h(eta)|1-zeta.conj(eta)|^{-lambda/2}) / h^{p-1}(zeta)
// over a 10 x 10 midpoint grid in (theta, phi).
double el_residual_function(const SphereFunction& h, double lambda, int jmax = 40,
                            const SphereQuadratureOptions& opt = {});
double el_residual(const ExtremizerParams& params, int jmax = 40, const SphereQuadratureOptions& opt = {});

// I(phi,phi) \int h^p - (p-1) I(h,h) \int h^{p-2} phi^2 for zonal h, phi with \int h^{p-1} phi = 0.
double second_variation(const SphereFunction& h, const SphereFunction& phi, double lambda, int jmax = 40,
                        const SphereQuadratureOptions& opt = {});

// \int zeta h^p(zeta) d zeta; requires a profile.
Vec16 center_mass(const SphereFunction& h, double p, const SphereQuadratureOptions& opt = {});
std::array<McEstimate, 16> center_mass_mc(const SphereFunction& h, double p, std::size_t n, std::uint64_t seed);

struct ConformalParams {
    double delta = 1.0;
    Vec16 xi{};  // unit vector; A_xi = frame_for(xi)
};

// sigma_delta = C o S_delta o C^{-1} and its Jacobian, pointwise on the sphere.
SpherePoint sigma_dilation(double delta, const SpherePoint& zeta);
double sigma_jacobian(double delta, const SpherePoint& zeta);

struct SigmaImage {
    double r;
    double x;
    double jac;
};
// sigma_delta on profile coordinates (zeta2 stays in the complex line through 1 and zeta2).
SigmaImage sigma_profile(double delta, double r, double x);

// gamma = A^{-1} sigma_delta A and its Jacobian |J_C| delta^Q |J_{C^{-1}}| along the composition.
SpherePoint conformal_map(const ConformalParams& params, const SpherePoint& zeta);
SpherePoint conformal_map_inverse(const ConformalParams& params, const SpherePoint& zeta);
double conformal_jacobian(const ConformalParams& params, const SpherePoint& zeta);

// h~ = |J_{gamma^{-1}}|^{1/p} h o gamma^{-1}; keeps the profile form when h is framed along xi.
SphereFunction conformal_pullback(const SphereFunction& h, const ConformalParams& params, double p);

struct RecenterResult {
    ConformalParams params;
    SphereFunction function;
    double residual = 0.0;  // |center_mass| of the result
    int iterations = 0;
};

// Requires a positive framed/zonal h with \int h^p = |S|.
RecenterResult recenter(const SphereFunction& h, double p, const SphereQuadratureOptions& opt = {});

struct LogSobolevPair {
    double lhs = 0.0;
    double rhs = 0.0;
};

// lhs = sum 2 logsob_gap ||f_{j,k}||^2, rhs = C_logsobolev \int f^2 log f^2; requires \int f^2 = |S|.
LogSobolevPair log_sobolev_pair(const BisphericalFunction& f, const SphereQuadratureOptions& opt = {});

} // namespace octohls
