#pragma once

#include <vector>

namespace octohls {

struct BisphericalIndex {
    int j = 0;
    int k = 0;
    int n() const { return j - k; }
};

// theta in [0, pi/2], phi in [0, pi]; |zeta2| = cos(theta), Re zeta2 = cos(theta) cos(phi).
struct PolarAngles {
    double theta = 0.0;
    double phi = 0.0;
};

double log_gamma(double x);
// Gamma(a)/Gamma(b) through log-gamma; a, b > 0.
double gamma_ratio(double a, double b);
// Rising factorial (x)_n for any real x, as a plain product.
double pochhammer(double x, int n);
double digamma(double x);

// 2F1(-n, b; c; x)
double hyp2f1_terminating(int n, double b, double c, double x);

// C_n^{(3)}(x) by three-term recurrence.
double gegenbauer3(int n, double x);
// C_n^{(3)}(x) / C_n^{(3)}(1)
double gegenbauer3_normalized(int n, double x);
// out[m] = normalized C_m^{(3)}(x), m = 0..nmax
void gegenbauer3_normalized_all(int nmax, double x, double* out);

// P_k^{(3, 3+m)}(x) by three-term recurrence.
double jacobi33(int k, int m, double x);
// P_k^{(3,3+m)}(x) / P_k^{(3,3+m)}(1)
double jacobi33_normalized(int k, int m, double x);
void jacobi33_normalized_all(int kmax, int m, double x, double* out);

// Normalized zonal function: chat_{j-k}(cos phi) cos^{j-k}(theta) phat_k(cos 2 theta).
double zonal(BisphericalIndex idx, PolarAngles a);
// Same function in coordinates r = cos(theta), x = cos(phi).
double zonal_rx(BisphericalIndex idx, double r, double x);
// Literal product of terminating 2F1 factors in tan^2; undefined at phi = pi/2 or theta = pi/2.
double zonal_hypergeometric(BisphericalIndex idx, PolarAngles a);
// Sine-sum representation with the sin^{-5} phi prefactor; series branch for phi < 1e-3.
double zonal_sine_sum(BisphericalIndex idx, PolarAngles a);

// Four-cosine coefficients a^i for n = j - k, product form.
double a_coeff(int n, int i);
double a_coeff_sum_form(int n, int i);

} // namespace octohls
