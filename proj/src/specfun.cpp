#include "octohls/specfun.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "octohls/errors.hpp"

namespace octohls {

double log_gamma(double x)
{
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    return boost::math::lgamma(x);
}

double gamma_ratio(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("gamma_ratio: arguments must be positive");
    return std::exp(log_gamma(a) - log_gamma(b));
}

double pochhammer(double x, int n)
{
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x + i;
    return r;
}

double digamma(double x)
{
    if (x <= 0.0 && x == std::floor(x)) throw DomainError("digamma: pole at nonpositive integer");
    return boost::math::digamma(x);
}

double hyp2f1_terminating(int n, double b, double c, double x)
{
    if (n < 0) throw DomainError("hyp2f1_terminating: n must be nonnegative");
    double term = 1.0, sum = 1.0;
    for (int m = 0; m < n; ++m) {
        if (c + m == 0.0) throw DomainError("hyp2f1_terminating: pole in (c)_m");
        term *= (m - n) * (b + m) / ((c + m) * (m + 1)) * x;
        sum += term;
    }
    return sum;
}

double gegenbauer3(int n, double x)
{
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = 6.0 * x;
    for (int m = 1; m < n; ++m) {
        const double p2 = (2.0 * (m + 3) * x * p1 - (m + 5.0) * p0) / (m + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

// C_n^{(3)}(1) = binom(n+5, 5)
double gegenbauer3_at_one(int n)
{
    double r = 1.0;
    for (int i = 1; i <= 5; ++i) r = r * (n + i) / i;
    return r;
}

// P_k^{(3,b)}(1) = binom(k+3, 3)
double jacobi3_at_one(int k) { return (k + 1.0) * (k + 2.0) * (k + 3.0) / 6.0; }

} // namespace

double gegenbauer3_normalized(int n, double x) { return gegenbauer3(n, x) / gegenbauer3_at_one(n); }

void gegenbauer3_normalized_all(int nmax, double x, double* out)
{
    // recurrence for chat_m directly: chat_{m+1} = (2(m+3)x c_m C(m) - (m+5) c_{m-1} C(m-1)) / ((m+1) C(m+1))
    out[0] = 1.0;
    if (nmax == 0) return;
    out[1] = x;
    for (int m = 1; m < nmax; ++m) {
        // C(m)/C(m+1) = (m+1)/(m+6), C(m-1)/C(m+1) = m(m+1)/((m+5)(m+6))
        out[m + 1] = (2.0 * (m + 3) * x * out[m] * (m + 1.0) / (m + 6.0) -
                      (m + 5.0) * out[m - 1] * m * (m + 1.0) / ((m + 5.0) * (m + 6.0))) /
                     (m + 1.0);
    }
}

double jacobi33(int k, int m, double x)
{
    const double a = 3.0, b = 3.0 + m;
    if (k == 0) return 1.0;
    double p0 = 1.0, p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for (int n = 2; n <= k; ++n) {
        const double s = 2.0 * n + a + b;
        const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
        const double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi33_normalized(int k, int m, double x) { return jacobi33(k, m, x) / jacobi3_at_one(k); }

void jacobi33_normalized_all(int kmax, int m, double x, double* out)
{
    const double a = 3.0, b = 3.0 + m;
    out[0] = 1.0;
    if (kmax == 0) return;
    double p0 = 1.0, p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    out[1] = p1 / jacobi3_at_one(1);
    for (int n = 2; n <= kmax; ++n) {
        const double s = 2.0 * n + a + b;
        const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
        const double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
        out[n] = p1 / jacobi3_at_one(n);
    }
}

double zonal_rx(BisphericalIndex idx, double r, double x)
{
    const int n = idx.n();
    return gegenbauer3_normalized(n, x) * std::pow(r, n) * jacobi33_normalized(idx.k, n, 2.0 * r * r - 1.0);
}

double zonal(BisphericalIndex idx, PolarAngles a)
{
    if (idx.k < 0 || idx.j < idx.k) throw DomainError("zonal: require j >= k >= 0");
    const int n = idx.n();
    return gegenbauer3_normalized(n, std::cos(a.phi)) * std::pow(std::cos(a.theta), n) *
           jacobi33_normalized(idx.k, n, std::cos(2.0 * a.theta));
}

double zonal_hypergeometric(BisphericalIndex idx, PolarAngles a)
{
    const int n = idx.n();
    const double tp2 = std::pow(std::tan(a.phi), 2);
    // one of -n/2, (1-n)/2 is a nonpositive integer
    const double fphi = (n % 2 == 0) ? hyp2f1_terminating(n / 2, (1.0 - n) / 2.0, 3.5, -tp2)
                                     : hyp2f1_terminating((n - 1) / 2, -n / 2.0, 3.5, -tp2);
    const double tt2 = std::pow(std::tan(a.theta), 2);
    // P_k^{(3,b)}(cos 2t) ~ cos^{2k} t 2F1(-k, -k-b; 4; -tan^2 t) with b = 3 + n, so the second
    // parameter is -(j+3)
    const double ftheta = hyp2f1_terminating(idx.k, -(idx.j + 3.0), 4.0, -tt2);
    return std::pow(std::cos(a.phi), n) * fphi * std::pow(std::cos(a.theta), idx.j + idx.k) * ftheta;
}

double zonal_sine_sum(BisphericalIndex idx, PolarAngles a)
{
    const int n = idx.n();
    const double phi = a.phi;
    double cphi;
    if (phi < 1e-3) {
        // chat_n = 2F1(-n, n+6; 7/2; sin^2(phi/2)), first five terms
        const double s = std::pow(std::sin(phi / 2.0), 2);
        double term = 1.0;
        cphi = 1.0;
        for (int m = 0; m < 4 && m < n; ++m) {
            term *= (m - n) * (n + 6.0 + m) / ((3.5 + m) * (m + 1.0)) * s;
            cphi += term;
        }
    } else {
        const double s1 = std::sin((n + 1) * phi), s3 = std::sin((n + 3) * phi), s5 = std::sin((n + 5) * phi);
        const double bracket = (s5 + s1) / (4.0 * (n + 3)) + s3 / (n + 3.0) -
                               0.5 * ((s3 + s1) / (n + 2.0) + (s5 + s3) / (n + 4.0)) +
                               0.25 * (s1 / (n + 1.0) + s5 / (n + 5.0));
        cphi = 7.5 * bracket / std::pow(std::sin(phi), 5);
    }
    return cphi * std::pow(std::cos(a.theta), n) * jacobi33_normalized(idx.k, n, std::cos(2.0 * a.theta));
}

double a_coeff(int n, int i)
{
    switch (i) {
    case 0: return 0.25 / ((n + 3.0) * (n + 2.0) * (n + 1.0));
    case 1: return -0.75 / ((n + 3.0) * (n + 4.0) * (n + 1.0));
    case 2: return 0.75 / ((n + 3.0) * (n + 2.0) * (n + 5.0));
    case 3: return -0.25 / ((n + 3.0) * (n + 4.0) * (n + 5.0));
    default: throw DomainError("a_coeff: index i must lie in {0,1,2,3}");
    }
}

double a_coeff_sum_form(int n, int i)
{
    switch (i) {
    case 0: return (1.0 / (n + 3) - 2.0 / (n + 2) + 1.0 / (n + 1)) / 8.0;
    case 1: return (3.0 / (n + 3) - 2.0 / (n + 4) - 1.0 / (n + 1)) / 8.0;
    case 2: return (-3.0 / (n + 3) + 2.0 / (n + 2) + 1.0 / (n + 5)) / 8.0;
    case 3: return (-1.0 / (n + 3) + 2.0 / (n + 4) - 1.0 / (n + 5)) / 8.0;
    default: throw DomainError("a_coeff_sum_form: index i must lie in {0,1,2,3}");
    }
}

} // namespace octohls
