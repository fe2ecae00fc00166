#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "octohls/octonion.hpp"

namespace octohls {

// Kernel K(w) depending on w only through Re w and |w|.
struct ZonalKernel {
    std::string name;
    // (Re w, |w|^2, |1-w|^2); the last argument is supplied cancellation-free.
    std::function<double(double, double, double)> eval;
    // K ~ |1-w|^{-2 alpha_singular} at w -> 1; nonpositive for bounded kernels.
    double alpha_singular = 0.0;

    double operator()(const Octonion& w) const;
};

ZonalKernel kernel_K1(double alpha);  // |1-w|^{-2 alpha}
ZonalKernel kernel_K2(double alpha);  // |w|^2 |1-w|^{-2 alpha}
ZonalKernel kernel_constant(double c);

enum class Provenance { ClosedForm, Quadrature };
std::string to_string(Provenance p);

struct EigenTable {
    double alpha = 0.0;
    Provenance provenance = Provenance::ClosedForm;
    std::map<std::pair<int, int>, double> values;  // (j, k) -> eigenvalue

    std::string to_csv() const;   // header j,k,alpha,value,provenance
    std::string to_json() const;  // {"alpha":..,"provenance":..,"values":{"j,k":..}}
};

struct QuadratureOptions {
    int nodes_theta = 256;  // Gauss-Legendre nodes in cos(2 theta) on the smooth theta range
    int nodes_phi = 256;    // Gauss-Jacobi(5/2,5/2) nodes in cos(phi) where the kernel is smooth in phi
    int panel_order = 32;   // Gauss-Legendre order of each dyadic / graded panel
    double theta_split = 0.19634954084936207;  // pi/16: dyadic subdivision below
    double cell_tolerance = 1e-12;             // stop once a dyadic cell adds less than this, relative
    int max_cells = 120;
};

// Funk-Hecke oracle: lambda_{j,k} = \int K(conj(eta2)) Zhat_{j,k}(eta) d eta, for all j <= jmax, k <= j.
// All kernels share one set of nodes.
std::vector<EigenTable> eig_quadrature_table(const std::vector<ZonalKernel>& kernels, int jmax,
                                             const QuadratureOptions& opt = {});
double eig_quadrature(const ZonalKernel& K, int j, int k, const QuadratureOptions& opt = {});

// Closed forms, valid for -1 < alpha < Q/4 including the integer limit points.
double eig_K1(int j, int k, double alpha);
double eig_K2(int j, int k, double alpha);
// lambda(K1^{alpha-1}) / lambda(K1^alpha); alpha > 3.
double eig_K1_ratio(int j, int k, double alpha);
// Naive C^alpha_{j,k} lambda(K1) product, used as a cross-check away from its removable poles.
double eig_K2_naive(int j, int k, double alpha);
EigenTable eig_table_closed_form(int jmax, double alpha, bool second_kind = false);

struct MarginTerms {
    double lambda1 = 0.0;        // lambda(K1^alpha)
    double lambda2 = 0.0;        // lambda(K2^alpha)
    double lambda1_lower = 0.0;  // lambda(K1^{alpha-1})
    double weighted = 0.0;       // 2 alpha/(Q/2 - alpha) lambda(K1^alpha)
    double value = 0.0;
    double scale = 0.0;          // sum of absolute terms, reference for zero tests
    // "closed-form"; "limit" where the closed form is taken as a limit with vanishing lambda1
    std::string tag = "closed-form";

    // value / scale; terms that all vanish give exactly 0
    double normalized() const { return scale > 0.0 ? value / scale : value; }
};

MarginTerms bilinear_margin_terms(int j, int k, double alpha);
double bilinear_margin(int j, int k, double alpha);

double intertwining_spectrum(double d, int j, int k);
double c_d(double d);

// Eigenvalue gap of the d_S^{-Q} kernel, digamma closed form.
double logsob_gap(int j, int k);
double logsob_gap_constant();
// 2^{Q/2}(lambda_00 - lambda_jk)(K1^{Q/4-eps}) Richardson-extrapolated over eps.
double logsob_gap_limit(int j, int k, const std::vector<double>& eps = {1e-3, 1e-4, 1e-5});

} // namespace octohls
