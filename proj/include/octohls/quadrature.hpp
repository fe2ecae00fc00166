#pragma once

#include <memory>
#include <vector>

namespace octohls {

struct QuadratureRule {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

// Nodes/weights on [a, b]; cached per order, so repeated calls are cheap.
QuadratureRule gauss_legendre(int n, double a, double b);
// Weight (1-x)^alpha (1+x)^beta on [-1, 1].
const QuadratureRule& gauss_jacobi(int n, double alpha, double beta);

// Tensor rule for functions of (r, x) = (|zeta2|, Re zeta2 / |zeta2|) on S^15.
// Gauss-Legendre in u = cos(2 theta), Gauss-Jacobi(5/2, 5/2) in x = cos(phi);
// weights include the full measure, so sum(w) = |S|.
struct SphereRule {
    std::vector<double> r;       // per theta node
    std::vector<double> u;       // cos(2 theta)
    std::vector<double> wtheta;  // includes (1-u^2)^3/256 and |S^7|
    std::vector<double> x;       // per phi node
    std::vector<double> wphi;    // includes (1-x^2)^{5/2} and |S^6|
    int ntheta() const { return static_cast<int>(r.size()); }
    int nphi() const { return static_cast<int>(x.size()); }
    double weight(int a, int b) const { return wtheta[a] * wphi[b]; }
};

std::shared_ptr<const SphereRule> sphere_rule(int ntheta, int nphi);

} // namespace octohls
