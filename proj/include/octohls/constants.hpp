#pragma once

namespace octohls {

struct HlsParams {
    double lambda;
    double p() const;            // 2Q/(2Q - lambda)
    bool sharp_regime() const;   // 12 <= lambda < Q
};

HlsParams make_hls_params(double lambda);  // DomainError outside (0, Q)

// |S| = 2 pi^8 / 7!
double sphere_measure();
// Group-side sharp HLS constant C_lambda.
double C_hls_group(double lambda);
// Sphere-side constant C'_lambda = 2^{15 lambda/Q} C_lambda.
double C_hls_sphere(double lambda);
// 2^{lambda/2} lambda_00(K1^{lambda/4}) |S|^{(lambda-Q)/Q}
double C_hls_sphere_spectral(double lambda);
// C''_d = (c_d C'_{Q-d})^{-1}, 0 < d < Q-12
double C_sobolev(double d);
double C_logsobolev();

} // namespace octohls
