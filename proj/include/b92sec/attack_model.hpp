#pragma once

#include <stdexcept>

namespace b92 {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Translucent-attack angles: Alice sends (cos θ, ±sin θ), Bob receives
// (cos θ', ±sin θ'), Eve's probe ends at (cos α, ±sin α), tied together by
// the unitarity condition cos 2θ = cos 2θ' cos 2α.
struct AttackGeometry {
    double theta = 0;
    double theta_prime = 0;
    double alpha = 0;

    double c() const;                   // cos α
    double s() const;                   // sin α
    double error_rate() const;          // p_e = sin²(θ - θ')
    double unitarity_residual() const;  // cos 2θ - cos 2θ' cos 2α
};

// Solve θ' and α from the observed raw error rate. Requires 0 < θ < π/4 and
// 0 <= p_e <= sin²θ.
AttackGeometry geometry_from_error(double theta, double p_e);

// Solve θ' from a prescribed probe angle. Requires 0 <= α <= θ < π/4.
AttackGeometry geometry_from_alpha(double theta, double alpha);

// Small-angle approximation α ≈ (p_e tan² 2θ)^{1/4}.
double alpha_small_angle(double theta, double p_e);

// The conclusive-correct rate appears in two printed forms that differ by a
// square; both are supported and neither is declared ground truth.
enum class PcConvention { squared, linear };

struct ErrorModel {
    double p_e = 0;       // raw error rate
    double p_c = 0;       // conclusive-correct rate under the chosen convention
    double p_e_norm = 0;  // p_e / (p_c + p_e)
    PcConvention convention = PcConvention::squared;
};

ErrorModel normalized_error_rate(const AttackGeometry& g,
                                 PcConvention convention = PcConvention::squared);

// Small-α closed form (2 cos²2θ / sin⁴2θ) α⁴ of the normalized error rate.
double normalized_error_rate_small_alpha(double theta, double alpha);

// P(at least 2 errors among n Bernoulli(q) trials): reconciliation fails when a
// single-error-correcting code faces two or more errors. Exact binomial tail,
// summed from k = 2 so small q costs no cancellation.
double failure_probability(int n, double q);

} // namespace b92
