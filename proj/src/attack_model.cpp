#include "b92sec/attack_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace b92 {

using std::numbers::pi;

double AttackGeometry::c() const { return std::cos(alpha); }
double AttackGeometry::s() const { return std::sin(alpha); }

double AttackGeometry::error_rate() const {
    double d = std::sin(theta - theta_prime);
    return d * d;
}

double AttackGeometry::unitarity_residual() const {
    return std::cos(2 * theta) - std::cos(2 * theta_prime) * std::cos(2 * alpha);
}

static void check_theta(double theta) {
    if (!(theta > 0 && theta < pi / 4)) throw GeometryError("theta must lie strictly inside (0, pi/4)");
}

AttackGeometry geometry_from_error(double theta, double p_e) {
    check_theta(theta);
    double st = std::sin(theta);
    if (!(p_e >= 0) || p_e > st * st)
        throw GeometryError("p_e must lie in [0, sin^2 theta] for a solvable geometry");
    AttackGeometry g;
    g.theta = theta;
    g.theta_prime = theta - std::asin(std::sqrt(p_e));
    // cos2θ' >= cos2θ for θ' <= θ < π/4, so the ratio never exceeds 1 except by roundoff.
    double ratio = std::cos(2 * theta) / std::cos(2 * g.theta_prime);
    g.alpha = 0.5 * std::acos(std::clamp(ratio, -1.0, 1.0));
    return g;
}

AttackGeometry geometry_from_alpha(double theta, double alpha) {
    check_theta(theta);
    if (!(alpha >= 0) || alpha > theta)
        throw GeometryError("alpha must lie in [0, theta] for a solvable geometry");
    AttackGeometry g;
    g.theta = theta;
    g.alpha = alpha;
    double ratio = std::cos(2 * theta) / std::cos(2 * alpha);
    g.theta_prime = 0.5 * std::acos(std::clamp(ratio, -1.0, 1.0));
    return g;
}

double alpha_small_angle(double theta, double p_e) {
    check_theta(theta);
    if (!(p_e >= 0)) throw GeometryError("p_e must be nonnegative");
    double t = std::tan(2 * theta);
    return std::pow(p_e * t * t, 0.25);
}

ErrorModel normalized_error_rate(const AttackGeometry& g, PcConvention convention) {
    ErrorModel m;
    m.convention = convention;
    m.p_e = g.error_rate();
    double sp = std::sin(g.theta + g.theta_prime);
    m.p_c = convention == PcConvention::squared ? sp * sp : sp;
    m.p_e_norm = m.p_e + m.p_c > 0 ? m.p_e / (m.p_c + m.p_e) : 0.0;
    return m;
}

double normalized_error_rate_small_alpha(double theta, double alpha) {
    double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
    return 2 * c2 * c2 / (s2 * s2 * s2 * s2) * alpha * alpha * alpha * alpha;
}

double failure_probability(int n, double q) {
    if (n < 2) throw GeometryError("failure_probability needs n >= 2");
    if (!(q >= 0 && q <= 1)) throw GeometryError("q must be a probability");
    double sum = 0;
    double binom = double(n) * (n - 1) / 2;  // C(n, 2)
    double qk = q * q;
    for (int k = 2; k <= n; ++k) {
        sum += binom * qk * std::pow(1 - q, n - k);
        binom *= double(n - k) / (k + 1);
        qk *= q;
    }
    return std::min(sum, 1.0);
}

} // namespace b92
