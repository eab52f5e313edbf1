#include "bgk/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bgk {

namespace {

void require_inside(const GasParams& p, double mu, const char* what) {
    if (!std::isfinite(mu) || !(std::abs(mu) < p.alpha)) {
        throw DomainError(std::string(what) + ": |mu| must be < alpha, got mu = " +
                          std::to_string(mu));
    }
}

}  // namespace

GasParams make_params(double a) {
    if (!std::isfinite(a) || a < 0.0) {
        throw DomainError("make_params: a must be finite and >= 0, got " + std::to_string(a));
    }
    constexpr double sqrt_pi = 1.7724538509055160273;  // sqrt(pi)
    constexpr double pi = std::numbers::pi;

    GasParams p;
    p.a = a;
    p.alpha = a == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / a;
    p.beta = (2.0 * a + sqrt_pi) / (2.0 * (a + sqrt_pi));
    p.r0 = 1.0 / (a + sqrt_pi);
    p.r1 = 2.0 / (2.0 * a + sqrt_pi);
    p.r2 = 4.0 * (a + sqrt_pi) / (4.0 * a * a + 7.0 * sqrt_pi * a + 2.0 * pi);
    return p;
}

double velocity_map(const GasParams& p, double mu) {
    require_inside(p, mu, "velocity_map");
    return mu / (1.0 - p.a * std::abs(mu));
}

double mu_of(const GasParams& p, double c) {
    if (!std::isfinite(c)) {
        if (std::isnan(c)) throw DomainError("mu_of: C is NaN");
        return std::copysign(p.alpha, c);
    }
    return c / (1.0 + p.a * std::abs(c));
}

double weight(const GasParams& p, double mu) {
    if (std::isnan(mu)) throw DomainError("weight: mu is NaN");
    if (!(std::abs(mu) < p.alpha)) return 0.0;
    const double s = 1.0 - p.a * std::abs(mu);
    const double c = mu / s;
    const double g = std::exp(-c * c);
    if (g == 0.0) return 0.0;
    return g / (s * s * s);
}

double kernel_qc(const GasParams& p, double c, double c_prime) {
    return p.r0 + p.r1 * c * c_prime + p.r2 * (c * c - p.beta) * (c_prime * c_prime - p.beta);
}

double kernel_q(const GasParams& p, double mu, double mu_prime) {
    require_inside(p, mu, "kernel_q");
    require_inside(p, mu_prime, "kernel_q");
    return kernel_qc(p, velocity_map(p, mu), velocity_map(p, mu_prime));
}

}  // namespace bgk
