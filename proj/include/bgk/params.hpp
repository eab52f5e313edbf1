#pragma once

#include <limits>

#include "bgk/errors.hpp"

namespace bgk {

/// Dimensionless constants of the affine-frequency BGK model.
///
/// Collision frequency is 1 + a|C| in the dimensionless velocity C, and the
/// kernel is q = r0 + r1 C C' + r2 (C^2 - beta)(C'^2 - beta). All values use
/// the convention in which sqrt(pi)*a has already been absorbed into a, so
///
///     beta = (2a + sqrt(pi)) / (2(a + sqrt(pi)))
///     r0   = 1 / (a + sqrt(pi))
///     r1   = 2 / (2a + sqrt(pi))
///     r2   = 4(a + sqrt(pi)) / (4a^2 + 7 sqrt(pi) a + 2 pi)
///
/// A parametrization in which frequency reads 1 + sqrt(pi) a |C| is the same
/// model with a rescaled by sqrt(pi); it is not supported as a separate path.
struct GasParams {
    double a = 0.0;
    /// Half-width of the continuous spectrum, 1/a; +infinity when a == 0.
    double alpha = std::numeric_limits<double>::infinity();
    double beta = 0.5;
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;

    [[nodiscard]] bool unbounded_cut() const { return a == 0.0; }
};

/// Throws DomainError for negative or non-finite a.
GasParams make_params(double a);

/// C(mu) = mu / (1 - a|mu|), defined for |mu| < alpha.
double velocity_map(const GasParams& p, double mu);

/// Inverse map mu(C) = C / (1 + a|C|), defined for every real C.
double mu_of(const GasParams& p, double c);

/// rho(mu) = exp(-C(mu)^2) (1 - a|mu|)^-3. Returns 0 at and beyond |mu| = alpha.
double weight(const GasParams& p, double mu);

/// q(mu, mu'). Both arguments must lie in (-alpha, alpha).
double kernel_q(const GasParams& p, double mu, double mu_prime);

/// Kernel written directly in the velocity variable, q(C, C').
double kernel_qc(const GasParams& p, double c, double c_prime);

}  // namespace bgk
