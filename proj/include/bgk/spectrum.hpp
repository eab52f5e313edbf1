#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "bgk/dispersion.hpp"

namespace bgk {

// ---- discrete solutions ----

/// h0 = 1, h1 = C(mu), h2 = C(mu)^2 - 1/2, h3 = (x - mu)(C(mu)^2 - 3/2).
double discrete_solution(const GasParams& p, int k, double x, double mu);
/// d/dx of the above (only h3 depends on x).
double discrete_solution_dx(const GasParams& p, int k, double x, double mu);

// ---- continuum eigenfunctions ----

/// Data of the eigenfunction at one eta on the cut. The regular part is
///   prefactor * (c0 + c1 C(mu) + c2 (C(mu)^2 - beta)) / (eta - mu)
/// with prefactor = g eta rho(eta) / lambda(eta); the delta coefficient is g.
struct EigenData {
    double eta = 0.0;
    double lambda = 1.0;  // principal-value symbol at eta, det of the PV matrix
    std::array<double, 3> cofactors{};
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;  // r0 L0, r1 L1, r2 (L2 - beta L0)
    double prefactor = 0.0;
    double g = 1.0;

    [[nodiscard]] double q_tilde(const GasParams& p, double mu) const;
    [[nodiscard]] double regular(const GasParams& p, double mu) const;
};

EigenData eigen_data(const QuadratureScheme& scheme, double eta, double g = 1.0);

/// g eta Q~(eta, mu) rho(eta) / (lambda(eta) (eta - mu)). Throws DomainError for eta == mu.
double eigenfunction_regular(const QuadratureScheme& scheme, double eta, double mu, double g = 1.0);

/// n_alpha(eta) from principal-value quadrature of the eigenfunction moments, against
/// rho(eta) Lambda_alpha(eta) / lambda(eta).
struct NormalizationCheck {
    std::array<double, 3> quadrature{};
    std::array<double, 3> cofactor{};
    std::array<double, 3> deviation{};
};
NormalizationCheck normalization_check(const QuadratureScheme& scheme, double eta);

// ---- general solution ----

namespace detail {
struct ContinuumSpline;
}

/// Coefficients of the expansion
///   h(x, mu) = sum A_k h_k(x, mu) + int exp(-x/eta) Phi(eta, mu) A(eta) deta.
/// A(eta) is sampled on a uniform grid strictly inside the cut and interpolated by a
/// cubic spline; it is taken to vanish outside the grid hull.
struct SpectralExpansion {
    std::array<double, 4> discrete{};
    std::vector<double> eta;
    std::vector<double> values;
    std::shared_ptr<const detail::ContinuumSpline> spline;

    [[nodiscard]] bool has_continuum() const { return !eta.empty(); }
    /// Spline value; 0 outside [eta.front(), eta.back()].
    [[nodiscard]] double continuum(double eta_value) const;
};

/// Validates and builds an expansion. The grid is uniform on [eta_lo, eta_hi] with
/// values.size() points; pass an empty vector for a purely discrete expansion.
SpectralExpansion make_expansion(const GasParams& p, const std::array<double, 4>& discrete,
                                 double eta_lo = 0.0, double eta_hi = 0.0,
                                 std::vector<double> values = {});

/// Evaluates an expansion repeatedly. Eigenfunction data at the continuum quadrature
/// nodes is computed once at construction.
class ExpansionEvaluator {
public:
    ExpansionEvaluator(const QuadratureScheme& scheme, SpectralExpansion expansion,
                       int nodes_per_cell = 6);

    [[nodiscard]] double value(double x, double mu) const;
    [[nodiscard]] double dx(double x, double mu) const;

    /// Composite rule in C with panel breaks at the grid, for integrating h over mu.
    [[nodiscard]] const GaussRule& rule() const { return rule_; }
    [[nodiscard]] const SpectralExpansion& expansion() const { return expansion_; }

private:
    double continuum_part(double x, double mu, bool derivative) const;

    const QuadratureScheme& scheme_;
    SpectralExpansion expansion_;
    std::vector<EigenData> data_;
    std::vector<double> weights_;
    std::vector<double> amplitude_;
    GaussRule rule_;
};

double apply_expansion(const QuadratureScheme& scheme, const SpectralExpansion& expansion, double x,
                       double mu);

// ---- residual of the transport equation ----

using Profile = std::function<double(double x, double mu)>;

struct ResidualOptions {
    /// mu-test points; default: C uniform on [-4, 4] (64 points) mapped to mu.
    std::vector<double> mu_grid;
    /// Rule for the collision integral (weights include the weight function);
    /// default: the scheme's weighted rule.
    const GaussRule* rule = nullptr;
    /// Central-difference step when no x-derivative is supplied.
    double fd_step = 1e-5;
};

std::vector<double> default_mu_grid(const GasParams& p);

/// sup over the mu-grid of |mu h_x + h - int rho(mu') q(mu, mu') h(x, mu') dmu'|.
double residual_2_4(const QuadratureScheme& scheme, const Profile& h, double x,
                    const Profile& h_x = nullptr, const ResidualOptions& options = {});

}  // namespace bgk
