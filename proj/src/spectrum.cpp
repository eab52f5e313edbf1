#include "bgk/spectrum.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <string>

namespace bgk {

namespace detail {
struct ContinuumSpline {
    boost::math::interpolators::cardinal_cubic_b_spline<double> spline;
};
}  // namespace detail

namespace {

void require_cut_point(const GasParams& p, double mu, const char* what) {
    if (!std::isfinite(mu) || !(std::abs(mu) < p.alpha))
        throw DomainError(std::string(what) + ": need |mu| < alpha, got " + std::to_string(mu));
}

// exp(-x/eta), or its x-derivative. The eigenfunction carries a factor eta, so the
// value at eta = 0 never matters; return 0 there.
double exp_factor(double x, double eta, bool derivative) {
    if (eta == 0.0) return 0.0;
    const double e = std::exp(-x / eta);
    return derivative ? -e / eta : e;
}

// (C - C_eta) / (eta - mu(C)), written without cancellation when C and C_eta share a sign:
// then mu(C) - eta = (C - C_eta) / ((1 + a|C|)(1 + a|C_eta|)).
double pole_ratio(const GasParams& p, double c, double c_eta, double eta) {
    if (c * c_eta >= 0.0) return -(1.0 + p.a * std::abs(c)) * (1.0 + p.a * std::abs(c_eta));
    return (c - c_eta) / (eta - mu_of(p, c));
}

}  // namespace

double discrete_solution(const GasParams& p, int k, double x, double mu) {
    require_cut_point(p, mu, "discrete_solution");
    const double c = velocity_map(p, mu);
    switch (k) {
        case 0: return 1.0;
        case 1: return c;
        case 2: return c * c - 0.5;
        case 3: return (x - mu) * (c * c - 1.5);
        default: throw std::invalid_argument("discrete_solution: k must be 0..3");
    }
}

double discrete_solution_dx(const GasParams& p, int k, double /*x*/, double mu) {
    require_cut_point(p, mu, "discrete_solution_dx");
    if (k < 0 || k > 3) throw std::invalid_argument("discrete_solution_dx: k must be 0..3");
    if (k < 3) return 0.0;
    const double c = velocity_map(p, mu);
    return c * c - 1.5;
}

double EigenData::q_tilde(const GasParams& p, double mu) const {
    const double c = velocity_map(p, mu);
    return c0 + c1 * c + c2 * (c * c - p.beta);
}

double EigenData::regular(const GasParams& p, double mu) const {
    if (mu == eta) throw DomainError("eigenfunction: mu == eta is the pole; use the distributional form");
    return prefactor * q_tilde(p, mu) / (eta - mu);
}

EigenData eigen_data(const QuadratureScheme& scheme, double eta, double g) {
    const GasParams& p = scheme.params();
    require_cut_point(p, eta, "eigen_data");
    const DispersionEval ev = dispersion_eval(p, moments_pv(scheme, eta));
    EigenData d;
    d.eta = eta;
    d.lambda = ev.det.real();
    if (d.lambda == 0.0) throw EvaluationError("eigen_data: principal-value symbol vanishes");
    for (int k = 0; k < 3; ++k) d.cofactors[k] = (*ev.cofactors)[k].real();
    d.c0 = p.r0 * d.cofactors[0];
    d.c1 = p.r1 * d.cofactors[1];
    d.c2 = p.r2 * (d.cofactors[2] - p.beta * d.cofactors[0]);
    d.g = g;
    d.prefactor = g * eta * weight(p, eta) / d.lambda;
    return d;
}

double eigenfunction_regular(const QuadratureScheme& scheme, double eta, double mu, double g) {
    require_cut_point(scheme.params(), mu, "eigenfunction_regular");
    return eigen_data(scheme, eta, g).regular(scheme.params(), mu);
}

NormalizationCheck normalization_check(const QuadratureScheme& scheme, double eta) {
    const GasParams& p = scheme.params();
    const EigenData d = eigen_data(scheme, eta);
    const double c_eta = velocity_map(p, eta);
    const double rho_eta = weight(p, eta);
    NormalizationCheck out;
    for (int alpha = 0; alpha < 3; ++alpha) {
        // int rho(mu) Q~ C^alpha / (eta - mu) dmu = int w(C) f(C) / (C - C_eta) dC
        auto f = [&](double c) {
            const double q = d.c0 + d.c1 * c + d.c2 * (c * c - p.beta);
            return q * std::pow(c, alpha) * pole_ratio(p, c, c_eta, eta);
        };
        const double pv = integrate_pv(scheme, f, c_eta);
        out.quadrature[alpha] = d.prefactor * pv + rho_eta * std::pow(c_eta, alpha);
        out.cofactor[alpha] = rho_eta * d.cofactors[alpha] / d.lambda;
        out.deviation[alpha] = std::abs(out.quadrature[alpha] - out.cofactor[alpha]);
    }
    return out;
}

double SpectralExpansion::continuum(double e) const {
    if (!has_continuum() || e < eta.front() || e > eta.back()) return 0.0;
    return spline->spline(e);
}

SpectralExpansion make_expansion(const GasParams& p, const std::array<double, 4>& discrete,
                                 double eta_lo, double eta_hi, std::vector<double> values) {
    SpectralExpansion s;
    s.discrete = discrete;
    for (double v : discrete)
        if (!std::isfinite(v)) throw DomainError("make_expansion: non-finite discrete coefficient");
    if (values.empty()) return s;
    if (values.size() < 4) throw std::invalid_argument("make_expansion: need at least 4 grid values");
    if (!(eta_lo < eta_hi) || !(std::abs(eta_lo) < p.alpha) || !(std::abs(eta_hi) < p.alpha))
        throw DomainError("make_expansion: grid must lie strictly inside the cut");
    for (double v : values)
        if (!std::isfinite(v)) throw DomainError("make_expansion: non-finite continuum value");
    const std::size_t n = values.size();
    const double h = (eta_hi - eta_lo) / static_cast<double>(n - 1);
    s.eta.resize(n);
    for (std::size_t j = 0; j < n; ++j) s.eta[j] = eta_lo + h * static_cast<double>(j);
    s.eta.back() = eta_hi;
    s.values = std::move(values);
    s.spline = std::make_shared<detail::ContinuumSpline>(detail::ContinuumSpline{
        boost::math::interpolators::cardinal_cubic_b_spline<double>(s.values.data(), n, eta_lo, h)});
    return s;
}

ExpansionEvaluator::ExpansionEvaluator(const QuadratureScheme& scheme, SpectralExpansion expansion,
                                       int nodes_per_cell)
    : scheme_(scheme), expansion_(std::move(expansion)) {
    const GasParams& p = scheme.params();
    if (!expansion_.has_continuum()) {
        rule_ = scheme.weighted_rule();
        return;
    }
    const auto& grid = expansion_.eta;
    const GaussRule ref = gauss_legendre(nodes_per_cell);
    std::vector<double> breaks_c;
    for (std::size_t j = 0; j < grid.size(); ++j) breaks_c.push_back(velocity_map(p, grid[j]));
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const double lo = grid[j], hi = grid[j + 1];
        for (std::size_t k = 0; k < ref.size(); ++k) {
            const double e = 0.5 * (lo + hi) + 0.5 * (hi - lo) * ref.nodes[k];
            data_.push_back(eigen_data(scheme, e));
            weights_.push_back(0.5 * (hi - lo) * ref.weights[k]);
            amplitude_.push_back(expansion_.continuum(e));
        }
    }
    // With g = 1 the eigenfunction carries 1/lambda_pv(eta); the coefficient has to vanish
    // wherever that symbol changes sign, otherwise the eta-integral diverges.
    double amp_scale = 0.0;
    for (double v : amplitude_) amp_scale = std::max(amp_scale, std::abs(v));
    for (std::size_t k = 0; k + 1 < data_.size(); ++k) {
        if (data_[k].lambda * data_[k + 1].lambda < 0.0 &&
            std::max(std::abs(amplitude_[k]), std::abs(amplitude_[k + 1])) > 1e-12 * amp_scale)
            throw DomainError("ExpansionEvaluator: continuum coefficient is nonzero near eta = " +
                              std::to_string(data_[k].eta) +
                              ", where the principal-value symbol vanishes");
    }
    rule_ = composite_weighted_rule(p, breaks_c);
}

double ExpansionEvaluator::continuum_part(double x, double mu, bool derivative) const {
    const GasParams& p = scheme_.params();
    const double c = velocity_map(p, mu);
    const double b2 = c * c - p.beta;
    auto integrand = [&](const EigenData& d, double amp) {
        return exp_factor(x, d.eta, derivative) * d.prefactor * amp * (d.c0 + d.c1 * c + d.c2 * b2);
    };

    const double a_mu = expansion_.continuum(mu);
    double f_mu = 0.0;
    if (a_mu != 0.0) f_mu = integrand(eigen_data(scheme_, mu), a_mu);

    const double lo = expansion_.eta.front(), hi = expansion_.eta.back();
    double acc = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        const double d = data_[k].eta - mu;
        double q;
        if (std::abs(d) > 1e-9 * (1.0 + std::abs(mu))) {
            q = (integrand(data_[k], amplitude_[k]) - f_mu) / d;
        } else {
            // Node on top of the pole: use the derivative of the numerator.
            const double h = 1e-5 * (1.0 + std::abs(mu));
            auto f_at = [&](double e) { return integrand(eigen_data(scheme_, e), expansion_.continuum(e)); };
            q = (f_at(mu + h) - f_at(mu - h)) / (2 * h);
        }
        acc += weights_[k] * q;
    }
    if (f_mu != 0.0) acc += f_mu * std::log(std::abs((hi - mu) / (lo - mu)));
    // Delta term of the eigenfunction (g = 1).
    if (a_mu != 0.0) acc += exp_factor(x, mu, derivative) * a_mu;
    return acc;
}

double ExpansionEvaluator::value(double x, double mu) const {
    const GasParams& p = scheme_.params();
    double h = 0.0;
    for (int k = 0; k < 4; ++k)
        if (expansion_.discrete[k] != 0.0) h += expansion_.discrete[k] * discrete_solution(p, k, x, mu);
    if (expansion_.has_continuum()) h += continuum_part(x, mu, false);
    return h;
}

double ExpansionEvaluator::dx(double x, double mu) const {
    const GasParams& p = scheme_.params();
    double h = 0.0;
    if (expansion_.discrete[3] != 0.0) h += expansion_.discrete[3] * discrete_solution_dx(p, 3, x, mu);
    if (expansion_.has_continuum()) h += continuum_part(x, mu, true);
    return h;
}

double apply_expansion(const QuadratureScheme& scheme, const SpectralExpansion& expansion, double x,
                       double mu) {
    require_cut_point(scheme.params(), mu, "apply_expansion");
    return ExpansionEvaluator(scheme, expansion).value(x, mu);
}

std::vector<double> default_mu_grid(const GasParams& p) {
    std::vector<double> grid(64);
    for (int j = 0; j < 64; ++j) grid[j] = mu_of(p, -4.0 + 8.0 * j / 63.0);
    return grid;
}

double residual_2_4(const QuadratureScheme& scheme, const Profile& h, double x, const Profile& h_x,
                    const ResidualOptions& options) {
    const GasParams& p = scheme.params();
    const GaussRule& rule = options.rule ? *options.rule : scheme.weighted_rule();
    const std::vector<double> grid = options.mu_grid.empty() ? default_mu_grid(p) : options.mu_grid;

    // Collision integral reduces to three moments of h.
    double i0 = 0.0, i1 = 0.0, i2 = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const double c = rule.nodes[k];
        const double v = rule.weights[k] * h(x, mu_of(p, c));
        i0 += v;
        i1 += v * c;
        i2 += v * (c * c - p.beta);
    }

    double worst = 0.0;
    for (double mu : grid) {
        const double c = velocity_map(p, mu);
        const double collision = p.r0 * i0 + p.r1 * c * i1 + p.r2 * (c * c - p.beta) * i2;
        double deriv;
        if (h_x) {
            deriv = h_x(x, mu);
        } else {
            const double s = options.fd_step;
            deriv = (h(x + s, mu) - h(x - s, mu)) / (2 * s);
        }
        const double r = mu * deriv + h(x, mu) - collision;
        if (!std::isfinite(r)) throw EvaluationError("residual_2_4: non-finite residual");
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace bgk
