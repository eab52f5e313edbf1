#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "bgk/spectrum.hpp"

using namespace bgk;

namespace {

template <class F>
double gk(F f, double lo, double hi) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
}

// PV int_{-alpha}^{alpha} F(m) / (eta - m) dm, split into a symmetric pair around eta and a tail.
template <class F>
double pv_oracle(F f, double eta, double alpha) {
    const double d = std::min(alpha - eta, eta + alpha);
    auto pair = [&](double s) { return (f(eta - s) - f(eta + s)) / s; };
    double v = gk(pair, 0.0, d);
    if (eta > 0) v += gk([&](double m) { return f(m) / (eta - m); }, -alpha, eta - d);
    else v += gk([&](double m) { return f(m) / (eta - m); }, eta + d, alpha);
    return v;
}

}  // namespace

TEST_CASE("discrete solutions solve the transport equation") {
    for (double a : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        const GasParams p = make_params(a);
        const QuadratureScheme s(p);
        for (int k = 0; k < 4; ++k) {
            for (double x : {0.0, 0.7, 2.0}) {
                INFO("a=" << a << " k=" << k << " x=" << x);
                const double r = residual_2_4(
                    s, [&](double xx, double mu) { return discrete_solution(p, k, xx, mu); }, x,
                    [&](double xx, double mu) { return discrete_solution_dx(p, k, xx, mu); });
                CHECK(r < 1e-8);
            }
        }
    }
    CHECK_THROWS(discrete_solution(make_params(1.0), 4, 0.0, 0.0));
}

TEST_CASE("residual detects non-solutions") {
    const GasParams p = make_params(1.0);
    const QuadratureScheme s(p);
    auto bad = [&](double, double mu) { return std::pow(velocity_map(p, mu), 3); };
    CHECK(residual_2_4(s, bad, 0.5) > 1e-3);
    // Finite-difference and analytic derivatives agree.
    auto h3 = [&](double x, double mu) { return discrete_solution(p, 3, x, mu); };
    CHECK(residual_2_4(s, h3, 0.4) < 1e-8);
    CHECK(default_mu_grid(p).size() == 64);
}

TEST_CASE("eigenfunction satisfies its defining equation") {
    // (1 - mu/eta) Phi(mu) = PV int rho(m) q(mu, m) Phi_reg(m) dm + g rho(eta) q(mu, eta)
    for (double a : {0.5, 1.0}) {
        const GasParams p = make_params(a);
        const QuadratureScheme s(p);
        for (double eta : {-0.45 * p.alpha, 0.2 * p.alpha, 0.3 * p.alpha}) {
            const EigenData d = eigen_data(s, eta, 1.0);
            for (double mu : {-0.5 * p.alpha, 0.1 * p.alpha, 0.6 * p.alpha}) {
                const double lhs = (1.0 - mu / eta) * d.regular(p, mu);
                auto f = [&](double m) {
                    return std::abs(m) >= p.alpha ? 0.0 : weight(p, m) * kernel_q(p, mu, m) * d.prefactor * d.q_tilde(p, m);
                };
                const double rhs = pv_oracle(f, eta, p.alpha) + d.g * weight(p, eta) * kernel_q(p, mu, eta);
                INFO("a=" << a << " eta=" << eta << " mu=" << mu);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8).scale(1.0));
            }
        }
        CHECK_THROWS_AS(eigenfunction_regular(s, 0.2, 0.2), DomainError);
    }
}

TEST_CASE("normalization consistency") {
    for (double a : {0.5, 1.0}) {
        const GasParams p = make_params(a);
        const QuadratureScheme s(p);
        for (int j = 0; j < 10; ++j) {
            const double eta = p.alpha * (-0.9 + 1.8 * (j + 0.5) / 10);
            const NormalizationCheck n = normalization_check(s, eta);
            for (int k = 0; k < 3; ++k) CHECK(n.deviation[k] < 1e-6);
        }
    }
}

TEST_CASE("expansion validation") {
    const GasParams p = make_params(1.0);
    const std::vector<double> v(8, 1.0);
    CHECK_THROWS_AS(make_expansion(p, {0, 0, 0, 0}, 0.2, 1.0, v), DomainError);
    CHECK_THROWS_AS(make_expansion(p, {0, 0, 0, 0}, 0.5, 0.2, v), DomainError);
    CHECK_THROWS(make_expansion(p, {0, 0, 0, 0}, 0.1, 0.2, {1.0, 2.0}));
    CHECK_THROWS_AS(make_expansion(p, {std::nan(""), 0, 0, 0}), DomainError);
    const SpectralExpansion e = make_expansion(p, {0, 0, 0, 0}, 0.1, 0.3, v);
    CHECK(e.continuum(0.05) == 0.0);
    CHECK(e.continuum(0.2) == doctest::Approx(1.0));
    CHECK(e.continuum(0.31) == 0.0);

    // The continuum coefficient may not straddle a sign change of the principal-value symbol.
    const QuadratureScheme s(p);
    const auto zeros = principal_symbol_zeros(s, 400);
    REQUIRE(!zeros.empty());
    CHECK_THROWS_AS(ExpansionEvaluator(s, make_expansion(p, {0, 0, 0, 0}, 0.1, zeros[0] + 0.05, v)),
                    DomainError);
}

TEST_CASE("discrete-only expansion is the sum of discrete solutions") {
    const GasParams p = make_params(0.5);
    const QuadratureScheme s(p);
    const std::array<double, 4> c{0.3, -1.2, 0.7, 0.25};
    const SpectralExpansion e = make_expansion(p, c);
    for (double x : {0.0, 1.1})
        for (double mu : {-1.2, 0.4}) {
            double want = 0.0;
            for (int k = 0; k < 4; ++k) want += c[k] * discrete_solution(p, k, x, mu);
            CHECK(apply_expansion(s, e, x, mu) == doctest::Approx(want).epsilon(1e-14));
        }
}

TEST_CASE("expansion with a continuum bump solves the transport equation") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (double a : {0.0, 0.5, 1.0}) {
        const GasParams p = make_params(a);
        const QuadratureScheme s(p);
        const double top = principal_symbol_zeros(s, 400).front();
        const int n = 161;
        std::vector<double> v(n);
        for (int j = 0; j < n; ++j) {
            const double t = 2.0 * j / (n - 1) - 1.0;
            v[j] = std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
        }
        const std::array<double, 4> c{coef(rng), coef(rng), coef(rng), coef(rng)};
        const ExpansionEvaluator ev(s, make_expansion(p, c, 0.1 * top, 0.9 * top, v));
        ResidualOptions opt;
        opt.rule = &ev.rule();
        for (double x : {0.5, 1.0}) {
            const double r = residual_2_4(
                s, [&](double xx, double mu) { return ev.value(xx, mu); }, x,
                [&](double xx, double mu) { return ev.dx(xx, mu); }, opt);
            INFO("a=" << a << " x=" << x);
            CHECK(r < 1e-5);
        }
        // The continuum part actually contributes.
        const ExpansionEvaluator discrete_only(s, make_expansion(p, c));
        CHECK(std::abs(ev.value(0.5, 0.3 * top) - discrete_only.value(0.5, 0.3 * top)) > 1e-4);
    }
}
