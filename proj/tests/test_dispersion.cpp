#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "bgk/dispersion.hpp"

using namespace bgk;

namespace {

const double inf = std::numeric_limits<double>::infinity();

cplx sarrus(const Matrix3c& m) {
    return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) + m(0, 2) * m(1, 0) * m(2, 1) -
           m(0, 2) * m(1, 1) * m(2, 0) - m(0, 0) * m(1, 2) * m(2, 1) - m(0, 1) * m(1, 0) * m(2, 2);
}

using Poly = std::vector<double>;  // coefficients in u = 1/z

Poly mul(const Poly& x, const Poly& y, std::size_t keep) {
    Poly r(keep, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size() && i + j < keep; ++j) r[i + j] += x[i] * y[j];
    return r;
}

Poly add(const Poly& x, const Poly& y, double s = 1.0) {
    Poly r(std::max(x.size(), y.size()), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += s * y[i];
    return r;
}

// Taylor coefficients in u = 1/z of lambda at infinity, from moments computed by
// adaptive quadrature: t_n = -sum_k M(n, k) u^k.
Poly lambda_series(const GasParams& p, std::size_t keep) {
    const int kmax = static_cast<int>(keep);
    std::vector<Poly> t(7, Poly(keep, 0.0));
    for (int n = 0; n < 7; ++n) {
        for (int k = 0; k < kmax; ++k) {
            if ((n + k) % 2) continue;
            auto f = [&](double c) {
                return std::exp(-c * c) * (1.0 + p.a * std::abs(c)) * std::pow(c, n) * std::pow(mu_of(p, c), k);
            };
            using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
            t[n][k] = -(GK::integrate(f, -inf, 0.0, 25, 1e-14) + GK::integrate(f, 0.0, inf, 25, 1e-14));
        }
    }
    Poly one(keep, 0.0);
    one[0] = 1.0;
    Poly m[3][3];
    for (int k = 0; k < 3; ++k) {
        Poly e0(keep), e1(keep), e2(keep);
        for (std::size_t i = 0; i < keep; ++i) {
            e0[i] = (p.r0 + p.beta * p.beta * p.r2) * t[k][i] - p.beta * p.r2 * t[k + 2][i];
            e1[i] = p.r1 * t[k + 1][i];
            e2[i] = p.r2 * (t[k + 2][i] - p.beta * t[k][i]);
        }
        m[k][0] = e0;
        m[k][1] = e1;
        m[k][2] = e2;
        m[k][k] = add(m[k][k], one);
    }
    auto term = [&](int a, int b, int c) { return mul(mul(m[0][a], m[1][b], keep), m[2][c], keep); };
    Poly det = add(add(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
    det = add(det, term(2, 1, 0), -1.0);
    det = add(det, term(0, 2, 1), -1.0);
    det = add(det, term(1, 0, 2), -1.0);
    return det;
}

}  // namespace

TEST_CASE("determinant agrees with the six-term expansion") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (double a : {0.0, 0.5, 2.0}) {
        const GasParams p = make_params(a);
        const QuadratureScheme s(p);
        for (int trial = 0; trial < 10; ++trial) {
            const cplx z(u(rng), 0.05 + std::abs(u(rng)));
            const DispersionEval e = dispersion_eval(p, moments_at(s, z));
            CHECK(std::abs(e.det - sarrus(e.matrix)) < 1e-13 * std::max(1.0, std::abs(e.det)));
            CHECK_FALSE(e.cofactors.has_value());
        }
    }
}

TEST_CASE("lambda is even and conjugation-symmetric") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (double a : {0.0, 1.0}) {
        const QuadratureScheme s(make_params(a));
        for (int trial = 0; trial < 10; ++trial) {
            const cplx z(u(rng), 0.02 + std::abs(u(rng)));
            const cplx l = lambda_fn(s, z);
            const double tol = 1e-12 * std::max(1.0, std::abs(l));
            CHECK(std::abs(lambda_fn(s, -z) - l) < tol);
            CHECK(std::abs(lambda_fn(s, std::conj(z)) - std::conj(l)) < tol);
        }
        // Boundary values: lambda(-x + i0) = lambda(x - i0) = conj lambda(x + i0).
        for (double x : {0.1, 0.35, 0.8}) {
            const cplx lp = lambda_boundary(s, x, Side::plus);
            CHECK(std::abs(lambda_boundary(s, -x, Side::plus) - std::conj(lp)) < 1e-13);
            CHECK(std::abs(lambda_boundary(s, x, Side::minus) - std::conj(lp)) < 1e-13);
        }
    }
}

TEST_CASE("Sokhotsky relation carries a factor x") {
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        const GasParams p = make_params(a);
        const QuadratureScheme s(p);
        const double top = p.unbounded_cut() ? 3.0 : 0.9 * p.alpha;
        for (double f : {-0.8, -0.3, 0.1, 0.3, 0.65}) {
            const double x = f * top;
            const SokhotskyResult r = sokhotsky_jump(s, x);
            CHECK(std::abs(r.jump - x * r.claimed_jump) < 1e-10 * std::max(1.0, std::abs(r.jump)));
            CHECK(std::abs(r.mean - r.lambda_pv) < 1e-12);
            CHECK(r.ratio.real() == doctest::Approx(x).epsilon(1e-9));
            CHECK(std::abs(r.ratio.imag()) < 1e-9);
        }
    }
}

TEST_CASE("cofactors are the replaced-column determinants") {
    const GasParams p = make_params(1.0);
    const QuadratureScheme s(p);
    const MomentSet pv = moments_pv(s, 0.42);
    const DispersionEval e = dispersion_eval(p, pv);
    REQUIRE(e.cofactors.has_value());
    for (int k = 0; k < 3; ++k) CHECK(std::abs((*e.cofactors)[k] - lambda_alpha(p, pv, k, 0.42)) < 1e-14);
    CHECK_THROWS(lambda_alpha(p, pv, 3, 0.42));
    CHECK_THROWS_AS(q_tilde(p, moments_at(s, cplx(0.2, 0.5)), 0.2, 0.1), RegionError);
    CHECK_THROWS_AS(q_tilde(p, moments_boundary(s, 0.2, Side::plus), 0.2, 0.1), RegionError);
}

TEST_CASE("q_tilde matches the kernel combination of cofactors") {
    const GasParams p = make_params(0.5);
    const QuadratureScheme s(p);
    const double eta = 0.6;
    const MomentSet pv = moments_pv(s, eta);
    for (double mu : {-1.5, 0.0, 0.3, 1.9}) {
        const double c = velocity_map(p, mu);
        const double l0 = lambda_alpha(p, pv, 0, eta).real();
        const double l1 = lambda_alpha(p, pv, 1, eta).real();
        const double l2 = lambda_alpha(p, pv, 2, eta).real();
        const double want = p.r0 * l0 + p.r1 * c * l1 + p.r2 * (c * c - p.beta) * (l2 - p.beta * l0);
        CHECK(q_tilde(p, pv, eta, mu) == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("fourth-order zero at infinity") {
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        const GasParams p = make_params(a);
        const QuadratureScheme s(p);
        const LaurentFit fit = laurent_order_at_infinity(s);
        CHECK(fit.order == 4);
        CHECK(describe_spectrum(s).multiplicity_at_infinity == 4);
        // Series of the determinant in 1/z from independently integrated moments.
        const Poly series = lambda_series(p, 7);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(series[k]) < 1e-10);
        INFO("a=" << a << " fit " << fit.leading_coeff << " series " << series[4]);
        CHECK(std::abs(fit.leading_coeff - series[4]) < 1e-4 * std::abs(series[4]));
        if (a == 0.0) CHECK(series[4] == doctest::Approx(0.75).epsilon(1e-10));
    }
}

TEST_CASE("zero counting") {
    const GasParams p = make_params(1.0);
    const QuadratureScheme s(p);
    CHECK(count_zeros(s, keyhole_contour(p, 2.0, 1.0, 1e-2)).winding == 0);
    CHECK(count_zeros(s, circle_contour(cplx(0.5, 0.5), 0.3)).winding == 0);
    CHECK_THROWS_AS(count_zeros(s, circle_contour(cplx(0.0, 0.0), 0.3)), IllConditionedContour);
    CHECK_THROWS_AS(keyhole_contour(make_params(0.0), 2.0, 1.0, 0.1), DomainError);
    CHECK_THROWS(keyhole_contour(p, 1.0, 1.0, 0.1));

    const QuadratureScheme s0(make_params(0.0));
    CHECK(count_zeros(s0, upper_semicircle(5.0, 0.05)).winding == 0);
}

TEST_CASE("sign changes of the principal-value symbol") {
    // Frozen from bisection runs; each zero is confirmed by a sign change here.
    struct Case {
        double a, z0, z1;
    };
    for (const Case c : {Case{0.0, 0.597, 1.956}, Case{1.0, 0.391, 0.666}, Case{2.0, 0.284, 0.400}}) {
        const QuadratureScheme s(make_params(c.a));
        const auto z = principal_symbol_zeros(s, 600);
        REQUIRE(z.size() == 2);
        CHECK(z[0] == doctest::Approx(c.z0).epsilon(2e-3));
        CHECK(z[1] == doctest::Approx(c.z1).epsilon(2e-3));
        for (double x : z) {
            CHECK(lambda_pv(s, x * 0.99).real() * lambda_pv(s, x * 1.01).real() < 0.0);
        }
    }
}
