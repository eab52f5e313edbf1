#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <type_traits>
#include <vector>

#include "bgk/params.hpp"

namespace bgk {

using cplx = std::complex<double>;

/// Which boundary value to take when a Cauchy-type integral is evaluated at a
/// real point of its contour: principal value, limit from above, limit from below.
enum class Side : int { pv = 0, plus = 1, minus = -1 };

inline Side opposite(Side s) { return static_cast<Side>(-static_cast<int>(s)); }

/// Nodes and weights; the weight function (if any) is folded into `weights`.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [lo, hi].
GaussRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

/// n-point Gauss rule on [0, inf) for the weight exp(-u^2) (c0 + c1 u), c0, c1 >= 0.
/// Recurrence coefficients come from a discretized Stieltjes procedure; nodes and
/// weights from the Jacobi matrix (Golub-Welsch).
GaussRule half_range_gauss(int n, double c0, double c1);

/// Composite Gauss-Legendre rule on [lo, hi] with panel boundaries at `breaks`
/// (which are clipped to the interval) and maximum panel width `max_width`.
GaussRule composite_legendre(double lo, double hi, std::span<const double> breaks,
                             int nodes_per_panel, double max_width);

/// Quadrature machinery bound to one GasParams.
///
/// The weighted rule integrates against w(C) = exp(-C^2)(1 + a|C|) over the real
/// line; it is symmetric, built from a half-range Gauss rule, and exact for
/// polynomials in |C| of degree < nodes. The Cauchy rule is a Gauss-Legendre rule
/// on [0, cutoff] used for half-line Cauchy transforms of exp(-u^2) P(u).
class QuadratureScheme {
public:
    static constexpr int default_nodes = 200;
    static constexpr double cutoff = 10.0;

    QuadratureScheme(const GasParams& params, int nodes = default_nodes);

    [[nodiscard]] const GasParams& params() const { return params_; }
    [[nodiscard]] int nodes() const { return nodes_; }
    [[nodiscard]] const GaussRule& weighted_rule() const { return weighted_; }

    /// Gauss-Legendre nodes on [0, cutoff] with exp(-u^2) tabulated.
    [[nodiscard]] const GaussRule& cauchy_rule() const { return cauchy_; }
    [[nodiscard]] const std::vector<double>& cauchy_gauss() const { return cauchy_exp_; }
    /// Shorter interval [0, cutoff - 2.5], used when the pole sits beyond the support.
    [[nodiscard]] const GaussRule& short_rule() const { return short_; }
    [[nodiscard]] const std::vector<double>& short_gauss() const { return short_exp_; }

    /// M[n][k] = integral of w(C) C^n mu(C)^k dC, n = 0..4, k = 0..3. These are
    /// the coefficients of the large-|z| expansion of the moment integrals.
    [[nodiscard]] double asymptotic_moment(int n, int k) const { return asym_[n][k]; }

    /// Throws std::invalid_argument when `p` is not the parameter set the scheme was built for.
    void check_params(const GasParams& p) const;

private:
    GasParams params_;
    int nodes_;
    GaussRule weighted_;
    GaussRule cauchy_;
    std::vector<double> cauchy_exp_;
    GaussRule short_;
    std::vector<double> short_exp_;
    double asym_[5][4] = {};
};

/// Composite rule over the real line for the weight w(C) of `params`, with panel
/// boundaries at the given C-values and at 0. Used when the integrand is only
/// piecewise smooth (e.g. spline data).
GaussRule composite_weighted_rule(const GasParams& params, std::span<const double> breaks_c,
                                  int nodes_per_panel = 12, double max_width = 0.5);

/// Sum of weights[k] * f(nodes[k]).
template <class F>
auto integrate_rule(const GaussRule& rule, F&& f) {
    using T = std::decay_t<decltype(f(0.0))>;
    T acc{};
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const T v = f(rule.nodes[k]);
        acc += rule.weights[k] * v;
    }
    return acc;
}

/// Integral of exp(-C^2)(1 + a|C|) f(C) over the real line.
template <class F>
auto integrate_weighted(const QuadratureScheme& scheme, F&& f) {
    using T = std::decay_t<decltype(f(0.0))>;
    T acc = integrate_rule(scheme.weighted_rule(), f);
    if constexpr (std::is_same_v<T, double>) {
        if (!std::isfinite(acc)) throw EvaluationError("integrate_weighted: non-finite result");
    } else {
        if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
            throw EvaluationError("integrate_weighted: non-finite result");
    }
    return acc;
}

/// Half-line Cauchy transform: integral over [0, inf) of exp(-u^2) P(u) / (u - zeta) du,
/// P given by ascending coefficients. For real zeta the `side` selects the principal
/// value or a boundary value; it is ignored for non-real zeta.
cplx half_line_cauchy(const QuadratureScheme& scheme, std::span<const double> poly, cplx zeta,
                      Side side = Side::pv);

/// Batched form: out[j] receives the transform of polys[j].
void half_line_cauchy(const QuadratureScheme& scheme, std::span<const std::vector<double>> polys,
                      cplx zeta, Side side, std::span<cplx> out);

/// Cauchy transform of the weight itself: integral of w(C) / (C - pole) over the real line.
/// For real `pole` this is the principal value (side pv) or a boundary value.
cplx weight_cauchy(const QuadratureScheme& scheme, cplx pole, Side side = Side::pv);

namespace detail {

template <class F>
auto difference_quotient(F& f, double c, double pole, decltype(f(0.0)) f_pole) {
    const double d = c - pole;
    if (std::abs(d) > 1e-7 * (1.0 + std::abs(pole))) return (f(c) - f_pole) / d;
    const double h = 1e-3 * (1.0 + std::abs(pole));
    return (-f(pole + 2 * h) + 8.0 * f(pole + h) - 8.0 * f(pole - h) + f(pole - 2 * h)) /
           (12.0 * h);
}

}  // namespace detail

/// Principal value of the integral of w(C) f(C) / (C - pole) over the real line,
/// by singularity subtraction: the regular part (f(C) - f(pole)) / (C - pole) goes
/// through the weighted rule, the subtracted part through weight_cauchy.
/// f must be smooth near the pole.
template <class F>
auto integrate_pv(const QuadratureScheme& scheme, F&& f, double pole) {
    using T = std::decay_t<decltype(f(0.0))>;
    if (!std::isfinite(pole)) throw DomainError("integrate_pv: pole must be finite");
    const T f_pole = f(pole);
    const T regular = integrate_weighted(
        scheme, [&](double c) -> T { return detail::difference_quotient(f, c, pole, f_pole); });
    const cplx k = weight_cauchy(scheme, cplx(pole, 0.0), Side::pv);
    if constexpr (std::is_same_v<T, double>) {
        return regular + f_pole * k.real();
    } else {
        return regular + f_pole * k;
    }
}

}  // namespace bgk
