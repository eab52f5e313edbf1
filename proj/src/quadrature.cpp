#include "bgk/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bgk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

// exp(w) - 1 divided by w, accurate near w = 0.
cplx expm1_over(cplx w) {
    if (std::abs(w) < 0.05) {
        cplx term = 1.0;
        cplx sum = 1.0;
        for (int k = 2; k <= 9; ++k) {
            term *= w / static_cast<double>(k);
            sum += term;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

cplx horner(std::span<const double> poly, cplx x) {
    cplx acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double horner(std::span<const double> poly, double x) {
    double acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Coefficients of S(u) with P(u) - P(zeta) = (u - zeta) S(u).
std::vector<cplx> synthetic_quotient(std::span<const double> poly, cplx zeta) {
    const std::size_t m = poly.size();
    if (m <= 1) return {};
    std::vector<cplx> q(m - 1);
    cplx b = poly[m - 1];
    q[m - 2] = b;
    for (std::size_t k = m - 2; k >= 1; --k) {
        b = poly[k] + zeta * b;
        q[k - 1] = b;
    }
    return q;
}

cplx horner(const std::vector<cplx>& poly, double x) {
    cplx acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double distance_to_segment(cplx z, double lo, double hi) {
    const double x = std::clamp(z.real(), lo, hi);
    return std::abs(z - cplx(x, 0.0));
}

bool is_real_point(cplx zeta, Side side) { return zeta.imag() == 0.0 || side != Side::pv; }

}  // namespace

GaussRule gauss_legendre(int n, double lo, double hi) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

GaussRule half_range_gauss(int n, double c0, double c1) {
    if (n < 1) throw std::invalid_argument("half_range_gauss: n must be >= 1");
    if (c0 < 0.0 || c1 < 0.0 || c0 + c1 == 0.0)
        throw std::invalid_argument("half_range_gauss: weight coefficients must be >= 0");

    // Discretize the measure finely enough to be exact for polynomials of degree 2n.
    const double upper = std::sqrt(4.0 * n + 1.0) + 10.0;
    const GaussRule grid = composite_legendre(0.0, upper, {}, 24, 0.5);
    const std::size_t m = grid.size();
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double u = grid.nodes[i];
        w[i] = grid.weights[i] * std::exp(-u * u) * (c0 + c1 * u);
    }

    // Stieltjes procedure with orthonormal polynomials.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    double mass = 0.0;
    for (double wi : w) mass += wi;
    std::vector<double> q_prev(m, 0.0);
    std::vector<double> q(m, 1.0 / std::sqrt(mass));
    std::vector<double> r(m);
    double b_prev = 0.0;
    for (int k = 0; k < n; ++k) {
        double ak = 0.0;
        for (std::size_t i = 0; i < m; ++i) ak += w[i] * grid.nodes[i] * q[i] * q[i];
        diag(k) = ak;
        if (k == n - 1) break;
        double norm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            r[i] = (grid.nodes[i] - ak) * q[i] - b_prev * q_prev[i];
            norm2 += w[i] * r[i] * r[i];
        }
        const double bk = std::sqrt(norm2);
        sub(k) = bk;
        for (std::size_t i = 0; i < m; ++i) {
            q_prev[i] = q[i];
            q[i] = r[i] / bk;
        }
        b_prev = bk;
    }

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mass;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw EvaluationError("half_range_gauss: eigensolver failed");
    // Weights from the Christoffel function 1 / sum_k p_k(x)^2: unlike the squared
    // first eigenvector components, this keeps relative accuracy for the tiny tail weights.
    for (int j = 0; j < n; ++j) {
        const double x = solver.eigenvalues()(j);
        double p_prev = 0.0;
        double p = 1.0 / std::sqrt(mass);
        double sum = p * p;
        for (int k = 0; k + 1 < n; ++k) {
            const double p_next = ((x - diag(k)) * p - (k > 0 ? sub(k - 1) : 0.0) * p_prev) / sub(k);
            p_prev = p;
            p = p_next;
            sum += p * p;
        }
        rule.nodes[j] = x;
        rule.weights[j] = 1.0 / sum;
    }
    return rule;
}

GaussRule composite_legendre(double lo, double hi, std::span<const double> breaks,
                             int nodes_per_panel, double max_width) {
    if (!(hi > lo)) throw std::invalid_argument("composite_legendre: empty interval");
    std::vector<double> pts{lo, hi};
    for (double b : breaks)
        if (b > lo && b < hi) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const GaussRule ref = gauss_legendre(nodes_per_panel);
    GaussRule out;
    for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
        const double len = pts[p + 1] - pts[p];
        const int pieces = std::max(1, static_cast<int>(std::ceil(len / max_width)));
        const double h = len / pieces;
        for (int j = 0; j < pieces; ++j) {
            const double a = pts[p] + j * h;
            for (std::size_t k = 0; k < ref.size(); ++k) {
                out.nodes.push_back(a + 0.5 * h * (ref.nodes[k] + 1.0));
                out.weights.push_back(0.5 * h * ref.weights[k]);
            }
        }
    }
    return out;
}

GaussRule composite_weighted_rule(const GasParams& params, std::span<const double> breaks_c,
                                  int nodes_per_panel, double max_width) {
    const double r = QuadratureScheme::cutoff;
    std::vector<double> breaks{0.0};
    for (double b : breaks_c) breaks.push_back(b);
    // Grade towards C = 0 on the scale 1/a, where mu(C) has its nearest pole.
    if (params.a > 1.0) {
        for (double g = 0.25 / params.a; g < max_width; g *= 2.0) {
            breaks.push_back(g);
            breaks.push_back(-g);
        }
    }
    GaussRule rule = composite_legendre(-r, r, breaks, nodes_per_panel, max_width);
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const double c = rule.nodes[k];
        rule.weights[k] *= std::exp(-c * c) * (1.0 + params.a * std::abs(c));
    }
    return rule;
}

QuadratureScheme::QuadratureScheme(const GasParams& params, int nodes)
    : params_(params), nodes_(nodes) {
    if (nodes < 4 || nodes % 2 != 0)
        throw std::invalid_argument("QuadratureScheme: node count must be even and >= 4");

    const GaussRule half = half_range_gauss(nodes / 2, 1.0, params.a);
    for (std::size_t k = 0; k < half.size(); ++k) {
        weighted_.nodes.push_back(-half.nodes[k]);
        weighted_.weights.push_back(half.weights[k]);
    }
    std::reverse(weighted_.nodes.begin(), weighted_.nodes.end());
    std::reverse(weighted_.weights.begin(), weighted_.weights.end());
    for (std::size_t k = 0; k < half.size(); ++k) {
        weighted_.nodes.push_back(half.nodes[k]);
        weighted_.weights.push_back(half.weights[k]);
    }

    cauchy_ = gauss_legendre(nodes, 0.0, cutoff);
    short_ = gauss_legendre(nodes, 0.0, cutoff - 2.5);
    for (double u : cauchy_.nodes) cauchy_exp_.push_back(std::exp(-u * u));
    for (double u : short_.nodes) short_exp_.push_back(std::exp(-u * u));

    const GaussRule fine = composite_weighted_rule(params, {}, 16, 0.25);
    for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k <= 3; ++k) {
            asym_[n][k] = integrate_rule(fine, [&](double c) {
                return std::pow(c, n) * std::pow(mu_of(params, c), k);
            });
        }
    }
}

void QuadratureScheme::check_params(const GasParams& p) const {
    if (p.a != params_.a)
        throw std::invalid_argument("QuadratureScheme was built for a = " +
                                    std::to_string(params_.a) + ", used with a = " +
                                    std::to_string(p.a));
}

void half_line_cauchy(const QuadratureScheme& scheme, std::span<const std::vector<double>> polys,
                      cplx zeta, Side side, std::span<cplx> out) {
    if (out.size() < polys.size()) throw std::invalid_argument("half_line_cauchy: output too small");
    const double r = QuadratureScheme::cutoff;
    const bool real = is_real_point(zeta, side);
    if (real) zeta = cplx(zeta.real(), 0.0);
    const double xi = zeta.real();
    const cplx i_pi(0.0, kPi);
    const double side_sign = static_cast<double>(static_cast<int>(side));

    auto boundary_term = [&](std::span<const double> poly) -> cplx {
        if (!real || side == Side::pv || !(xi > 0.0)) return 0.0;
        return side_sign * i_pi * std::exp(-xi * xi) * horner(poly, xi);
    };

    // Pole beyond the support: integrate up to cutoff - 2.5, where it is at least 1 away.
    if (xi > r - 1.5) {
        const GaussRule& g = scheme.short_rule();
        const auto& e = scheme.short_gauss();
        for (std::size_t j = 0; j < polys.size(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double u = g.nodes[k];
                acc += g.weights[k] * e[k] * horner(polys[j], u) / (u - zeta);
            }
            out[j] = acc + boundary_term(polys[j]);
        }
        return;
    }

    const GaussRule& g = scheme.cauchy_rule();
    const auto& e = scheme.cauchy_gauss();

    if (distance_to_segment(zeta, 0.0, r) >= 1.0) {
        for (std::size_t j = 0; j < polys.size(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double u = g.nodes[k];
                acc += g.weights[k] * e[k] * horner(polys[j], u) / (u - zeta);
            }
            out[j] = acc;
        }
        return;
    }

    // Singularity subtraction with G(u) = exp(-u^2) P(u):
    //   int_0^R (G(u) - G(zeta)) / (u - zeta) du + G(zeta) * int_0^R du / (u - zeta).
    const cplx ez = std::exp(-zeta * zeta);
    cplx log_term;
    if (real) {
        if (xi == 0.0) throw DomainError("half_line_cauchy: pole at the endpoint u = 0");
        log_term = std::log(std::abs((r - xi) / xi));
        if (xi > 0.0 && side != Side::pv) log_term += side_sign * i_pi;
    } else {
        log_term = std::log(r - zeta) - std::log(-zeta);
    }

    // Divided difference of exp(-u^2) at (u, zeta), tabulated once.
    std::vector<cplx> dexp(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double u = g.nodes[k];
        const cplx w = -(u - zeta) * (u + zeta);
        dexp[k] = -ez * (u + zeta) * expm1_over(w);
    }

    for (std::size_t j = 0; j < polys.size(); ++j) {
        const std::span<const double> poly = polys[j];
        const cplx pz = horner(poly, zeta);
        const std::vector<cplx> quot = synthetic_quotient(poly, zeta);
        cplx acc = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double u = g.nodes[k];
            acc += g.weights[k] * (e[k] * horner(quot, u) + pz * dexp[k]);
        }
        out[j] = acc + ez * pz * log_term;
    }
}

cplx half_line_cauchy(const QuadratureScheme& scheme, std::span<const double> poly, cplx zeta,
                      Side side) {
    const std::vector<double> one(poly.begin(), poly.end());
    cplx out[1];
    half_line_cauchy(scheme, std::span<const std::vector<double>>(&one, 1), zeta, side, out);
    return out[0];
}

cplx weight_cauchy(const QuadratureScheme& scheme, cplx pole, Side side) {
    const std::vector<double> w{1.0, scheme.params().a};
    if (pole == cplx(0.0, 0.0)) {
        // PV at the origin: odd integrand, and the boundary jump is iπ w(0) on each side.
        return side == Side::pv ? cplx(0.0) : cplx(0.0, static_cast<int>(side) * kPi);
    }
    return half_line_cauchy(scheme, w, pole, side) - half_line_cauchy(scheme, w, -pole, opposite(side));
}

}  // namespace bgk
