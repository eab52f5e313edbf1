#include "bgk/limits.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <vector>

#include "bgk/params.hpp"

namespace bgk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kAsymptoticRadius = 6.0;

const GaussRule& unit_rule() {
    static const GaussRule rule = gauss_legendre(128, 0.0, 1.0);
    return rule;
}

const GaussRule& laplace_rule() {
    static const GaussRule rule = composite_legendre(0.0, 14.0, {}, 24, 1.0);
    return rule;
}

// -sum_k (2k-1)!! / (2 z^2)^k, truncated before the terms start to grow.
cplx asymptotic_series(cplx z) {
    const cplx h = 1.0 / (2.0 * z * z);
    cplx term = h;
    cplx sum = 0.0;
    double best = std::abs(term);
    for (int k = 1; k < 400; ++k) {
        sum -= term;
        const cplx next = term * h * static_cast<double>(2 * k + 1);
        const double mag = std::abs(next);
        if (mag >= best || mag < 1e-18 * std::abs(sum)) break;
        best = mag;
        term = next;
    }
    return sum;
}

// 1 - 2 z^2 int_0^1 exp(-z^2 (1 - t^2)) dt, without the exponential jump term.
cplx finite_interval_part(cplx z) {
    const cplx z2 = z * z;
    const cplx integral = integrate_rule(unit_rule(), [&](double t) { return std::exp(-z2 * (1.0 - t * t)); });
    return 1.0 - 2.0 * z2 * integral;
}

// For Im z > 0: lambda_C(z) = 1 + i z int_0^inf exp(-t^2/4 + i z t) dt.
cplx laplace_form(cplx z) {
    const cplx iz(-z.imag(), z.real());
    const cplx integral =
        integrate_rule(laplace_rule(), [&](double t) { return std::exp(-0.25 * t * t + iz * t); });
    return 1.0 + iz * integral;
}

cplx lambda_c_upper(cplx z) {
    if (std::abs(z) >= kAsymptoticRadius) return asymptotic_series(z);
    if (std::abs(z.imag()) <= std::abs(z.real()))
        return finite_interval_part(z) + cplx(0.0, kSqrtPi) * z * std::exp(-z * z);
    return laplace_form(z);
}

}  // namespace

cplx lambda_c(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("lambda_c: non-finite z");
    if (z.imag() == 0.0) {
        if (z.real() == 0.0) return 1.0;
        throw RegionError("lambda_c: real argument; use lambda_c_boundary");
    }
    if (z.imag() < 0.0) return std::conj(lambda_c_upper(std::conj(z)));
    return lambda_c_upper(z);
}

cplx lambda_c_boundary(double x, Side side) {
    if (!std::isfinite(x)) throw DomainError("lambda_c_boundary: non-finite x");
    const double re =
        std::abs(x) >= kAsymptoticRadius ? asymptotic_series(x).real() : finite_interval_part(x).real();
    const double im = static_cast<int>(side) * kSqrtPi * x * std::exp(-x * x);
    return {re, im};
}

cplx lambda_c_half_plane(cplx z) {
    if (z.imag() == 0.0) throw RegionError("lambda_c_half_plane: real argument");
    const cplx z2 = z * z;
    // int_0^z exp(u^2) du = z int_0^1 exp(z^2 t^2) dt
    const cplx dawson_like = z * integrate_rule(unit_rule(), [&](double t) { return std::exp(z2 * t * t); });
    const double s = z.imag() > 0.0 ? 1.0 : -1.0;
    return 1.0 - 2.0 * z * std::exp(-z2) * dawson_like + s * cplx(0.0, kSqrtPi) * z * std::exp(-z2);
}

cplx lambda_a0(cplx z) { return -0.5 - (z * z - 1.5) * lambda_c(z); }

cplx lambda_a0_boundary(double x, Side side) { return -0.5 - (x * x - 1.5) * lambda_c_boundary(x, side); }

double fm_kernel(double c, double c_prime) {
    return 1.0 + c * c_prime + (c * c - 1.0) * (c_prime * c_prime - 1.0);
}

namespace {

// phi_i = poly(C) * sgn(C)^parity.
struct BasisFn {
    std::vector<double> poly;
    int parity;
};

const std::array<BasisFn, 6>& basis() {
    static const std::array<BasisFn, 6> b{{
        {{1.0}, 0},
        {{1.0}, 1},
        {{0.0, 1.0}, 0},
        {{0.0, 1.0}, 1},
        {{-1.0, 0.0, 1.0}, 0},
        {{-1.0, 0.0, 1.0}, 1},
    }};
    return b;
}

// int exp(-C^2)|C| C^m sgn(C)^e dC = (1 + (-1)^(m+e)) Gamma((m+2)/2) / 2
double half_line_moment(int m, int e) {
    if ((m + e) % 2 != 0) return 0.0;
    return std::tgamma(0.5 * (m + 2));
}

double inner(const BasisFn& f, const BasisFn& g, int extra_parity = 0) {
    const int e = (f.parity + g.parity + extra_parity) % 2;
    double acc = 0.0;
    for (std::size_t i = 0; i < f.poly.size(); ++i)
        for (std::size_t j = 0; j < g.poly.size(); ++j)
            acc += f.poly[i] * g.poly[j] * half_line_moment(static_cast<int>(i + j), e);
    return acc;
}

struct Modes {
    Matrix6 m;
    double kappa;
    Vector6 decaying;  // eigenvector for -kappa, component 3 (a2~) = 1
    Vector6 growing;   // eigenvector for +kappa, component 3 = 1
    Vector6 linear0;   // y(x) = linear0 + x * linear1
    Vector6 linear1;
};

const Modes& modes() {
    static const Modes md = [] {
        Modes r;
        r.m = fm_project_system();
        Eigen::EigenSolver<Matrix6> es(r.m);
        int lo = 0, hi = 0;
        for (int k = 1; k < 6; ++k) {
            if (es.eigenvalues()(k).real() < es.eigenvalues()(lo).real()) lo = k;
            if (es.eigenvalues()(k).real() > es.eigenvalues()(hi).real()) hi = k;
        }
        r.kappa = 0.5 * (es.eigenvalues()(hi).real() - es.eigenvalues()(lo).real());
        r.decaying = es.eigenvectors().col(lo).real();
        r.growing = es.eigenvectors().col(hi).real();
        r.decaying /= r.decaying(3);
        r.growing /= r.growing(3);

        // Linear mode: v0 in the sgn-odd components with a1~ = 1 such that M v0 has no
        // sgn-odd part; then M v0 is a constant mode and y = v0 + x M v0.
        Eigen::Matrix<double, 3, 2> lhs;
        Eigen::Vector3d rhs;
        const int odd[3] = {1, 3, 5};
        for (int r_ = 0; r_ < 3; ++r_) {
            lhs(r_, 0) = r.m(odd[r_], 3);
            lhs(r_, 1) = r.m(odd[r_], 5);
            rhs(r_) = -r.m(odd[r_], 1);
        }
        const Eigen::Vector2d sol = lhs.colPivHouseholderQr().solve(rhs);
        r.linear0.setZero();
        r.linear0(1) = 1.0;
        r.linear0(3) = sol(0);
        r.linear0(5) = sol(1);
        r.linear1 = r.m * r.linear0;
        return r;
    }();
    return md;
}

}  // namespace

double fm_basis(int i, double c) {
    if (i < 0 || i > 5) throw std::invalid_argument("fm_basis: index must be 0..5");
    const BasisFn& f = basis()[i];
    double v = 0.0;
    for (auto it = f.poly.rbegin(); it != f.poly.rend(); ++it) v = v * c + *it;
    if (f.parity == 1) v *= (c > 0.0) - (c < 0.0);
    return v;
}

FmProjection fm_projection() {
    const auto& b = basis();
    FmProjection pr;
    const int collision_invariants[3] = {0, 2, 4};
    for (int k = 0; k < 6; ++k) {
        for (int i = 0; i < 6; ++i) {
            pr.streaming(k, i) = inner(b[k], b[i], 1);
            pr.mass(k, i) = inner(b[k], b[i]);
            double acc = 0.0;
            for (int q : collision_invariants) acc += inner(b[k], b[q]) * inner(b[q], b[i]);
            pr.collision(k, i) = acc;
        }
    }
    return pr;
}

Matrix6 fm_project_system() {
    const FmProjection pr = fm_projection();
    Matrix6 m = pr.streaming.fullPivLu().solve(pr.collision - pr.mass);
    // The moments are exact rationals times powers of sqrt(pi); clear LU round-off.
    for (int k = 0; k < 6; ++k)
        for (int i = 0; i < 6; ++i)
            if (std::abs(m(k, i)) < 1e-14) m(k, i) = 0.0;
    return m;
}

double fm_decay_rate() { return modes().kappa; }

double fm_published_decay_rate() { return std::sqrt(3.0 * kPi) / 2.0; }

FreeMolecularSolution make_fm_solution(double A0, double A1, double A2, double A3, double At1,
                                       double At3) {
    FreeMolecularSolution s;
    s.A0 = A0;
    s.A1 = A1;
    s.A2 = A2;
    s.A3 = A3;
    s.At1 = At1;
    s.At3 = At3;
    s.decay_rate = modes().kappa;
    s.system_matrix = modes().m;
    return s;
}

Vector6 fm_coefficients(const FreeMolecularSolution& s, double x) {
    const Modes& md = modes();
    Vector6 y = Vector6::Zero();
    y(0) += s.A1;
    y(2) += s.A2;
    y(4) += s.A3;
    y += s.At1 * (md.linear0 + x * md.linear1);
    if (s.A0 != 0.0) y += s.A0 * std::exp(-md.kappa * x) * md.decaying;
    if (s.At3 != 0.0) y += s.At3 * std::exp(md.kappa * x) * md.growing;
    return y;
}

Vector6 fm_coefficients_dx(const FreeMolecularSolution& s, double x) {
    const Modes& md = modes();
    Vector6 d = s.At1 * md.linear1;
    if (s.A0 != 0.0) d -= s.A0 * md.kappa * std::exp(-md.kappa * x) * md.decaying;
    if (s.At3 != 0.0) d += s.At3 * md.kappa * std::exp(md.kappa * x) * md.growing;
    return d;
}

double fm_general_solution(const FreeMolecularSolution& s, double x, double c) {
    const Vector6 y = fm_coefficients(s, x);
    double h = 0.0;
    for (int i = 0; i < 6; ++i) h += y(i) * fm_basis(i, c);
    return h;
}

double fm_residual(const FreeMolecularSolution& s, double x) {
    static const GaussRule half = half_range_gauss(16, 0.0, 1.0);
    const Vector6 y = fm_coefficients(s, x);
    const Vector6 dy = fm_coefficients_dx(s, x);
    auto h = [&](double c) {
        double v = 0.0;
        for (int i = 0; i < 6; ++i) v += y(i) * fm_basis(i, c);
        return v;
    };
    auto hx = [&](double c) {
        double v = 0.0;
        for (int i = 0; i < 6; ++i) v += dy(i) * fm_basis(i, c);
        return v;
    };
    double worst = 0.0;
    for (int j = 0; j < 64; ++j) {
        const double c = -4.0 + 8.0 * (j + 0.5) / 64.0;
        double collision = 0.0;
        for (std::size_t k = 0; k < half.size(); ++k) {
            const double u = half.nodes[k];
            collision += half.weights[k] * (fm_kernel(c, u) * h(u) + fm_kernel(c, -u) * h(-u));
        }
        const double sgn = c > 0.0 ? 1.0 : -1.0;
        const double r = sgn * hx(c) + h(c) - collision;
        if (!std::isfinite(r)) throw EvaluationError("fm_residual: non-finite value");
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double kernel_scaling_metric(double a) {
    const GasParams p = make_params(a);
    double dev = 0.0, scale = 0.0;
    for (int i = 0; i <= 12; ++i) {
        const double c = -3.0 + 0.5 * i;
        for (int j = 0; j <= 12; ++j) {
            const double cp = -3.0 + 0.5 * j;
            const double limit = std::abs(cp) * fm_kernel(c, cp);
            const double general = (1.0 + a * std::abs(cp)) * kernel_qc(p, c, cp);
            dev = std::max(dev, std::abs(general - limit));
            scale = std::max(scale, std::abs(limit));
        }
    }
    return dev / scale;
}

}  // namespace bgk
