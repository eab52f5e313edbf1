#include "bgk/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bgk {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3cd replacement_column(const GasParams& p, double eta) {
    const double c = velocity_map(p, eta);
    return {1.0, c, c * c};
}

bool is_real_point(const MomentSet& m) {
    return m.region != Region::off_cut || m.point.imag() == 0.0;
}

}  // namespace

Matrix3c lambda_matrix(const GasParams& p, const MomentSet& m) {
    const auto& t = m.t;
    Matrix3c lam;
    for (int k = 0; k < 3; ++k) {
        lam(k, 0) = (p.r0 + p.beta * p.beta * p.r2) * t[k] - p.beta * p.r2 * t[k + 2];
        lam(k, 1) = p.r1 * t[k + 1];
        lam(k, 2) = p.r2 * (t[k + 2] - p.beta * t[k]);
    }
    lam += Matrix3c::Identity();
    return lam;
}

DispersionEval dispersion_eval(const GasParams& p, const MomentSet& m) {
    DispersionEval e;
    e.point = m.point;
    e.region = m.region;
    e.matrix = lambda_matrix(p, m);
    e.det = e.matrix.determinant();
    if (m.point.imag() == 0.0 && std::abs(m.point.real()) < p.alpha) {
        std::array<cplx, 3> cof{};
        const Eigen::Vector3cd col = replacement_column(p, m.point.real());
        for (int k = 0; k < 3; ++k) {
            Matrix3c r = e.matrix;
            r.col(k) = col;
            cof[k] = r.determinant();
        }
        e.cofactors = cof;
    }
    return e;
}

cplx lambda_fn(const QuadratureScheme& scheme, cplx z) {
    return lambda_matrix(scheme.params(), moments_at(scheme, z)).determinant();
}

cplx lambda_pv(const QuadratureScheme& scheme, double x) {
    return lambda_matrix(scheme.params(), moments_pv(scheme, x)).determinant();
}

cplx lambda_boundary(const QuadratureScheme& scheme, double x, Side side) {
    return lambda_matrix(scheme.params(), moments_boundary(scheme, x, side)).determinant();
}

cplx lambda_alpha(const GasParams& p, const MomentSet& m, int index, double eta) {
    if (index < 0 || index > 2) throw std::invalid_argument("lambda_alpha: index must be 0, 1 or 2");
    Matrix3c r = lambda_matrix(p, m);
    r.col(index) = replacement_column(p, eta);
    return r.determinant();
}

double q_tilde(const GasParams& p, const MomentSet& m, double eta, double mu) {
    if (!is_real_point(m) || m.region == Region::boundary_plus || m.region == Region::boundary_minus)
        throw RegionError("q_tilde: needs principal-value moments at a real point");
    Matrix3c lam = lambda_matrix(p, m);
    double l[3];
    for (int k = 0; k < 3; ++k) {
        Matrix3c r = lam;
        r.col(k) = replacement_column(p, eta);
        l[k] = r.determinant().real();
    }
    const double c = velocity_map(p, mu);
    return p.r0 * l[0] + p.r1 * c * l[1] + p.r2 * (c * c - p.beta) * (l[2] - p.beta * l[0]);
}

SokhotskyResult sokhotsky_jump(const QuadratureScheme& scheme, double x) {
    const GasParams& p = scheme.params();
    SokhotskyResult s;
    s.x = x;
    s.lambda_plus = lambda_boundary(scheme, x, Side::plus);
    s.lambda_minus = lambda_boundary(scheme, x, Side::minus);
    s.jump = s.lambda_plus - s.lambda_minus;
    s.mean = 0.5 * (s.lambda_plus + s.lambda_minus);
    const MomentSet pv = moments_pv(scheme, x);
    s.lambda_pv = lambda_matrix(p, pv).determinant();
    s.claimed_jump = cplx(0.0, 2.0 * kPi * weight(p, x) * q_tilde(p, pv, x, x));
    s.ratio = std::abs(s.claimed_jump) > 0.0 ? s.jump / s.claimed_jump
                                              : cplx(std::nan(""), std::nan(""));
    return s;
}

Contour keyhole_contour(const GasParams& p, double half_width, double half_height, double margin) {
    if (p.unbounded_cut()) throw DomainError("keyhole_contour: needs a > 0 (bounded cut)");
    const double al = p.alpha;
    if (!(margin > 0.0) || !(al + margin < half_width) || !(margin < half_height))
        throw std::invalid_argument("keyhole_contour: rectangle must strictly contain the cut neighborhood");
    const double w = half_width, h = half_height;
    Contour c{{w, 0.0}, {w, h}, {-w, h}, {-w, -h}, {w, -h}, {w, 0.0}};
    // Clockwise stadium around [-alpha, alpha].
    const int cap = 64;
    auto arc = [&](double cx, double from, double to) {
        for (int k = 0; k <= cap; ++k) {
            const double th = from + (to - from) * k / cap;
            c.emplace_back(cx + margin * std::cos(th), margin * std::sin(th));
        }
    };
    arc(al, 0.0, -kPi / 2);
    arc(-al, -kPi / 2, -3 * kPi / 2);
    arc(al, kPi / 2, 0.0);
    return c;
}

Contour upper_semicircle(double radius, double base, int arc_vertices) {
    Contour c;
    for (int k = 0; k <= arc_vertices; ++k) {
        const double th = kPi * k / arc_vertices;
        c.emplace_back(radius * std::cos(th), base + radius * std::sin(th));
    }
    return c;
}

Contour circle_contour(cplx center, double radius, int vertices) {
    Contour c;
    for (int k = 0; k < vertices; ++k) {
        const double th = 2 * kPi * k / vertices;
        c.push_back(center + radius * cplx(std::cos(th), std::sin(th)));
    }
    return c;
}

namespace {

std::vector<cplx> sample_contour(const Contour& contour, int samples) {
    const std::size_t nv = contour.size();
    std::vector<double> len(nv);
    double total = 0.0;
    for (std::size_t k = 0; k < nv; ++k) {
        len[k] = std::abs(contour[(k + 1) % nv] - contour[k]);
        total += len[k];
    }
    std::vector<cplx> pts;
    pts.reserve(samples + nv);
    for (std::size_t k = 0; k < nv; ++k) {
        if (len[k] == 0.0) continue;
        const int m = std::max(1, static_cast<int>(std::ceil(samples * len[k] / total)));
        const cplx a = contour[k], b = contour[(k + 1) % nv];
        for (int j = 0; j < m; ++j) pts.push_back(a + (b - a) * (static_cast<double>(j) / m));
    }
    return pts;
}

struct Tracking {
    int winding;
    double max_step;
};

Tracking track_argument(const QuadratureScheme& scheme, const std::vector<cplx>& pts) {
    const GasParams& p = scheme.params();
    std::vector<cplx> vals(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const cplx z = pts[k];
        if (z.imag() == 0.0 && std::abs(z.real()) <= p.alpha)
            throw IllConditionedContour("count_zeros: contour touches the cut at x = " +
                                        std::to_string(z.real()));
        vals[k] = lambda_fn(scheme, z);
        if (std::abs(vals[k]) < 1e-8)
            throw IllConditionedContour("count_zeros: |lambda| < 1e-8 on the contour");
    }
    double total = 0.0;
    double max_step = 0.0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        const double d = std::arg(vals[(k + 1) % vals.size()] / vals[k]);
        total += d;
        max_step = std::max(max_step, std::abs(d));
    }
    return {static_cast<int>(std::lround(total / (2 * kPi))), max_step};
}

}  // namespace

WindingResult count_zeros(const QuadratureScheme& scheme, const Contour& contour) {
    if (contour.size() < 3) throw std::invalid_argument("count_zeros: contour needs >= 3 vertices");
    int samples = 4096;
    Tracking prev = track_argument(scheme, sample_contour(contour, samples));
    while (samples < (1 << 20)) {
        samples *= 2;
        const Tracking cur = track_argument(scheme, sample_contour(contour, samples));
        if (cur.winding == prev.winding && cur.max_step < kPi / 3 && prev.max_step < kPi / 3)
            return {cur.winding, samples};
        prev = cur;
    }
    throw IllConditionedContour("count_zeros: winding number did not stabilize");
}

LaurentFit laurent_order_at_infinity(const QuadratureScheme& scheme) {
    LaurentFit fit;
    fit.radii = {10.0, 20.0, 40.0};
    std::array<cplx, 3> lam{};
    for (int j = 0; j < 3; ++j) {
        lam[j] = lambda_fn(scheme, cplx(0.0, fit.radii[j]));
        fit.abs_lambda[j] = std::abs(lam[j]);
        if (!(fit.abs_lambda[j] > 0.0)) throw EvaluationError("laurent fit: lambda vanished");
    }
    // Least-squares slope of log|lambda| against log r.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = 0; j < 3; ++j) {
        const double lx = std::log(fit.radii[j]);
        const double ly = std::log(fit.abs_lambda[j]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    fit.slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    const double k = -fit.slope;
    fit.order = static_cast<int>(std::lround(k));
    if (std::abs(k - fit.order) > 0.25)
        throw EvaluationError("laurent fit: slope " + std::to_string(k) + " is not near an integer");

    // z^k lambda(z) = c + c1 h + c2 h^2 + ..., h = 1/z^2; quadratic extrapolation to h = 0.
    std::array<cplx, 3> h{}, v{};
    for (int j = 0; j < 3; ++j) {
        const cplx z(0.0, fit.radii[j]);
        h[j] = 1.0 / (z * z);
        v[j] = std::pow(z, fit.order) * lam[j];
    }
    cplx c = 0.0;
    for (int j = 0; j < 3; ++j) {
        cplx l = 1.0;
        for (int i = 0; i < 3; ++i)
            if (i != j) l *= (0.0 - h[i]) / (h[j] - h[i]);
        c += l * v[j];
    }
    fit.leading_coeff = c;
    return fit;
}

SpectrumDescription describe_spectrum(const QuadratureScheme& scheme) {
    return {scheme.params().alpha, laurent_order_at_infinity(scheme).order};
}

std::vector<double> principal_symbol_zeros(const QuadratureScheme& scheme, int samples) {
    const GasParams& p = scheme.params();
    const double top = p.unbounded_cut() ? 6.0 : p.alpha;
    auto f = [&](double x) { return lambda_pv(scheme, x).real(); };
    std::vector<double> zeros;
    double x0 = 0.0, f0 = 1.0;
    for (int j = 1; j < samples; ++j) {
        const double x1 = top * j / samples;
        const double f1 = f(x1);
        if (f0 * f1 < 0.0) {
            double lo = x0, hi = x1, flo = f0;
            for (int it = 0; it < 60 && hi - lo > 1e-15 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    return zeros;
}

}  // namespace bgk
