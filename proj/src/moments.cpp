#include "bgk/moments.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bgk {

namespace {

bool on_closed_cut(const GasParams& p, cplx z) {
    return z.imag() == 0.0 && std::abs(z.real()) <= p.alpha;
}

void require_cut_point(const GasParams& p, double x, const char* what) {
    if (!std::isfinite(x) || !(std::abs(x) < p.alpha))
        throw DomainError(std::string(what) + ": need |x| < alpha, got x = " + std::to_string(x));
}

// (1 + a u)^2 u^n as ascending coefficients, n = 0..4.
std::array<std::vector<double>, 5> half_line_polys(double a) {
    std::array<std::vector<double>, 5> polys;
    for (int n = 0; n < 5; ++n) {
        std::vector<double> c(n + 3, 0.0);
        c[n] = 1.0;
        c[n + 1] = 2.0 * a;
        c[n + 2] = a * a;
        polys[n] = std::move(c);
    }
    return polys;
}

// Splitting the C-integral at C = 0 and substituting C = +-u gives, with
//   H_n(zeta) = int_0^inf exp(-u^2)(1 + a u)^2 u^n / (u - zeta) du,
//   t_n(z) = z [ H_n(z/(1 - a z)) / (1 - a z) + (-1)^(n+1) H_n(-z/(1 + a z)) / (1 + a z) ].
// The first map preserves the side of the real axis, the second reverses it.
std::array<cplx, 5> compute(const QuadratureScheme& scheme, cplx z, Side side) {
    std::array<cplx, 5> t{};
    if (z == cplx(0.0, 0.0)) return t;
    const double a = scheme.params().a;
    const auto polys = half_line_polys(a);
    const cplx dp = 1.0 - a * z;
    const cplx dm = 1.0 + a * z;
    std::array<cplx, 5> hp{};
    std::array<cplx, 5> hm{};
    half_line_cauchy(scheme, polys, z / dp, side, hp);
    half_line_cauchy(scheme, polys, -z / dm, opposite(side), hm);
    for (int n = 0; n < 5; ++n) {
        const double sign = n % 2 == 0 ? -1.0 : 1.0;
        t[n] = z * (hp[n] / dp + sign * hm[n] / dm);
        if (!std::isfinite(t[n].real()) || !std::isfinite(t[n].imag()))
            throw EvaluationError("moments: non-finite value");
    }
    return t;
}

}  // namespace

const char* to_string(Region r) {
    switch (r) {
        case Region::off_cut: return "off-cut";
        case Region::on_cut_pv: return "on-cut-pv";
        case Region::boundary_plus: return "boundary-plus";
        case Region::boundary_minus: return "boundary-minus";
    }
    return "?";
}

MomentSet moments_at(const QuadratureScheme& scheme, cplx z) {
    const GasParams& p = scheme.params();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("moments_at: non-finite point");
    if (on_closed_cut(p, z))
        throw RegionError("moments_at: point " + std::to_string(z.real()) +
                          " lies on the cut; use moments_pv or moments_boundary");
    MomentSet m;
    m.point = z;
    m.region = Region::off_cut;
    m.t = compute(scheme, z, Side::pv);
    return m;
}

MomentSet moments_pv(const QuadratureScheme& scheme, double x) {
    require_cut_point(scheme.params(), x, "moments_pv");
    MomentSet m;
    m.point = x;
    m.region = Region::on_cut_pv;
    m.t = compute(scheme, x, Side::pv);
    for (auto& v : m.t) v = v.real();
    return m;
}

MomentSet moments_boundary(const QuadratureScheme& scheme, double x, Side side) {
    require_cut_point(scheme.params(), x, "moments_boundary");
    if (side == Side::pv) throw std::invalid_argument("moments_boundary: side must be plus or minus");
    MomentSet m;
    m.point = x;
    m.region = side == Side::plus ? Region::boundary_plus : Region::boundary_minus;
    m.t = compute(scheme, x, side);
    return m;
}

MomentSet moments_in(const QuadratureScheme& scheme, cplx z, Region region) {
    switch (region) {
        case Region::off_cut: return moments_at(scheme, z);
        case Region::on_cut_pv:
        case Region::boundary_plus:
        case Region::boundary_minus:
            if (z.imag() != 0.0) throw RegionError("moments_in: cut regions need a real point");
            if (region == Region::on_cut_pv) return moments_pv(scheme, z.real());
            return moments_boundary(scheme, z.real(),
                                    region == Region::boundary_plus ? Side::plus : Side::minus);
    }
    throw std::invalid_argument("moments_in: bad region");
}

}  // namespace bgk
