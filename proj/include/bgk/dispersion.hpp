#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

#include "bgk/moments.hpp"

namespace bgk {

using Matrix3c = Eigen::Matrix3cd;

/// Dispersion matrix, its determinant and (for real points inside the cut) the
/// three replaced-column determinants, all at one point.
struct DispersionEval {
    cplx point;
    Region region = Region::off_cut;
    Matrix3c matrix;
    cplx det;
    /// Lambda_0..2; present only when the point is real with |x| < alpha.
    std::optional<std::array<cplx, 3>> cofactors;
};

/// The spectrum of the characteristic equation: continuous part (-alpha, alpha),
/// discrete part the single point at infinity.
struct SpectrumDescription {
    double half_width;
    int multiplicity_at_infinity;
};

/// Entry (row k, column j) is delta_kj plus
///   j = 0: (r0 + beta^2 r2) t_k - beta r2 t_{k+2}
///   j = 1: r1 t_{k+1}
///   j = 2: r2 (t_{k+2} - beta t_k)
Matrix3c lambda_matrix(const GasParams& p, const MomentSet& m);

/// Full evaluation from a moment set. Cofactors are filled for real points |x| < alpha.
DispersionEval dispersion_eval(const GasParams& p, const MomentSet& m);

/// lambda(z) = det Lambda(z) off the cut (real |x| > alpha allowed for a > 0).
cplx lambda_fn(const QuadratureScheme& scheme, cplx z);
/// Principal-value symbol on the cut (determinant of the PV matrix).
cplx lambda_pv(const QuadratureScheme& scheme, double x);
/// Boundary value lambda(x +- i0).
cplx lambda_boundary(const QuadratureScheme& scheme, double x, Side side);

/// Determinant of Lambda with column `index` replaced by (1, C(eta), C(eta)^2).
cplx lambda_alpha(const GasParams& p, const MomentSet& m, int index, double eta);

/// Q~(eta, mu) = r0 L0 + r1 C(mu) L1 + r2 (C(mu)^2 - beta)(L2 - beta L0), with
/// L_k = lambda_alpha(.., k, eta) taken from `m`. `m` must be a PV moment set
/// (or off the cut on the real axis) so that the result is real.
double q_tilde(const GasParams& p, const MomentSet& m, double eta, double mu);

/// Comparison of the measured boundary-value jump of lambda with the value
/// 2 pi i rho(x) Q~(x, x) that omits the factor x.
struct SokhotskyResult {
    double x;
    cplx lambda_plus;
    cplx lambda_minus;
    cplx jump;          // lambda_plus - lambda_minus
    cplx claimed_jump;  // 2 pi i rho(x) Q~(x, x)
    cplx mean;          // (lambda_plus + lambda_minus) / 2
    cplx lambda_pv;     // det of the PV matrix
    /// jump / claimed_jump; NaN where the claimed value vanishes.
    cplx ratio;
};

SokhotskyResult sokhotsky_jump(const QuadratureScheme& scheme, double x);

/// Closed polyline; the last vertex connects back to the first.
using Contour = std::vector<cplx>;

/// Boundary of the rectangle |Re z| <= half_width, |Im z| <= half_height with a
/// margin-neighborhood of the cut [-alpha, alpha] removed, joined into one closed
/// curve by a doubly traversed slit along the real axis to the right of the cut.
/// Requires a > 0 and alpha + margin < half_width.
Contour keyhole_contour(const GasParams& p, double half_width, double half_height, double margin);

/// Upper half-disk of radius `radius` whose base is the line Im z = base.
Contour upper_semicircle(double radius, double base, int arc_vertices = 256);

/// Circle as a regular polygon.
Contour circle_contour(cplx center, double radius, int vertices = 256);

struct WindingResult {
    int winding;
    int samples;
};

/// Winding number of lambda along `contour` by continuous argument tracking.
/// Samples at least 4096 points and doubles until the count is stable and no step
/// changes the argument by more than pi/3. Throws IllConditionedContour if the
/// contour touches the cut or |lambda| < 1e-8 somewhere on it.
WindingResult count_zeros(const QuadratureScheme& scheme, const Contour& contour);

struct LaurentFit {
    int order;
    cplx leading_coeff;
    std::array<double, 3> radii;
    std::array<double, 3> abs_lambda;
    double slope;  // fitted log|lambda| vs log|z| slope
};

/// Order of the zero of lambda at infinity, fitted along the imaginary axis at
/// |z| = 10, 20, 40; the leading coefficient of z^k lambda(z) is extrapolated in 1/z^2.
LaurentFit laurent_order_at_infinity(const QuadratureScheme& scheme);

SpectrumDescription describe_spectrum(const QuadratureScheme& scheme);

/// Positive zeros of the principal-value symbol lambda_pv on (0, alpha) (searched on
/// (0, 6) when a = 0), located by sign changes on a uniform grid and refined by
/// bisection. lambda_pv is even, so the negative zeros are the mirror images.
/// With g = 1 the continuum eigenfunction is singular at these points.
std::vector<double> principal_symbol_zeros(const QuadratureScheme& scheme, int samples = 2000);

}  // namespace bgk
