#pragma once

#include <Eigen/Dense>
#include <array>

#include "bgk/quadrature.hpp"

namespace bgk {

// ---- constant collision frequency (a = 0) ----

/// Plasma dispersion function lambda_C(z) = 1 + (z / sqrt(pi)) int exp(-mu^2) / (mu - z) dmu
/// for z off the real axis. Uses the finite-interval integral form near the real
/// axis, a Laplace-transform form near the imaginary axis and the optimally
/// truncated asymptotic series for |z| >= 6.
cplx lambda_c(cplx z);

/// Boundary values on the real axis: side plus/minus for x +- i0, pv for their mean.
cplx lambda_c_boundary(double x, Side side);

/// The same function through 1 - 2 z exp(-z^2) int_0^z exp(u^2) du +- i sqrt(pi) z exp(-z^2).
/// Loses digits for large |z|; kept as an independent check for moderate |z|.
cplx lambda_c_half_plane(cplx z);

/// lambda(z) at a = 0 in closed form: -1/2 - (z^2 - 3/2) lambda_C(z).
cplx lambda_a0(cplx z);
cplx lambda_a0_boundary(double x, Side side);

// ---- collision frequency proportional to speed (a -> infinity) ----

/// q1(C, C') = 1 + C C' + (C^2 - 1)(C'^2 - 1).
double fm_kernel(double c, double c_prime);

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

/// Basis of the six-coefficient ansatz h = sum y_i phi_i(C):
/// {1, sgn C, C, |C|, C^2 - 1, (C^2 - 1) sgn C}, y = (a1, a1~, a2, a2~, a3, a3~).
double fm_basis(int i, double c);

/// Pieces of the Galerkin projection with weight exp(-C^2)|C|, from exact half-line moments:
/// P = <phi_k, sgn phi_i>, G = <phi_k, phi_i>, K = <phi_k, q1 phi_i>.
struct FmProjection {
    Matrix6 streaming;
    Matrix6 mass;
    Matrix6 collision;
};
FmProjection fm_projection();

/// Generator M of y' = M y, M = P^{-1} (K - G).
Matrix6 fm_project_system();

/// Decay rate of the exponential modes of M (largest |eigenvalue|).
double fm_decay_rate();

/// Decay rate printed with the original six-equation system, sqrt(3 pi) / 2.
double fm_published_decay_rate();

/// Six free constants of the general solution and the derived data behind it.
///   A0  - decaying mode exp(-kappa x)      A1  - constant 1
///   A2  - constant C                       A3  - constant C^2 - 1
///   At1 - linear mode (2C^2 - 3)(x - sgn C) At3 - growing mode exp(+kappa x)
struct FreeMolecularSolution {
    double A0 = 0, A1 = 0, A2 = 0, A3 = 0, At1 = 0, At3 = 0;
    double decay_rate = 0;
    Matrix6 system_matrix = Matrix6::Zero();
};

/// Fills decay_rate and system_matrix for the given constants.
FreeMolecularSolution make_fm_solution(double A0, double A1, double A2, double A3, double At1,
                                       double At3);

/// Coefficient vector y(x) and its derivative.
Vector6 fm_coefficients(const FreeMolecularSolution& s, double x);
Vector6 fm_coefficients_dx(const FreeMolecularSolution& s, double x);

double fm_general_solution(const FreeMolecularSolution& s, double x, double c);

/// sup over a fixed C-grid (64 points in [-4, 4], avoiding 0) of
/// |sgn(C) h_x + h - int exp(-C'^2)|C'| q1(C, C') h(x, C') dC'|.
double fm_residual(const FreeMolecularSolution& s, double x);

/// Largest relative deviation of (1 + a|C'|) q(C, C'; a) from |C'| q1(C, C') on a
/// fixed grid; tends to 0 as a -> infinity.
double kernel_scaling_metric(double a);

}  // namespace bgk
