#pragma once

#include <array>

#include "bgk/quadrature.hpp"

namespace bgk {

/// Where a moment integral was evaluated relative to the spectral cut (-alpha, alpha).
enum class Region { off_cut, on_cut_pv, boundary_plus, boundary_minus };

const char* to_string(Region r);

/// t_n(z) = z * integral of rho(mu) C(mu)^n / (mu - z) dmu for n = 0..4.
struct MomentSet {
    cplx point;
    Region region = Region::off_cut;
    std::array<cplx, 5> t{};
};

/// Moments at a point off the cut. Real points with |x| > alpha (a > 0) are allowed.
/// Throws RegionError on the closed cut [-alpha, alpha].
MomentSet moments_at(const QuadratureScheme& scheme, cplx z);

/// Principal-value moments at a cut point |x| < alpha; the values are real.
MomentSet moments_pv(const QuadratureScheme& scheme, double x);

/// Boundary values t_n(x +- i0) for |x| < alpha. `side` must be plus or minus.
MomentSet moments_boundary(const QuadratureScheme& scheme, double x, Side side);

/// Region-dispatching form: off_cut -> moments_at, etc.
MomentSet moments_in(const QuadratureScheme& scheme, cplx z, Region region);

}  // namespace bgk
