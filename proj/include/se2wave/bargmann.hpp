#pragma once

#include "se2wave/field.hpp"
#include "se2wave/plane.hpp"

namespace se2wave {

/// Width of the Gaussian window g0(x) = (1/(sigma sqrt(pi))) e^{-|x|^2/(2 sigma^2)}.
struct BargmannParams {
    explicit BargmannParams(double sigma);
    double sigma;
};

/// Classical Bargmann transform on the plane,
///   B f(q,p) = e^{sigma^2 |p|^2 / 2} int conj(tau(q)mu(p)g0)(x) f(x) dx,
/// with tau(q)mu(p)g0(x) = e^{i p.(x-q)} g0(x-q), by plane quadrature.
/// Holomorphic in z_j = p_j + i q_j / sigma^2. Throws TruncationError when the
/// window does not fit the grid (|q| + 6 sigma beyond the extent).
Complex bargmann_classical(const BargmannParams& b, const PlaneFunction& f, const Point& q,
                           const Point& p);

/// Symmetric tensor grid of (q, p) evaluation points for the holomorphy test:
/// per-axis coordinates +-half*(2i/(count-1) - 1), i = 0..count-1.
struct PhaseSpaceGrid {
    double q_half;
    double p_half;
    std::size_t per_axis;
};

/// Relative discrete norm of (d/dp_j + i sigma^2 d/dq_j) B f for one j
/// (1 or 2), central differences with step h over the phase-space grid.
double holomorphy_residual_component(const BargmannParams& b, const PlaneFunction& f,
                                     const PhaseSpaceGrid& grid, double h, int j);

/// Combined j = 1, 2 residual; O(h^2) for smooth f.
double holomorphy_residual(const BargmannParams& b, const PlaneFunction& f,
                           const PhaseSpaceGrid& grid, double h);

/// Bargmann transform of a ring distribution (single circle quadrature):
///   B(q,p) = (1/(sigma sqrt(pi))) e^{-sigma^2 Omega^2/2}
///            int d(phi) e^{i Omega q.w(phi)} e^{sigma^2 |p| Omega cos(phi - theta_p)} dphi.
Complex bargmann_of_ring(const BargmannParams& b, const RingDistribution& r, const Point& q,
                         const Point& p);

/// One evaluation point of the restriction identity between the plane and
/// SE(2) Bargmann transforms.
struct RestrictionPoint {
    Point q;
    Point p;
    Complex lhs;   // bargmann_of_ring at (q, p)
    Complex rhs;   // e^{-sigma^2 Omega^2/2} sqrt(j0(-2i sigma^2 |p| Omega))/(sigma sqrt(pi))
                   //   * A^Omega Phi(q, theta_p) with the lambda = sigma^2 |p| wavelet
    double rel_error;  // |lhs - rhs| / (1 + |rhs|)
};

struct RestrictionReport {
    std::vector<RestrictionPoint> points;
    double max_rel_error;
};

/// Verifies B(T_Omega)(q,p) = prefactor * B^{sigma^2 |p|}_Omega Phi(q, theta_p)
/// at the given points; both sides are single circle quadratures. Throws
/// ParameterCapError when sigma^2 |p| Omega exceeds the minimal-wavelet cap.
RestrictionReport restriction_theorem_check(const BargmannParams& b, const IrrepParams& p,
                                            const CircleFunction& phi,
                                            const std::vector<std::pair<Point, Point>>& points);

}  // namespace se2wave
