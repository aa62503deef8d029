#pragma once

#include "se2wave/circle.hpp"
#include "se2wave/group.hpp"

namespace se2wave {

/// Parameter of the irreducible representation Pi^Omega on L^2(S^1).
struct IrrepParams {
    explicit IrrepParams(double omega);
    double omega;
};

/// Pi^Omega(q,theta) u(phi) = e^{-i Omega (q1 cos phi + q2 sin phi)} u(phi - theta).
CircleFunction apply_irrep(const IrrepParams& p, const GroupElement& g, const CircleFunction& u);

/// dPi(X1): multiplication by i*Omega*sin(phi).
CircleFunction dpi_x1(const IrrepParams& p, const CircleFunction& u);

/// dPi(X2): d/dphi (spectral).
CircleFunction dpi_x2(const CircleFunction& u);

/// dPi(X3) = [dPi(X1), dPi(X2)]: multiplication by -i*Omega*cos(phi).
CircleFunction dpi_x3(const IrrepParams& p, const CircleFunction& u);

/// ||dPi(X1)u|| * ||dPi(X2)u|| - (1/2)|<dPi(X3)u, u>|. Nonnegative up to
/// quadrature error; zero exactly on minimal-uncertainty states.
double uncertainty_gap(const IrrepParams& p, const CircleFunction& u);

/// The normalized minimal-uncertainty wavelet u^{lambda,Omega} on an n-grid:
/// solves u' + lambda*Omega*sin(phi)*u = 0, i.e. u ~ e^{lambda*Omega*cos(phi)}.
/// Evaluated in the compensated form e^{a(cos(phi)-1)} with the e^{a} factor
/// folded into the normalizer, so it never overflows. Requires lambda >= 0
/// (a negative lambda is the same wavelet reflected by phi -> phi + pi) and
/// lambda*Omega <= 30; throws ResolutionError with a usable grid size when n
/// cannot resolve the profile.
CircleFunction minimal_wavelet(double lambda, const IrrepParams& p, std::size_t n);

}  // namespace se2wave
