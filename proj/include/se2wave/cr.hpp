#pragma once

#include "se2wave/field.hpp"

namespace se2wave {

/// Left-invariant vector fields of SE(2):
///   X1 = -sin(theta) d/dq1 + cos(theta) d/dq2
///   X2 = d/dtheta
///   X3 = [X1, X2] = cos(theta) d/dq1 + sin(theta) d/dq2
enum class LeftField { X1, X2, X3 };

/// Applies a left-invariant field: spatial partials by central differences
/// with step h (a multiple of the grid spacing, h >= dx), d/dtheta spectrally
/// along the periodic theta axis. A margin of h/dx cells at the spatial
/// boundary is invalid and set to zero; exclude it from norms (see
/// interior_l2).
WaveletField apply_field(const WaveletField& F, LeftField which, double h);

/// Discrete L^2 norm over interior points (margin cells excluded on each
/// spatial side), with weights dx^2 * (2pi/n_theta).
double interior_l2(const WaveletField& F, std::size_t margin_cells);

/// Relative interior L^2 norm of (X2 + i*lambda*X1)F. Decays as O(h^2) for
/// fields generated with a minimal-uncertainty wavelet of the same lambda,
/// and stays bounded away from zero otherwise.
double cr_residual(const WaveletField& F, double lambda, double h);

/// The SE(2) group Fourier transform of f (given as rapidly decaying samples
/// on the field grid) applied to u:
///   (F_{SE(2)} f(Omega) u)(phi) = int f^Omega(phi, phi - theta) u(theta) dtheta
/// where the hat is the per-slice unitary plane Fourier transform restricted
/// to the ring of radius Omega. Requires n_theta | u.size(); throws
/// TruncationError when a slice violates boundary decay.
CircleFunction group_fourier(const WaveletField& f, const IrrepParams& p,
                             const CircleFunction& u);

}  // namespace se2wave
