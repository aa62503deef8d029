#pragma once

#include <vector>

#include "se2wave/circle.hpp"
#include "se2wave/irrep.hpp"

namespace se2wave {

/// Complex samples of a function on R^2. The m x m grid covers [-L, L)^2 with
/// spacing dx = 2L/m: x_j = -L + j*dx, value(j, k) = f(x_j, x_k), row-major.
class PlaneFunction {
public:
    PlaneFunction(std::size_t m, double extent, std::vector<Complex> values);
    static PlaneFunction zero(std::size_t m, double extent);

    std::size_t m() const { return m_; }
    double extent() const { return extent_; }
    double dx() const { return 2.0 * extent_ / static_cast<double>(m_); }
    double x(std::size_t j) const { return -extent_ + dx() * static_cast<double>(j); }

    const Complex& value(std::size_t j, std::size_t k) const { return values_[j * m_ + k]; }
    Complex& value(std::size_t j, std::size_t k) { return values_[j * m_ + k]; }
    std::span<const Complex> values() const { return values_; }

    /// Discrete L^2(R^2) norm: sqrt(sum |f|^2 dx^2).
    double l2_norm() const;

private:
    std::size_t m_;
    double extent_;
    std::vector<Complex> values_;
};

/// A distribution supported on the circle of radius Omega in the frequency
/// plane, stored as its angular density (the concrete form of an H^Omega /
/// H_Omega element). `truncation_warning` records a boundary-decay violation
/// of the plane function it was computed from.
struct RingDistribution {
    double omega;
    CircleFunction density;
    bool truncation_warning = false;
    double boundary_ratio = 0.0;
};

/// Restriction of the unitary Fourier transform to the circle of radius
/// Omega: density(phi_j) = (1/2pi) sum_x f(x) e^{-i Omega w(phi_j).x} dx^2,
/// by direct nonuniform quadrature (no Cartesian-grid interpolation).
/// Boundary decay above 1e-10 of max|f| sets the truncation warning.
RingDistribution ring_restrict(const PlaneFunction& f, const IrrepParams& p, std::size_t n);

/// Spatial rendering of a ring distribution:
/// x |-> (1/2pi) int d(phi) e^{i Omega w(phi).x} dphi.
PlaneFunction render_ring(const RingDistribution& r, std::size_t m, double extent);

/// P_Omega f = (1/(2pi)^2) f * j0(Omega|.|), evaluated as the single-ring
/// synthesis render_ring(ring_restrict(f)). The output is a rendering for
/// visualization and cross-checks; the canonical stored form of an H_Omega
/// element is the RingDistribution.
PlaneFunction project(const PlaneFunction& f, const IrrepParams& p, std::size_t n);

/// ||T^Omega_u||_{H^Omega} = ||u||_{L^2(S^1)}.
double h_omega_norm(const RingDistribution& r);

/// Truncated direct-integral reconstruction f ~ int_0^{omega_max} f_Omega
/// Omega dOmega with Gauss-Legendre quadrature in Omega (the measure Omega
/// dOmega is folded into the weights). Throws TruncationError when the ring
/// density at omega_max is not negligible relative to ||f||.
PlaneFunction reconstruct(const PlaneFunction& f, double omega_max, std::size_t n_nodes,
                          std::size_t n);

/// The Plancherel sum sum_i w_i Omega_i ||f_{Omega_i}||^2_{H_Omega} over the
/// same Gauss-Legendre rule as reconstruct(); converges to ||f||^2_{L^2}.
double plancherel_sum(const PlaneFunction& f, double omega_max, std::size_t n_nodes,
                      std::size_t n);

/// Gauss-Legendre nodes and weights on [a, b].
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Quadrature gauss_legendre(std::size_t n, double a, double b);

}  // namespace se2wave
