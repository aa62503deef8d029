#pragma once

#include <optional>
#include <vector>

#include "se2wave/plane.hpp"

namespace se2wave {

/// Spatial/angular grid of a wavelet field: m x m samples on [-L, L)^2 as in
/// PlaneFunction, times n_theta equispaced angles theta_l = 2*pi*l/n_theta.
struct FieldGrid {
    std::size_t m;
    double extent;
    std::size_t n_theta;
};

/// Samples F(q_jk, theta_l) of a function on SE(2), together with the data
/// that determines its H_Omega(SE(2)) norm: per-theta ring densities and,
/// when the field came from the analysis operator, the generating pair
/// (u0, Phi). Spatial samples alone do not determine the norm (slices are
/// not square integrable in q), so they are treated as a rendering.
class WaveletField {
public:
    WaveletField(double omega, FieldGrid grid, std::vector<Complex> values);

    double omega() const { return omega_; }
    const FieldGrid& grid() const { return grid_; }
    std::size_t m() const { return grid_.m; }
    double extent() const { return grid_.extent; }
    std::size_t n_theta() const { return grid_.n_theta; }
    double dx() const { return 2.0 * grid_.extent / static_cast<double>(grid_.m); }
    double x(std::size_t j) const { return -grid_.extent + dx() * static_cast<double>(j); }
    double theta(std::size_t l) const {
        return kTwoPi * static_cast<double>(l) / static_cast<double>(grid_.n_theta);
    }

    std::size_t index(std::size_t j, std::size_t k, std::size_t l) const {
        return (j * grid_.m + k) * grid_.n_theta + l;
    }
    const Complex& value(std::size_t j, std::size_t k, std::size_t l) const {
        return values_[index(j, k, l)];
    }
    std::span<const Complex> values() const { return values_; }

    bool has_provenance() const { return u0_.has_value(); }
    const CircleFunction& provenance_u0() const;
    const CircleFunction& provenance_phi() const;
    bool has_densities() const { return !densities_.empty(); }
    const std::vector<CircleFunction>& densities() const { return densities_; }

    void set_provenance(CircleFunction u0, CircleFunction phi);
    void set_densities(std::vector<CircleFunction> densities);

private:
    double omega_;
    FieldGrid grid_;
    std::vector<Complex> values_;
    std::optional<CircleFunction> u0_;
    std::optional<CircleFunction> phi_;
    std::vector<CircleFunction> densities_;
};

/// The analysis operator rendered on a grid:
/// A^Omega Phi(q,theta) = int Phi(phi) conj(u0(phi-theta)) e^{i Omega q.w(phi)} dphi.
/// (This is the Parseval-consistent form; it equals the complex conjugate of
/// the pairing <Pi(g)u0, Phi>.) The per-theta ring density
/// d_theta(phi) = conj(u0(phi-theta)) Phi(phi) is stored along with the
/// provenance pair. Requires u0, phi on the same grid and n_theta | n.
WaveletField analyze(const IrrepParams& p, const CircleFunction& u0, const CircleFunction& phi,
                     const FieldGrid& grid);

/// A^Omega Phi evaluated at a single group element (theta need not be
/// grid-aligned; u0 is rotated by trigonometric interpolation).
Complex analyze_at(const IrrepParams& p, const CircleFunction& u0, const CircleFunction& phi,
                   const GroupElement& g);

/// Reproducing kernel K(g, g') = <Pi(g)u0, Pi(g')u0>; u0 must have unit norm.
Complex kernel(const IrrepParams& p, const CircleFunction& u0, const GroupElement& g,
               const GroupElement& g2);

/// ||F||_{H_Omega(SE(2))}: the theta-integral of per-theta H_Omega norms,
/// computed on the ring side. Uses the provenance pair when present (theta
/// resolved on the full circle grid), otherwise the stored per-theta
/// densities; throws RepresentationError when neither is available.
double field_norm(const WaveletField& F);

/// Left side: H_Omega(SE(2)) pairing of the ring densities of A^Omega Phi
/// with those of K_g = analyze(u0, Pi(g)u0). Right side: A^Omega Phi(g).
/// Equal by the reproducing identity when ||u0|| = 1.
struct ReproducePair {
    Complex lhs;
    Complex rhs;
};
ReproducePair reproduce_check(const IrrepParams& p, const CircleFunction& u0,
                              const CircleFunction& phi, const GroupElement& g);

/// Recovers Phi(phi) = int u0(phi - theta) d_theta(phi) dtheta from the
/// per-theta ring densities of F; exact when F = analyze(p, u0, Phi) with
/// ||u0|| = 1 and the densities resolve the theta dependence.
CircleFunction weak_reconstruct(const WaveletField& F);

/// The analysis operator with the minimal-uncertainty mother wavelet.
WaveletField bargmann_se2(double lambda, const IrrepParams& p, const CircleFunction& phi,
                          const FieldGrid& grid);

/// Inverts bargmann_se2 from the theta = 0 ring density:
/// Phi = d_0 / conj(u^{lambda,Omega}). The field must be in range (all theta
/// slices must factor through the same Phi); otherwise NotInRangeError.
CircleFunction surjective_invert(const WaveletField& F, double lambda);

}  // namespace se2wave
