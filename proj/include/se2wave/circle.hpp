#pragma once

#include <span>
#include <vector>

#include "se2wave/common.hpp"

namespace se2wave {

/// Complex-valued function on S^1 sampled at phi_j = 2*pi*j/n on a uniform
/// grid. The grid size must be even and >= 8 (the even parity keeps the
/// Nyquist mode unambiguous in the spectral derivative).
class CircleFunction {
public:
    explicit CircleFunction(std::vector<Complex> values);

    static CircleFunction constant(std::size_t n, Complex value);
    static CircleFunction zero(std::size_t n) { return constant(n, {0.0, 0.0}); }

    std::size_t size() const { return values_.size(); }
    double phi(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(size()); }

    const Complex& operator[](std::size_t j) const { return values_[j]; }
    std::span<const Complex> values() const { return values_; }

private:
    std::vector<Complex> values_;
};

/// <u,v> = int_0^{2pi} u(phi) conj(v(phi)) dphi by the trapezoidal rule
/// (weight 2pi/n). Conjugate-linear in the second argument.
Complex inner_product(const CircleFunction& u, const CircleFunction& v);

double norm(const CircleFunction& u);

/// phi |-> u(phi - theta). Exact index shift when theta is a grid multiple,
/// trigonometric (Fourier) interpolation otherwise. The Nyquist mode is
/// rotated symmetrically (factor cos((n/2) theta)).
CircleFunction rotate(const CircleFunction& u, double theta);

/// Fourier-mode-wise d/dphi: mode m multiplies by i*m for |m| < n/2, the
/// Nyquist mode maps to zero.
CircleFunction spectral_derivative(const CircleFunction& u);

/// j0(z) = int_0^{2pi} e^{i z cos(phi)} dphi = 2*pi*J0(z), for complex z.
/// Evaluated by trapezoidal quadrature with the grid doubled until converged;
/// relative accuracy ~1e-14 for |z| <= 50.
Complex j0(Complex z);

}  // namespace se2wave
