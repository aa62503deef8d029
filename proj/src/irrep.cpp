#include "se2wave/irrep.hpp"

#include <cmath>

namespace se2wave {

IrrepParams::IrrepParams(double omega) : omega(omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw GridError("irrep parameter omega must be positive and finite");
    }
}

CircleFunction apply_irrep(const IrrepParams& p, const GroupElement& g, const CircleFunction& u) {
    CircleFunction shifted = rotate(u, g.theta);
    const std::size_t n = u.size();
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = shifted.phi(j);
        const double phase = -p.omega * (g.q1 * std::cos(phi) + g.q2 * std::sin(phi));
        out[j] = std::polar(1.0, phase) * shifted[j];
    }
    return CircleFunction(std::move(out));
}

CircleFunction dpi_x1(const IrrepParams& p, const CircleFunction& u) {
    std::vector<Complex> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        out[j] = Complex(0.0, p.omega * std::sin(u.phi(j))) * u[j];
    }
    return CircleFunction(std::move(out));
}

CircleFunction dpi_x2(const CircleFunction& u) { return spectral_derivative(u); }

CircleFunction dpi_x3(const IrrepParams& p, const CircleFunction& u) {
    std::vector<Complex> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        out[j] = Complex(0.0, -p.omega * std::cos(u.phi(j))) * u[j];
    }
    return CircleFunction(std::move(out));
}

double uncertainty_gap(const IrrepParams& p, const CircleFunction& u) {
    const double nu = norm(u);
    if (!(nu > 0.0)) throw DegenerateInputError("uncertainty_gap on the zero vector");
    const double n1 = norm(dpi_x1(p, u));
    const double n2 = norm(dpi_x2(u));
    const double pairing = std::abs(inner_product(dpi_x3(p, u), u));
    return n1 * n2 - 0.5 * pairing;
}

namespace {

// Trapezoid of e^{2a(cos(phi)-1)}; equals e^{-2a} j0(-2ia). Never overflows.
double scaled_profile_integral(double a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        acc += std::exp(2.0 * a * (std::cos(phi) - 1.0));
    }
    return acc * kTwoPi / static_cast<double>(n);
}

}  // namespace

CircleFunction minimal_wavelet(double lambda, const IrrepParams& p, std::size_t n) {
    if (lambda < 0.0) {
        throw ParameterCapError("minimal_wavelet requires lambda >= 0 "
                                "(negative lambda is the phi -> phi + pi reflection)");
    }
    const double a = lambda * p.omega;
    if (a > 30.0) {
        throw ParameterCapError("minimal_wavelet: lambda*omega = " + std::to_string(a) +
                                " exceeds the resolution cap 30");
    }
    if (n < 8 || n % 2 != 0) {
        throw GridError("circle grid size must be even and >= 8, got " + std::to_string(n));
    }

    // Resolution guard: the grid trapezoid of the squared profile must agree
    // with its converged value, otherwise the grid aliases the wavelet.
    const double grid_integral = scaled_profile_integral(a, n);
    std::size_t n_ref = n;
    double converged = grid_integral;
    for (int round = 0; round < 16; ++round) {
        n_ref *= 2;
        const double next = scaled_profile_integral(a, n_ref);
        if (std::abs(next - converged) <= 1e-13 * next) {
            converged = next;
            break;
        }
        converged = next;
    }
    if (std::abs(grid_integral - converged) > 1e-12 * converged) {
        std::size_t required = n;
        while (std::abs(scaled_profile_integral(a, required) - converged) > 1e-12 * converged) {
            required *= 2;
        }
        throw ResolutionError("minimal_wavelet: grid n = " + std::to_string(n) +
                                  " cannot resolve lambda*omega = " + std::to_string(a) +
                                  "; use n >= " + std::to_string(required),
                              required);
    }

    // Normalize by the grid quadrature itself so ||u|| = 1 holds exactly.
    std::vector<Complex> out(n);
    double sumsq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        const double w = std::exp(a * (std::cos(phi) - 1.0));
        out[j] = Complex(w, 0.0);
        sumsq += w * w;
    }
    const double inv_norm = 1.0 / std::sqrt(sumsq * kTwoPi / static_cast<double>(n));
    for (Complex& v : out) v *= inv_norm;
    return CircleFunction(std::move(out));
}

}  // namespace se2wave
