#include "se2wave/circle.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"

namespace se2wave {

CircleFunction::CircleFunction(std::vector<Complex> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n < 8 || n % 2 != 0) {
        throw GridError("circle grid size must be even and >= 8, got " + std::to_string(n));
    }
    for (const Complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw GridError("circle function contains non-finite samples");
        }
    }
}

CircleFunction CircleFunction::constant(std::size_t n, Complex value) {
    return CircleFunction(std::vector<Complex>(n, value));
}

Complex inner_product(const CircleFunction& u, const CircleFunction& v) {
    if (u.size() != v.size()) {
        throw GridError("inner_product: incompatible grids (" + std::to_string(u.size()) +
                        " vs " + std::to_string(v.size()) + ")");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * std::conj(v[j]);
    return acc * (kTwoPi / static_cast<double>(u.size()));
}

double norm(const CircleFunction& u) {
    double acc = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) acc += std::norm(u[j]);
    return std::sqrt(acc * (kTwoPi / static_cast<double>(u.size())));
}

CircleFunction rotate(const CircleFunction& u, double theta) {
    const std::size_t n = u.size();
    const double steps = theta * static_cast<double>(n) / kTwoPi;
    const double nearest = std::round(steps);
    if (std::abs(steps - nearest) < 1e-9) {
        // Grid-aligned rotation: pure index shift, bit-exact.
        const long ln = static_cast<long>(n);
        const long shift = ((static_cast<long>(nearest) % ln) + ln) % ln;
        std::vector<Complex> out(n);
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = u[(j + n - static_cast<std::size_t>(shift)) % n];
        }
        return CircleFunction(std::move(out));
    }
    // Trigonometric interpolation: shift each Fourier mode.
    std::vector<Complex> coeff = fft::forward(std::vector<Complex>(u.values().begin(), u.values().end()));
    for (std::size_t k = 0; k < n; ++k) {
        const int m = fft::mode_of_bin(k, n);
        if (k == n / 2) {
            coeff[k] *= std::cos(static_cast<double>(m) * theta);
        } else {
            coeff[k] *= std::polar(1.0, -static_cast<double>(m) * theta);
        }
    }
    std::vector<Complex> out = fft::inverse(coeff);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (Complex& v : out) v *= inv_n;
    return CircleFunction(std::move(out));
}

CircleFunction spectral_derivative(const CircleFunction& u) {
    const std::size_t n = u.size();
    std::vector<Complex> coeff = fft::forward(std::vector<Complex>(u.values().begin(), u.values().end()));
    for (std::size_t k = 0; k < n; ++k) {
        if (k == n / 2) {
            coeff[k] = {0.0, 0.0};
        } else {
            coeff[k] *= Complex(0.0, static_cast<double>(fft::mode_of_bin(k, n)));
        }
    }
    std::vector<Complex> out = fft::inverse(coeff);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (Complex& v : out) v *= inv_n;
    return CircleFunction(std::move(out));
}

namespace {

Complex j0_trapezoid(Complex z, std::size_t n) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        acc += std::exp(Complex(0.0, 1.0) * z * std::cos(phi));
    }
    return acc * (kTwoPi / static_cast<double>(n));
}

}  // namespace

Complex j0(Complex z) {
    // The integrand e^{i z cos(phi)} has Fourier modes ~ J_m(z), negligible
    // past |m| ~ |z|, so the trapezoidal rule converges spectrally once the
    // grid passes 2|z|. Double until two successive grids agree.
    std::size_t n = 64;
    const double az = std::abs(z);
    while (static_cast<double>(n) < 4.0 * az + 64.0) n *= 2;
    Complex prev = j0_trapezoid(z, n);
    for (int round = 0; round < 12; ++round) {
        n *= 2;
        const Complex cur = j0_trapezoid(z, n);
        if (std::abs(cur - prev) <= 1e-14 * std::max(std::abs(cur), 1.0)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace se2wave
