#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "se2wave/circle.hpp"
#include "se2wave/common.hpp"

namespace se2wave::testing {

// Brute-force trapezoidal quadrature over [0, 2pi), independent of the
// library's circle machinery. Default n = 4096.
inline Complex quad_oracle(const std::function<Complex(double)>& f, std::size_t n = 4096) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        acc += f(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    }
    return acc * (kTwoPi / static_cast<double>(n));
}

inline CircleFunction sampled(std::size_t n, const std::function<Complex(double)>& f) {
    std::vector<Complex> values(n);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] = f(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    }
    return CircleFunction(std::move(values));
}

inline CircleFunction band_limited(SeededRng& rng, std::size_t n, int max_mode) {
    std::vector<Complex> values(n, Complex{0.0, 0.0});
    for (int m = -max_mode; m <= max_mode; ++m) {
        const Complex c = rng.complex_normal();
        for (std::size_t j = 0; j < n; ++j) {
            values[j] += c * std::polar(1.0, m * kTwoPi * static_cast<double>(j) /
                                                 static_cast<double>(n));
        }
    }
    return CircleFunction(std::move(values));
}

inline CircleFunction normalized(const CircleFunction& u) {
    const double nu = norm(u);
    std::vector<Complex> values(u.values().begin(), u.values().end());
    for (Complex& v : values) v /= nu;
    return CircleFunction(std::move(values));
}

inline double max_abs_diff(const CircleFunction& a, const CircleFunction& b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

inline double rel_l2_diff(const CircleFunction& a, const CircleFunction& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        num += std::norm(a[j] - b[j]);
        den += std::norm(b[j]);
    }
    return std::sqrt(num / den);
}

// Frozen by the quadrature oracle (= 2*pi*I0(2)).
inline constexpr double kJ0AtMinus2i = 14.323056878100513;
// Frozen by bisection of the quadrature oracle; first zero of J0.
inline constexpr double kFirstJ0Zero = 2.404825557695773;
// Frozen closed form pi*(sqrt(5/8) - 1/2) for u = 1 + e^{i phi}/2, omega = 1.
inline constexpr double kGapHalfMode = 0.9128507396541288;

}  // namespace se2wave::testing
