#include "se2wave/cr.hpp"

#include <cmath>

#include "fft.hpp"

namespace se2wave {

namespace {

std::size_t step_cells(const WaveletField& F, double h) {
    const double dx = F.dx();
    if (h < dx * (1.0 - 1e-12)) {
        throw GridError("derivative step h = " + std::to_string(h) +
                        " is smaller than the grid spacing " + std::to_string(dx));
    }
    const double cells = h / dx;
    const double nearest = std::round(cells);
    if (std::abs(cells - nearest) > 1e-9) {
        throw GridError("derivative step h must be a multiple of the grid spacing");
    }
    const auto s = static_cast<std::size_t>(nearest);
    if (2 * s >= F.m()) throw GridError("derivative step too large for the grid");
    return s;
}

// d/dtheta along the periodic theta axis, mode-wise (Nyquist zeroed).
std::vector<Complex> theta_derivative(const WaveletField& F) {
    const std::size_t m = F.m();
    const std::size_t nt = F.n_theta();
    std::vector<Complex> out(F.values().size());
    parallel_chunks(m * m, [&](std::size_t begin, std::size_t end) {
        std::vector<Complex> line(nt);
        for (std::size_t jk = begin; jk < end; ++jk) {
            const Complex* src = &F.values()[jk * nt];
            line.assign(src, src + nt);
            std::vector<Complex> coeff = fft::forward(line);
            for (std::size_t k = 0; k < nt; ++k) {
                if (k == nt / 2) {
                    coeff[k] = {0.0, 0.0};
                } else {
                    coeff[k] *= Complex(0.0, static_cast<double>(fft::mode_of_bin(k, nt)));
                }
            }
            std::vector<Complex> back = fft::inverse(coeff);
            const double inv = 1.0 / static_cast<double>(nt);
            Complex* dst = &out[jk * nt];
            for (std::size_t k = 0; k < nt; ++k) dst[k] = back[k] * inv;
        }
    });
    return out;
}

// Central-difference directional derivative cos(alpha_l) d/dq1 + sin(alpha_l) d/dq2
// where alpha depends on the slice angle; margin cells stay zero.
std::vector<Complex> spatial_directional(const WaveletField& F, std::size_t s, double h,
                                         bool x3_direction) {
    const std::size_t m = F.m();
    const std::size_t nt = F.n_theta();
    std::vector<Complex> out(F.values().size(), Complex{0.0, 0.0});
    std::vector<double> c1(nt), c2(nt);
    for (std::size_t l = 0; l < nt; ++l) {
        const double th = F.theta(l);
        if (x3_direction) {
            c1[l] = std::cos(th);
            c2[l] = std::sin(th);
        } else {
            c1[l] = -std::sin(th);
            c2[l] = std::cos(th);
        }
    }
    const double inv2h = 1.0 / (2.0 * h);
    parallel_chunks(m, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = std::max(begin, s); j < std::min(end, m - s); ++j) {
            for (std::size_t k = s; k < m - s; ++k) {
                Complex* dst = &out[(j * m + k) * nt];
                const Complex* fp1 = &F.values()[((j + s) * m + k) * nt];
                const Complex* fm1 = &F.values()[((j - s) * m + k) * nt];
                const Complex* fp2 = &F.values()[(j * m + k + s) * nt];
                const Complex* fm2 = &F.values()[(j * m + k - s) * nt];
                for (std::size_t l = 0; l < nt; ++l) {
                    dst[l] = (c1[l] * (fp1[l] - fm1[l]) + c2[l] * (fp2[l] - fm2[l])) * inv2h;
                }
            }
        }
    });
    return out;
}

}  // namespace

WaveletField apply_field(const WaveletField& F, LeftField which, double h) {
    const std::size_t s = which == LeftField::X2 ? 0 : step_cells(F, h);
    std::vector<Complex> out;
    switch (which) {
        case LeftField::X1:
            out = spatial_directional(F, s, h, false);
            break;
        case LeftField::X2:
            out = theta_derivative(F);
            break;
        case LeftField::X3:
            out = spatial_directional(F, s, h, true);
            break;
    }
    return WaveletField(F.omega(), F.grid(), std::move(out));
}

double interior_l2(const WaveletField& F, std::size_t margin_cells) {
    const std::size_t m = F.m();
    if (2 * margin_cells >= m) throw GridError("interior_l2: margin covers the whole grid");
    const std::size_t nt = F.n_theta();
    double acc = 0.0;
    for (std::size_t j = margin_cells; j < m - margin_cells; ++j) {
        for (std::size_t k = margin_cells; k < m - margin_cells; ++k) {
            const Complex* v = &F.values()[(j * m + k) * nt];
            for (std::size_t l = 0; l < nt; ++l) acc += std::norm(v[l]);
        }
    }
    return std::sqrt(acc * F.dx() * F.dx() * kTwoPi / static_cast<double>(nt));
}

double cr_residual(const WaveletField& F, double lambda, double h) {
    const std::size_t s = step_cells(F, h);
    const WaveletField x1 = apply_field(F, LeftField::X1, h);
    const WaveletField x2 = apply_field(F, LeftField::X2, h);
    const std::size_t m = F.m();
    const std::size_t nt = F.n_theta();

    double num = 0.0;
    for (std::size_t j = s; j < m - s; ++j) {
        for (std::size_t k = s; k < m - s; ++k) {
            const std::size_t base = (j * m + k) * nt;
            for (std::size_t l = 0; l < nt; ++l) {
                num += std::norm(x2.values()[base + l] +
                                 Complex(0.0, lambda) * x1.values()[base + l]);
            }
        }
    }
    const double den = interior_l2(F, s);
    if (den == 0.0) return 0.0;
    return std::sqrt(num * F.dx() * F.dx() * kTwoPi / static_cast<double>(nt)) / den;
}

CircleFunction group_fourier(const WaveletField& f, const IrrepParams& p,
                             const CircleFunction& u) {
    const std::size_t n = u.size();
    const std::size_t nt = f.n_theta();
    if (n % nt != 0) {
        throw GridError("group_fourier: n_theta must divide the circle grid size");
    }
    const std::size_t stride = n / nt;
    const std::size_t m = f.m();

    std::vector<Complex> out(n, Complex{0.0, 0.0});
    double worst_boundary = 0.0;
    for (std::size_t l = 0; l < nt; ++l) {
        std::vector<Complex> slice(m * m);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) slice[j * m + k] = f.value(j, k, l);
        }
        const RingDistribution d =
            ring_restrict(PlaneFunction(m, f.extent(), std::move(slice)), p, n);
        worst_boundary = std::max(worst_boundary, d.boundary_ratio);
        const std::size_t shift = l * stride;
        for (std::size_t j = 0; j < n; ++j) {
            out[j] += d.density[j] * u[(j + n - shift) % n];
        }
    }
    if (worst_boundary > 1e-10) {
        throw TruncationError("group_fourier: slice boundary decay " +
                              std::to_string(worst_boundary) + " violates the 1e-10 bound");
    }
    const double w = kTwoPi / static_cast<double>(nt);
    for (Complex& v : out) v *= w;
    return CircleFunction(std::move(out));
}

}  // namespace se2wave
