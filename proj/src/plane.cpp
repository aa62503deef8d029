#include "se2wave/plane.hpp"

#include <algorithm>
#include <cmath>

namespace se2wave {

PlaneFunction::PlaneFunction(std::size_t m, double extent, std::vector<Complex> values)
    : m_(m), extent_(extent), values_(std::move(values)) {
    if (m_ < 16) throw GridError("plane grid size must be >= 16, got " + std::to_string(m_));
    if (!(extent_ > 0.0) || !std::isfinite(extent_)) {
        throw GridError("plane extent must be positive and finite");
    }
    if (values_.size() != m_ * m_) {
        throw GridError("plane sample count " + std::to_string(values_.size()) +
                        " does not match grid " + std::to_string(m_) + "x" + std::to_string(m_));
    }
    for (const Complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw GridError("plane function contains non-finite samples");
        }
    }
}

PlaneFunction PlaneFunction::zero(std::size_t m, double extent) {
    return PlaneFunction(m, extent, std::vector<Complex>(m * m, Complex{0.0, 0.0}));
}

double PlaneFunction::l2_norm() const {
    double acc = 0.0;
    for (const Complex& v : values_) acc += std::norm(v);
    return std::sqrt(acc) * dx();
}

namespace {

// Per-angle phase tables e^{+-i Omega cos/sin(phi_a) x_j}; the separable
// structure makes the nonuniform quadrature an m-vector contraction per axis.
struct PhaseTables {
    std::size_t n, m;
    std::vector<Complex> ex;  // ex[a*m + j] = e^{i s Omega cos(phi_a) x_j}
    std::vector<Complex> ey;
};

PhaseTables make_tables(double omega, std::size_t m, double extent, std::size_t n, double sign) {
    PhaseTables t{n, m, std::vector<Complex>(n * m), std::vector<Complex>(n * m)};
    const double dx = 2.0 * extent / static_cast<double>(m);
    for (std::size_t a = 0; a < n; ++a) {
        const double phi = kTwoPi * static_cast<double>(a) / static_cast<double>(n);
        const double kx = sign * omega * std::cos(phi);
        const double ky = sign * omega * std::sin(phi);
        for (std::size_t j = 0; j < m; ++j) {
            const double x = -extent + dx * static_cast<double>(j);
            t.ex[a * m + j] = std::polar(1.0, kx * x);
            t.ey[a * m + j] = std::polar(1.0, ky * x);
        }
    }
    return t;
}

double boundary_ratio_of(const PlaneFunction& f) {
    const std::size_t m = f.m();
    double peak = 0.0;
    for (const Complex& v : f.values()) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    double edge = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        edge = std::max({edge, std::abs(f.value(j, 0)), std::abs(f.value(j, m - 1)),
                         std::abs(f.value(0, j)), std::abs(f.value(m - 1, j))});
    }
    return edge / peak;
}

}  // namespace

RingDistribution ring_restrict(const PlaneFunction& f, const IrrepParams& p, std::size_t n) {
    if (n < 8 || n % 2 != 0) {
        throw GridError("ring grid size must be even and >= 8, got " + std::to_string(n));
    }
    const std::size_t m = f.m();
    const PhaseTables t = make_tables(p.omega, m, f.extent(), n, -1.0);
    const double weight = f.dx() * f.dx() / kTwoPi;

    std::vector<Complex> density(n);
    parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
        std::vector<Complex> row(m);
        for (std::size_t a = begin; a < end; ++a) {
            // row_j = sum_k f(j,k) ey_k, then contract with ex_j.
            const Complex* ey = &t.ey[a * m];
            const Complex* ex = &t.ex[a * m];
            for (std::size_t j = 0; j < m; ++j) {
                Complex acc{0.0, 0.0};
                const Complex* fr = &f.values()[j * m];
                for (std::size_t k = 0; k < m; ++k) acc += fr[k] * ey[k];
                row[j] = acc;
            }
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < m; ++j) acc += row[j] * ex[j];
            density[a] = acc * weight;
        }
    });

    RingDistribution r{p.omega, CircleFunction(std::move(density))};
    r.boundary_ratio = boundary_ratio_of(f);
    r.truncation_warning = r.boundary_ratio > 1e-10;
    return r;
}

PlaneFunction render_ring(const RingDistribution& r, std::size_t m, double extent) {
    const std::size_t n = r.density.size();
    const PhaseTables t = make_tables(r.omega, m, extent, n, +1.0);
    const double weight = 1.0 / static_cast<double>(n);

    std::vector<Complex> values(m * m, Complex{0.0, 0.0});
    parallel_chunks(m, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            Complex* out = &values[j * m];
            for (std::size_t a = 0; a < n; ++a) {
                const Complex row = r.density[a] * t.ex[a * m + j] * weight;
                const Complex* ey = &t.ey[a * m];
                for (std::size_t k = 0; k < m; ++k) out[k] += row * ey[k];
            }
        }
    });
    return PlaneFunction(m, extent, std::move(values));
}

PlaneFunction project(const PlaneFunction& f, const IrrepParams& p, std::size_t n) {
    return render_ring(ring_restrict(f, p, n), f.m(), f.extent());
}

double h_omega_norm(const RingDistribution& r) { return norm(r.density); }

namespace {

void check_tail(const PlaneFunction& f, double omega_max, std::size_t n) {
    const double f_norm = f.l2_norm();
    if (f_norm == 0.0) return;
    const RingDistribution tail = ring_restrict(f, IrrepParams(omega_max), n);
    const double rel = h_omega_norm(tail) / f_norm;
    if (rel > 1e-8) {
        throw TruncationError("reconstruct: spectral tail at omega_max = " +
                              std::to_string(omega_max) + " is not negligible (ring norm " +
                              std::to_string(rel) + " of ||f||); increase omega_max");
    }
}

}  // namespace

PlaneFunction reconstruct(const PlaneFunction& f, double omega_max, std::size_t n_nodes,
                          std::size_t n) {
    if (!(omega_max > 0.0)) throw GridError("reconstruct: omega_max must be positive");
    check_tail(f, omega_max, n);
    const Quadrature q = gauss_legendre(n_nodes, 0.0, omega_max);
    const std::size_t m = f.m();
    std::vector<Complex> acc(m * m, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n_nodes; ++i) {
        const double omega = q.nodes[i];
        const double w = q.weights[i] * omega;  // measure Omega dOmega
        const PlaneFunction piece = render_ring(ring_restrict(f, IrrepParams(omega), n), m,
                                                f.extent());
        for (std::size_t idx = 0; idx < acc.size(); ++idx) acc[idx] += w * piece.values()[idx];
    }
    return PlaneFunction(m, f.extent(), std::move(acc));
}

double plancherel_sum(const PlaneFunction& f, double omega_max, std::size_t n_nodes,
                      std::size_t n) {
    if (!(omega_max > 0.0)) throw GridError("plancherel_sum: omega_max must be positive");
    const Quadrature q = gauss_legendre(n_nodes, 0.0, omega_max);
    double acc = 0.0;
    for (std::size_t i = 0; i < n_nodes; ++i) {
        const RingDistribution r = ring_restrict(f, IrrepParams(q.nodes[i]), n);
        const double hn = h_omega_norm(r);
        acc += q.weights[i] * q.nodes[i] * hn * hn;
    }
    return acc;
}

Quadrature gauss_legendre(std::size_t n, double a, double b) {
    if (n == 0) throw GridError("gauss_legendre: need at least one node");
    Quadrature q{std::vector<double>(n), std::vector<double>(n)};
    const std::size_t half = (n + 1) / 2;
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    for (std::size_t i = 0; i < half; ++i) {
        // Newton on P_n from the Chebyshev initial guess.
        double z = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                const double dj = static_cast<double>(j);
                p1 = ((2.0 * dj - 1.0) * z * p2 - (dj - 1.0) * p3) / dj;
            }
            pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        q.nodes[i] = xm - xl * z;
        q.nodes[n - 1 - i] = xm + xl * z;
        q.weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        q.weights[n - 1 - i] = q.weights[i];
    }
    return q;
}

}  // namespace se2wave
