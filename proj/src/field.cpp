#include "se2wave/field.hpp"

#include <cmath>

namespace se2wave {

namespace {

void validate_grid(const FieldGrid& grid) {
    if (grid.m < 16) throw GridError("field grid size must be >= 16, got " + std::to_string(grid.m));
    if (!(grid.extent > 0.0)) throw GridError("field extent must be positive");
    if (grid.n_theta < 8 || grid.n_theta % 2 != 0) {
        throw GridError("n_theta must be even and >= 8, got " + std::to_string(grid.n_theta));
    }
}

void require_unit_norm(const CircleFunction& u0, const char* where) {
    const double nu = norm(u0);
    if (std::abs(nu - 1.0) > 1e-10) {
        throw GridError(std::string(where) + ": mother wavelet must have unit norm, got " +
                        std::to_string(nu));
    }
}

}  // namespace

WaveletField::WaveletField(double omega, FieldGrid grid, std::vector<Complex> values)
    : omega_(omega), grid_(grid), values_(std::move(values)) {
    validate_grid(grid_);
    if (!(omega_ > 0.0)) throw GridError("field omega must be positive");
    if (values_.size() != grid_.m * grid_.m * grid_.n_theta) {
        throw GridError("field sample count does not match its grid");
    }
}

const CircleFunction& WaveletField::provenance_u0() const {
    if (!u0_) throw RepresentationError("field has no provenance wavelet");
    return *u0_;
}

const CircleFunction& WaveletField::provenance_phi() const {
    if (!phi_) throw RepresentationError("field has no provenance vector");
    return *phi_;
}

void WaveletField::set_provenance(CircleFunction u0, CircleFunction phi) {
    u0_ = std::move(u0);
    phi_ = std::move(phi);
}

void WaveletField::set_densities(std::vector<CircleFunction> densities) {
    if (densities.size() != grid_.n_theta) {
        throw GridError("density count does not match n_theta");
    }
    densities_ = std::move(densities);
}

namespace {

// d_theta(phi_j) = conj(u0(phi_j - theta)) * phi(phi_j) for the grid angle
// theta = (2*pi/n) * shift.
CircleFunction slice_density(const CircleFunction& u0, const CircleFunction& phi,
                             std::size_t shift) {
    const std::size_t n = u0.size();
    std::vector<Complex> d(n);
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = std::conj(u0[(j + n - shift) % n]) * phi[j];
    }
    return CircleFunction(std::move(d));
}

}  // namespace

WaveletField analyze(const IrrepParams& p, const CircleFunction& u0, const CircleFunction& phi,
                     const FieldGrid& grid) {
    validate_grid(grid);
    const std::size_t n = u0.size();
    if (phi.size() != n) {
        throw GridError("analyze: u0 and phi live on different grids (" + std::to_string(n) +
                        " vs " + std::to_string(phi.size()) + ")");
    }
    if (n % grid.n_theta != 0) {
        throw GridError("analyze: n_theta = " + std::to_string(grid.n_theta) +
                        " must divide the circle grid size " + std::to_string(n));
    }
    const std::size_t stride = n / grid.n_theta;

    std::vector<CircleFunction> densities;
    densities.reserve(grid.n_theta);
    for (std::size_t l = 0; l < grid.n_theta; ++l) {
        densities.push_back(slice_density(u0, phi, l * stride));
    }

    // F(q, theta_l) = (2pi/n) sum_a d_l(phi_a) e^{i Omega q.w(phi_a)}.
    const std::size_t m = grid.m;
    const double dxv = 2.0 * grid.extent / static_cast<double>(m);
    std::vector<Complex> ex(n * m), ey(n * m);
    for (std::size_t a = 0; a < n; ++a) {
        const double ang = kTwoPi * static_cast<double>(a) / static_cast<double>(n);
        const double kx = p.omega * std::cos(ang);
        const double ky = p.omega * std::sin(ang);
        for (std::size_t j = 0; j < m; ++j) {
            const double x = -grid.extent + dxv * static_cast<double>(j);
            ex[a * m + j] = std::polar(1.0, kx * x);
            ey[a * m + j] = std::polar(1.0, ky * x);
        }
    }

    const double weight = kTwoPi / static_cast<double>(n);
    std::vector<Complex> values(m * m * grid.n_theta, Complex{0.0, 0.0});
    parallel_chunks(m, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            for (std::size_t a = 0; a < n; ++a) {
                const Complex* eyr = &ey[a * m];
                for (std::size_t l = 0; l < grid.n_theta; ++l) {
                    const Complex lead = densities[l][a] * ex[a * m + j] * weight;
                    if (lead == Complex{0.0, 0.0}) continue;
                    Complex* out = &values[(j * m) * grid.n_theta + l];
                    for (std::size_t k = 0; k < m; ++k) {
                        out[k * grid.n_theta] += lead * eyr[k];
                    }
                }
            }
        }
    });

    WaveletField field(p.omega, grid, std::move(values));
    field.set_provenance(u0, phi);
    field.set_densities(std::move(densities));
    return field;
}

Complex analyze_at(const IrrepParams& p, const CircleFunction& u0, const CircleFunction& phi,
                   const GroupElement& g) {
    if (u0.size() != phi.size()) throw GridError("analyze_at: incompatible grids");
    const CircleFunction shifted = rotate(u0, g.theta);
    const std::size_t n = u0.size();
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double phi_j = phi.phi(j);
        const double phase = p.omega * (g.q1 * std::cos(phi_j) + g.q2 * std::sin(phi_j));
        acc += phi[j] * std::conj(shifted[j]) * std::polar(1.0, phase);
    }
    return acc * (kTwoPi / static_cast<double>(n));
}

Complex kernel(const IrrepParams& p, const CircleFunction& u0, const GroupElement& g,
               const GroupElement& g2) {
    require_unit_norm(u0, "kernel");
    return inner_product(apply_irrep(p, g, u0), apply_irrep(p, g2, u0));
}

double field_norm(const WaveletField& F) {
    if (F.has_provenance()) {
        // Theta integral resolved on the full circle grid: every theta slice
        // density is conj(u0(. - theta)) phi.
        const CircleFunction& u0 = F.provenance_u0();
        const CircleFunction& phi = F.provenance_phi();
        const std::size_t n = u0.size();
        double acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t j = 0; j < n; ++j) {
                acc += std::norm(u0[(j + n - l) % n]) * std::norm(phi[j]);
            }
        }
        const double w = kTwoPi / static_cast<double>(n);
        return std::sqrt(acc * w * w);
    }
    if (F.has_densities()) {
        double acc = 0.0;
        for (const CircleFunction& d : F.densities()) {
            const double hn = norm(d);
            acc += hn * hn;
        }
        return std::sqrt(acc * kTwoPi / static_cast<double>(F.n_theta()));
    }
    throw RepresentationError("field_norm: spatial samples alone do not determine the norm; "
                              "provenance or ring densities required");
}

ReproducePair reproduce_check(const IrrepParams& p, const CircleFunction& u0,
                              const CircleFunction& phi, const GroupElement& g) {
    require_unit_norm(u0, "reproduce_check");
    if (u0.size() != phi.size()) throw GridError("reproduce_check: incompatible grids");
    const std::size_t n = u0.size();
    const CircleFunction u_g = apply_irrep(p, g, u0);

    // <A Phi, K_g> over theta on the full circle grid; the slice densities are
    // conj(u0(.-theta)) Phi and conj(u0(.-theta)) u_g.
    Complex acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j) {
            acc += std::norm(u0[(j + n - l) % n]) * phi[j] * std::conj(u_g[j]);
        }
    }
    const double w = kTwoPi / static_cast<double>(n);
    return {acc * w * w, analyze_at(p, u0, phi, g)};
}

CircleFunction weak_reconstruct(const WaveletField& F) {
    if (!F.has_densities()) {
        throw RepresentationError("weak_reconstruct: per-theta ring densities required");
    }
    const CircleFunction& u0 = F.provenance_u0();
    require_unit_norm(u0, "weak_reconstruct");
    const std::size_t n = u0.size();
    const std::size_t n_theta = F.n_theta();
    if (n % n_theta != 0) throw GridError("weak_reconstruct: n_theta must divide the circle grid");
    const std::size_t stride = n / n_theta;

    std::vector<Complex> out(n, Complex{0.0, 0.0});
    for (std::size_t l = 0; l < n_theta; ++l) {
        const CircleFunction& d = F.densities()[l];
        const std::size_t shift = l * stride;
        for (std::size_t j = 0; j < n; ++j) {
            out[j] += u0[(j + n - shift) % n] * d[j];
        }
    }
    const double w = kTwoPi / static_cast<double>(n_theta);
    for (Complex& v : out) v *= w;
    return CircleFunction(std::move(out));
}

WaveletField bargmann_se2(double lambda, const IrrepParams& p, const CircleFunction& phi,
                          const FieldGrid& grid) {
    return analyze(p, minimal_wavelet(lambda, p, phi.size()), phi, grid);
}

CircleFunction surjective_invert(const WaveletField& F, double lambda) {
    if (!F.has_densities()) {
        throw RepresentationError("surjective_invert: per-theta ring densities required");
    }
    const IrrepParams p(F.omega());
    const std::size_t n = F.densities().front().size();
    const std::size_t n_theta = F.n_theta();
    if (n % n_theta != 0) throw GridError("surjective_invert: n_theta must divide the circle grid");
    const std::size_t stride = n / n_theta;
    const CircleFunction u0 = minimal_wavelet(lambda, p, n);

    // Factor each slice; they must all produce the same Phi for the field to
    // be in the transform's range (the spectral form of the CR condition).
    std::vector<std::vector<Complex>> factored(n_theta, std::vector<Complex>(n));
    std::vector<Complex> mean(n, Complex{0.0, 0.0});
    for (std::size_t l = 0; l < n_theta; ++l) {
        const CircleFunction& d = F.densities()[l];
        if (d.size() != n) throw GridError("surjective_invert: inconsistent density grids");
        const std::size_t shift = l * stride;
        for (std::size_t j = 0; j < n; ++j) {
            factored[l][j] = d[j] / std::conj(u0[(j + n - shift) % n]);
            mean[j] += factored[l][j];
        }
    }
    for (Complex& v : mean) v /= static_cast<double>(n_theta);

    double dev2 = 0.0;
    double mean2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) mean2 += std::norm(mean[j]);
    for (std::size_t l = 0; l < n_theta; ++l) {
        for (std::size_t j = 0; j < n; ++j) dev2 += std::norm(factored[l][j] - mean[j]);
    }
    dev2 /= static_cast<double>(n_theta);
    const double residual = std::sqrt(dev2 / std::max(mean2, 1e-300));
    if (residual > 1e-8 && mean2 > 0.0) {
        throw NotInRangeError("surjective_invert: field is not in the transform range "
                              "(CR consistency residual " + std::to_string(residual) + ")");
    }
    return CircleFunction(std::move(factored[0]));
}

}  // namespace se2wave
