#include "se2wave/bargmann.hpp"

#include <cmath>

namespace se2wave {

BargmannParams::BargmannParams(double sigma) : sigma(sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw GridError("Bargmann window width sigma must be positive and finite");
    }
}

Complex bargmann_classical(const BargmannParams& b, const PlaneFunction& f, const Point& q,
                           const Point& p) {
    const double sigma = b.sigma;
    const double L = f.extent();
    if (std::max(std::abs(q[0]), std::abs(q[1])) + 6.0 * sigma > L) {
        throw TruncationError("bargmann_classical: window at q does not fit the grid extent");
    }
    const std::size_t m = f.m();
    const double g0_norm = 1.0 / (sigma * std::sqrt(M_PI));
    const double inv_2s2 = 1.0 / (2.0 * sigma * sigma);
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
        const double x1 = f.x(j) - q[0];
        for (std::size_t k = 0; k < m; ++k) {
            const double x2 = f.x(k) - q[1];
            const double g = g0_norm * std::exp(-(x1 * x1 + x2 * x2) * inv_2s2);
            // conj(tau(q) mu(p) g0) = e^{-i p.(x-q)} g0(x-q)
            acc += std::polar(g, -(p[0] * x1 + p[1] * x2)) * f.value(j, k);
        }
    }
    const double pref = std::exp(sigma * sigma * (p[0] * p[0] + p[1] * p[1]) / 2.0);
    return pref * acc * (f.dx() * f.dx());
}

namespace {

std::vector<double> axis_coords(double half, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = 0.0;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
}

}  // namespace

double holomorphy_residual_component(const BargmannParams& b, const PlaneFunction& f,
                                     const PhaseSpaceGrid& grid, double h, int j) {
    if (j != 1 && j != 2) throw GridError("holomorphy component index must be 1 or 2");
    const std::vector<double> qs = axis_coords(grid.q_half, grid.per_axis);
    const std::vector<double> ps = axis_coords(grid.p_half, grid.per_axis);
    const double s2 = b.sigma * b.sigma;
    double num = 0.0;
    double den = 0.0;
    for (double q1 : qs) {
        for (double q2 : qs) {
            for (double p1 : ps) {
                for (double p2 : ps) {
                    const Point q{q1, q2};
                    const Point p{p1, p2};
                    den += std::norm(bargmann_classical(b, f, q, p));
                    Complex dP, dQ;
                    if (j == 1) {
                        dP = (bargmann_classical(b, f, q, {p1 + h, p2}) -
                              bargmann_classical(b, f, q, {p1 - h, p2})) / (2.0 * h);
                        dQ = (bargmann_classical(b, f, {q1 + h, q2}, p) -
                              bargmann_classical(b, f, {q1 - h, q2}, p)) / (2.0 * h);
                    } else {
                        dP = (bargmann_classical(b, f, q, {p1, p2 + h}) -
                              bargmann_classical(b, f, q, {p1, p2 - h})) / (2.0 * h);
                        dQ = (bargmann_classical(b, f, {q1, q2 + h}, p) -
                              bargmann_classical(b, f, {q1, q2 - h}, p)) / (2.0 * h);
                    }
                    num += std::norm(dP + Complex(0.0, s2) * dQ);
                }
            }
        }
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

double holomorphy_residual(const BargmannParams& b, const PlaneFunction& f,
                           const PhaseSpaceGrid& grid, double h) {
    const double r1 = holomorphy_residual_component(b, f, grid, h, 1);
    const double r2 = holomorphy_residual_component(b, f, grid, h, 2);
    return std::sqrt(r1 * r1 + r2 * r2);
}

Complex bargmann_of_ring(const BargmannParams& b, const RingDistribution& r, const Point& q,
                         const Point& p) {
    const double sigma = b.sigma;
    const double omega = r.omega;
    const double p_norm = std::hypot(p[0], p[1]);
    const double theta_p = std::atan2(p[1], p[0]);
    const std::size_t n = r.density.size();
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double phi = r.density.phi(j);
        const double radial = std::exp(sigma * sigma * p_norm * omega * std::cos(phi - theta_p));
        const double phase = omega * (q[0] * std::cos(phi) + q[1] * std::sin(phi));
        acc += r.density[j] * std::polar(radial, phase);
    }
    acc *= kTwoPi / static_cast<double>(n);
    return acc * std::exp(-sigma * sigma * omega * omega / 2.0) / (sigma * std::sqrt(M_PI));
}

RestrictionReport restriction_theorem_check(const BargmannParams& b, const IrrepParams& p,
                                            const CircleFunction& phi,
                                            const std::vector<std::pair<Point, Point>>& points) {
    RestrictionReport report;
    report.max_rel_error = 0.0;
    const double sigma = b.sigma;
    for (const auto& [q, pp] : points) {
        const double p_norm = std::hypot(pp[0], pp[1]);
        const double theta_p = std::atan2(pp[1], pp[0]);
        const double lambda = sigma * sigma * p_norm;

        const Complex lhs = bargmann_of_ring(b, RingDistribution{p.omega, phi}, q, pp);

        const CircleFunction u0 = minimal_wavelet(lambda, p, phi.size());
        const Complex root = j0(Complex(0.0, -2.0 * lambda * p.omega));
        // The argument is 2*pi*I0(2*lambda*omega): real and positive, so the
        // principal square root is unambiguous.
        if (!(root.real() > 0.0) || std::abs(root.imag()) > 1e-9 * root.real()) {
            throw Error("restriction_theorem_check: unexpected branch for sqrt(j0)");
        }
        const double pref = std::exp(-sigma * sigma * p.omega * p.omega / 2.0) *
                            std::sqrt(root.real()) / (sigma * std::sqrt(M_PI));
        const Complex rhs =
            pref * analyze_at(p, u0, phi, GroupElement(q[0], q[1], theta_p));

        const double rel = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        report.points.push_back({q, pp, lhs, rhs, rel});
        report.max_rel_error = std::max(report.max_rel_error, rel);
    }
    return report;
}

}  // namespace se2wave
