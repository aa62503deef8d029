#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "se2wave/cr.hpp"

using namespace se2wave;
using namespace se2wave::testing;

namespace {

WaveletField sampled_field(double omega, const FieldGrid& grid,
                           const std::function<Complex(double, double, double)>& f) {
    std::vector<Complex> values(grid.m * grid.m * grid.n_theta);
    const double dx = 2.0 * grid.extent / static_cast<double>(grid.m);
    for (std::size_t j = 0; j < grid.m; ++j) {
        const double x = -grid.extent + dx * static_cast<double>(j);
        for (std::size_t k = 0; k < grid.m; ++k) {
            const double y = -grid.extent + dx * static_cast<double>(k);
            for (std::size_t l = 0; l < grid.n_theta; ++l) {
                const double th = kTwoPi * static_cast<double>(l) /
                                  static_cast<double>(grid.n_theta);
                values[(j * grid.m + k) * grid.n_theta + l] = f(x, y, th);
            }
        }
    }
    return WaveletField(omega, grid, std::move(values));
}

}  // namespace

TEST_CASE("left-invariant fields on elementary functions") {
    const FieldGrid grid{32, 4.0, 16};
    const double dx = 2.0 * grid.extent / 32.0;

    SUBCASE("constants are annihilated") {
        const WaveletField c = sampled_field(1.0, grid, [](double, double, double) {
            return Complex(2.5, -1.0);
        });
        for (LeftField which : {LeftField::X1, LeftField::X2, LeftField::X3}) {
            const WaveletField d = apply_field(c, which, dx);
            CHECK(interior_l2(d, 1) < 1e-12);
        }
    }
    SUBCASE("F = q1") {
        const WaveletField f = sampled_field(1.0, grid, [](double x, double, double) {
            return Complex(x, 0.0);
        });
        const WaveletField x1 = apply_field(f, LeftField::X1, dx);
        const WaveletField x2 = apply_field(f, LeftField::X2, dx);
        const WaveletField x3 = apply_field(f, LeftField::X3, dx);
        double worst1 = 0.0, worst2 = 0.0, worst3 = 0.0;
        for (std::size_t j = 1; j < 31; ++j) {
            for (std::size_t k = 1; k < 31; ++k) {
                for (std::size_t l = 0; l < 16; ++l) {
                    const double th = f.theta(l);
                    worst1 = std::max(worst1, std::abs(x1.value(j, k, l) -
                                                       Complex(-std::sin(th), 0.0)));
                    worst2 = std::max(worst2, std::abs(x2.value(j, k, l)));
                    worst3 = std::max(worst3, std::abs(x3.value(j, k, l) -
                                                       Complex(std::cos(th), 0.0)));
                }
            }
        }
        CHECK(worst1 < 1e-13);
        CHECK(worst2 < 1e-13);
        CHECK(worst3 < 1e-13);
    }
    SUBCASE("step validation") {
        const WaveletField f = sampled_field(1.0, grid, [](double x, double y, double) {
            return Complex(x * y, 0.0);
        });
        CHECK_THROWS_AS(apply_field(f, LeftField::X1, 0.4 * dx), GridError);
        CHECK_THROWS_AS(apply_field(f, LeftField::X1, 1.37 * dx), GridError);
    }
}

TEST_CASE("commutator [X1,X2] = X3") {
    const FieldGrid grid{48, 3.0, 16};
    auto wave = [](double x, double y, double th) {
        return std::polar(1.0, x + 2.0 * y) * std::polar(1.0, th);
    };
    const WaveletField f = sampled_field(1.0, grid, wave);
    const double dx = 2.0 * grid.extent / 48.0;

    // worst deviation of X1 X2 - X2 X1 from the given X3 field over the
    // doubly-interior region
    auto commutator_error = [&](double h, const std::function<Complex(std::size_t, std::size_t,
                                                                      std::size_t)>& x3) {
        const auto s = static_cast<std::size_t>(std::llround(h / dx));
        const WaveletField a = apply_field(apply_field(f, LeftField::X2, h), LeftField::X1, h);
        const WaveletField b = apply_field(apply_field(f, LeftField::X1, h), LeftField::X2, h);
        double worst = 0.0;
        for (std::size_t j = 2 * s; j < 48 - 2 * s; ++j) {
            for (std::size_t k = 2 * s; k < 48 - 2 * s; ++k) {
                for (std::size_t l = 0; l < 16; ++l) {
                    worst = std::max(worst, std::abs(a.value(j, k, l) - b.value(j, k, l) -
                                                     x3(j, k, l)));
                }
            }
        }
        return worst;
    };

    SUBCASE("exact as difference operators") {
        const WaveletField x3f = apply_field(f, LeftField::X3, 2.0 * dx);
        const double err = commutator_error(
            2.0 * dx, [&](std::size_t j, std::size_t k, std::size_t l) {
                return x3f.value(j, k, l);
            });
        CHECK(err < 1e-12);
    }
    SUBCASE("second-order against the analytic X3") {
        // X3 e^{i(q1 + 2 q2)} e^{i theta} = i (cos theta + 2 sin theta) F
        auto analytic = [&](std::size_t j, std::size_t k, std::size_t l) {
            const double th = f.theta(l);
            return Complex(0.0, std::cos(th) + 2.0 * std::sin(th)) * f.value(j, k, l);
        };
        const double e1 = commutator_error(4.0 * dx, analytic);
        const double e2 = commutator_error(2.0 * dx, analytic);
        CHECK(e1 / e2 > 3.0);
        CHECK(e1 / e2 < 5.0);
    }
}

TEST_CASE("left invariance of the fields under grid-aligned translations") {
    // (X_i F) o L_h = X_i (F o L_h) with L_h F(g) = F(h^{-1} g); for h a grid
    // motion (translation + quarter turn) both sides are index remappings of
    // the same stencils, so they agree to roundoff.
    const FieldGrid grid{32, 4.0, 16};
    const double dx = 2.0 * grid.extent / 32.0;
    auto smooth = [](double x, double y, double th) {
        return std::polar(std::exp(-(x * x + y * y) / 6.0), 0.8 * x - 0.5 * y + th);
    };
    const WaveletField f = sampled_field(1.0, grid, smooth);
    // h = (2 dx, -dx, pi/2); h^{-1}(q, th) = (r_{-pi/2}(q - a), th - pi/2)
    auto pulled = [&](double x, double y, double th) {
        const double ux = x - 2.0 * dx;
        const double uy = y + dx;
        return smooth(uy, -ux, th - M_PI / 2.0);
    };
    const WaveletField fl = sampled_field(1.0, grid, pulled);

    for (LeftField which : {LeftField::X1, LeftField::X2, LeftField::X3}) {
        const WaveletField df = apply_field(f, which, dx);
        const WaveletField dfl = apply_field(fl, which, dx);
        double worst = 0.0;
        for (std::size_t j = 4; j < 28; ++j) {
            for (std::size_t k = 4; k < 28; ++k) {
                for (std::size_t l = 0; l < 16; ++l) {
                    // image of (j, k, l) under h^{-1}: rotate indices by the
                    // quarter turn after the shift
                    const std::size_t ja = j - 2, ka = k + 1;  // q - a
                    const std::size_t jr = ka;                 // r_{-pi/2}
                    const std::size_t kr = 32 - ja;
                    const std::size_t lr = (l + 16 - 4) % 16;
                    if (jr < 1 || jr > 30 || kr < 1 || kr > 30) continue;
                    worst = std::max(worst, std::abs(dfl.value(j, k, l) -
                                                     df.value(jr, kr, lr)));
                }
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("cr residual") {
    const std::size_t n = 128;
    const IrrepParams p(2.0);
    const double lambda = 0.5;
    SeededRng rng(41);

    SUBCASE("theta-independent field with lambda = 0") {
        const FieldGrid grid{32, 4.0, 16};
        const WaveletField f = sampled_field(1.0, grid, [](double x, double y, double) {
            return Complex(std::exp(-(x * x + y * y) / 4.0), 0.0);
        });
        CHECK(cr_residual(f, 0.0, 2.0 * f.dx()) < 1e-12);
    }
    SUBCASE("bargmann fields converge at second order") {
        const FieldGrid grid{96, 6.0, 32};
        const auto phi = band_limited(rng, n, 6);
        const WaveletField f = bargmann_se2(lambda, p, phi, grid);
        const double dx = f.dx();
        const double r1 = cr_residual(f, lambda, 4.0 * dx);
        const double r2 = cr_residual(f, lambda, 2.0 * dx);
        const double r3 = cr_residual(f, lambda, dx);
        CHECK(r1 / r2 > 3.6);
        CHECK(r1 / r2 < 4.4);
        CHECK(r2 / r3 > 3.6);
        CHECK(r2 / r3 < 4.4);
    }
    SUBCASE("non-minimal wavelets are a negative control") {
        const FieldGrid grid{96, 6.0, 32};
        const auto phi = band_limited(rng, n, 6);
        const auto u_bad = normalized(sampled(n, [](double t) {
            return Complex(1.0 + std::cos(2.0 * t), 0.0);
        }));
        const WaveletField good = bargmann_se2(lambda, p, phi, grid);
        const WaveletField bad = analyze(p, u_bad, phi, grid);
        const double r_good = cr_residual(good, lambda, good.dx());
        const double r_bad = cr_residual(bad, lambda, bad.dx());
        CHECK(r_bad > 100.0 * r_good);
    }
    SUBCASE("finite differences track the analytic derivative field") {
        // ring-side oracle: the theta slice density of (X2 + i lambda X1)F is
        // -Phi(phi) conj((u0' + lambda omega sin(.) u0)(phi - theta))
        const FieldGrid grid{64, 4.0, 16};
        const auto u_bad = normalized(sampled(n, [](double t) {
            return Complex(1.0 + std::cos(2.0 * t), 0.0);
        }));
        const auto phi = band_limited(rng, n, 6);
        const WaveletField f = analyze(p, u_bad, phi, grid);

        const auto du = spectral_derivative(u_bad);
        std::vector<Complex> zu(n);
        for (std::size_t j = 0; j < n; ++j) {
            zu[j] = du[j] + lambda * p.omega * std::sin(u_bad.phi(j)) * u_bad[j];
        }
        const CircleFunction z_wavelet(std::move(zu));

        auto oracle_at = [&](std::size_t j, std::size_t k, std::size_t l) {
            const std::size_t stride = n / grid.n_theta;
            Complex acc{0.0, 0.0};
            for (std::size_t a = 0; a < n; ++a) {
                const double ang = kTwoPi * static_cast<double>(a) / static_cast<double>(n);
                const Complex d =
                    -phi[a] * std::conj(z_wavelet[(a + n - l * stride) % n]);
                acc += d * std::polar(1.0, p.omega * (f.x(j) * std::cos(ang) +
                                                      f.x(k) * std::sin(ang)));
            }
            return acc * kTwoPi / static_cast<double>(n);
        };

        auto fd_error = [&](double h) {
            const auto s = static_cast<std::size_t>(std::llround(h / f.dx()));
            const WaveletField x1 = apply_field(f, LeftField::X1, h);
            const WaveletField x2 = apply_field(f, LeftField::X2, h);
            double worst = 0.0;
            for (std::size_t j : {s + 2, f.m() / 2, f.m() - s - 3}) {
                for (std::size_t l : {0u, 5u}) {
                    const std::size_t k = f.m() / 2 + 1;
                    const Complex fd = x2.value(j, k, l) +
                                       Complex(0.0, lambda) * x1.value(j, k, l);
                    worst = std::max(worst, std::abs(fd - oracle_at(j, k, l)));
                }
            }
            return worst;
        };
        const double e1 = fd_error(2.0 * f.dx());
        const double e2 = fd_error(f.dx());
        CHECK(e1 / e2 > 3.0);
        CHECK(e1 / e2 < 5.0);
    }
}

TEST_CASE("group Fourier transform") {
    const std::size_t n = 64;
    const IrrepParams p(1.0);
    const FieldGrid grid{64, 8.0, 16};

    SUBCASE("theta-independent symbols act multiplicatively") {
        const WaveletField f = sampled_field(p.omega, grid, [](double x, double y, double) {
            return Complex(std::exp(-(x * x + y * y) / 2.0), 0.0);
        });
        SeededRng rng(42);
        const auto u = band_limited(rng, n, 6);  // resolved on the theta grid
        const CircleFunction got = group_fourier(f, p, u);
        Complex mean{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) mean += u[j];
        mean *= kTwoPi / static_cast<double>(n);
        const double ring = std::exp(-p.omega * p.omega / 2.0);
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            worst = std::max(worst, std::abs(got[j] - ring * mean));
        }
        CHECK(worst < 1e-8 * std::abs(ring * mean));
    }
    SUBCASE("zero symbol") {
        const WaveletField z(p.omega, grid,
                             std::vector<Complex>(grid.m * grid.m * grid.n_theta,
                                                  Complex{0.0, 0.0}));
        CHECK(norm(group_fourier(z, p, CircleFunction::constant(n, {1.0, 0.0}))) == 0.0);
    }
    SUBCASE("separable symbol against the closed form") {
        const WaveletField f = sampled_field(p.omega, grid, [](double x, double y, double th) {
            return std::polar(std::exp(-(x * x + y * y) / 2.0), th);
        });
        const auto u = sampled(n, [](double t) { return std::polar(1.0, t); });
        const CircleFunction got = group_fourier(f, p, u);
        const double ring = std::exp(-p.omega * p.omega / 2.0);
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const Complex want = ring * kTwoPi * std::polar(1.0, got.phi(j));
            worst = std::max(worst, std::abs(got[j] - want));
        }
        CHECK(worst < 1e-8 * ring * kTwoPi);
    }
    SUBCASE("boundary decay is enforced") {
        const WaveletField ones(p.omega, grid,
                                std::vector<Complex>(grid.m * grid.m * grid.n_theta,
                                                     Complex{1.0, 0.0}));
        CHECK_THROWS_AS(group_fourier(ones, p, CircleFunction::constant(n, {1.0, 0.0})),
                        TruncationError);
    }
}
