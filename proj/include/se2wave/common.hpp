#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace se2wave {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible or invalid grids (size mismatch, odd sample count, ...).
class GridError : public Error {
public:
    using Error::Error;
};

/// A parameter exceeds a documented cap (e.g. lambda*omega too large).
class ParameterCapError : public Error {
public:
    using Error::Error;
};

/// The requested grid cannot resolve the object; carries the grid size that would.
class ResolutionError : public ParameterCapError {
public:
    ResolutionError(const std::string& msg, std::size_t required_n)
        : ParameterCapError(msg), required_n(required_n) {}
    std::size_t required_n;
};

class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Ring data (densities or provenance) needed but not available.
class RepresentationError : public Error {
public:
    using Error::Error;
};

/// Field fails the CR range test of the inversion.
class NotInRangeError : public Error {
public:
    using Error::Error;
};

/// Domain truncation invalidates a quadrature (tail energy, window escape).
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Malformed input file.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Deterministic seeded generator for test vectors. Draws are produced from
/// raw mt19937_64 output (std::*_distribution is implementation-defined and
/// would break the byte-identical report contract across standard libraries).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller on raw uniforms.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(kTwoPi * u2);
        have_spare_ = true;
        return r * std::cos(kTwoPi * u2);
    }

    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    // splitmix64 seeding + xorshift-style advance; fully specified so that
    // the same seed yields the same bytes on every platform.
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Runs fn(begin, end) over [0, count) split into contiguous chunks.
/// Thread count is min(hardware, SE2_THREADS if set); chunk boundaries depend
/// only on the thread count, so results are reproducible run to run.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn);

std::size_t max_threads();

}  // namespace se2wave
