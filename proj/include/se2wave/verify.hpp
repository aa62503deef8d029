#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "se2wave/circle.hpp"

namespace se2wave::verify {

enum class CheckKind {
    Equality,    // passed <=> |observed - expected| <= tolerance
    UpperBound,  // passed <=> observed <= expected
    LowerBound,  // passed <=> observed >= expected
};

struct VerificationReport {
    std::string check_name;
    std::map<std::string, std::string> parameters;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    CheckKind kind = CheckKind::Equality;
    bool passed = false;
    std::int64_t runtime_ms = 0;  // console only; kept out of the JSON report
                                  // so reports are byte-identical across runs
};

/// Seeded band-limited test vector: modes |m| <= max_mode with complex
/// standard-normal coefficients drawn in mode order -max_mode..max_mode.
CircleFunction random_band_limited(SeededRng& rng, std::size_t n, int max_mode);

/// Per-theta convergence table emitted by the cr suite.
struct CrTableRow {
    double h;
    double residual;
    double ratio;  // residual(2h) / residual(h); 0 for the first row
};

/// One row per evaluation point, emitted by the bargmann suite.
struct BargmannPointRow {
    double q1, q2, p1, p2;
    double rel_error;
};

std::vector<VerificationReport> run_parseval(std::uint64_t seed);
std::vector<VerificationReport> run_reproducing(std::uint64_t seed);
std::vector<VerificationReport> run_uncertainty(std::uint64_t seed);
std::vector<VerificationReport> run_cr(std::uint64_t seed, std::vector<CrTableRow>* table = nullptr);
std::vector<VerificationReport> run_reconstruction(std::uint64_t seed);
/// sigma drives the restriction and holomorphy checks; the classical
/// cross-check stays at the sigma = 1 normalization it is stated for.
std::vector<VerificationReport> run_bargmann(std::uint64_t seed,
                                             std::vector<BargmannPointRow>* points = nullptr,
                                             double sigma = 1.0);
std::vector<VerificationReport> run_all(std::uint64_t seed);

/// Dispatch by suite name; throws Error on an unknown suite.
std::vector<VerificationReport> run_suite(const std::string& name, std::uint64_t seed,
                                          std::vector<CrTableRow>* cr_table = nullptr,
                                          std::vector<BargmannPointRow>* bargmann_points = nullptr,
                                          double sigma = 1.0);

/// Serializes reports as a deterministic JSON array (runtime_ms excluded).
std::string reports_to_json(const std::vector<VerificationReport>& reports);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace se2wave::verify
