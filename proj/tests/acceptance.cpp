// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "se2wave/verify.hpp"

namespace fs = std::filesystem;
using se2wave::verify::VerificationReport;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, bool passed, const std::string& detail) {
    std::printf("criterion %02d [%s] %s: %s\n", number, passed ? "PASS" : "FAIL", title.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!passed) ++failures;
}

std::vector<VerificationReport> select(const std::vector<VerificationReport>& reports,
                                       const std::string& name) {
    std::vector<VerificationReport> out;
    for (const auto& r : reports) {
        if (r.check_name == name) out.push_back(r);
    }
    return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    if (reports.empty()) return false;
    for (const auto& r : reports) {
        if (!r.passed) return false;
    }
    return true;
}

double worst_observed(const std::vector<VerificationReport>& reports) {
    double worst = 0.0;
    for (const auto& r : reports) worst = std::max(worst, std::abs(r.observed));
    return worst;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const std::uint64_t seed = 1;

    {  // 1. Parseval identity, runtime bound at n = 256
        const auto t0 = Clock::now();
        const auto reports = se2wave::verify::run_parseval(seed);
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        criterion(1, "Parseval identity", all_pass(reports) && ms < 5000.0,
                  "max rel deviation " + fmt(worst_observed(reports)) +
                      " (tol 1e-10) over lambda*omega in {0,1,4}, runtime " + fmt(ms * 1e-3) +
                      " s < 5 s");
    }

    const auto reproducing = se2wave::verify::run_reproducing(seed);
    {  // 2. Reproducing identity
        const auto r = select(reproducing, "reproducing_identity");
        criterion(2, "reproducing identity", all_pass(r),
                  "max rel error " + fmt(worst_observed(r)) + " at 20 points (tol 1e-9)");
    }

    {  // 3. Minimal wavelet: ODE residual, normalization, equality case
        const auto reports = se2wave::verify::run_uncertainty(seed);
        const auto ode = select(reports, "minimal_wavelet_ode_residual");
        const auto nrm = select(reports, "minimal_wavelet_norm");
        const auto gap = select(reports, "uncertainty_gap");
        criterion(3, "minimal-uncertainty wavelet",
                  all_pass(ode) && all_pass(nrm) && all_pass(gap),
                  "ode residual " + fmt(worst_observed(ode)) + " (tol 1e-10), norm dev " +
                      fmt(worst_observed(nrm)) + " (tol 1e-12), gap " +
                      fmt(worst_observed(gap)) + " (tol 1e-9*omega), lambda*omega <= 10");
    }

    {  // 4. CR regularity: order-2 ratios and the negative control
        const auto reports = se2wave::verify::run_cr(seed, nullptr);
        const auto ratios = select(reports, "cr_convergence_ratio");
        const auto control = select(reports, "cr_negative_control_ratio");
        std::string detail = "halving ratios";
        for (const auto& r : ratios) detail += " " + fmt(r.observed);
        detail += " in [3.6, 4.4]; control x" + fmt(worst_observed(control)) + " >= 100";
        criterion(4, "CR regularity", all_pass(ratios) && all_pass(control), detail);
    }

    {  // 5. Surjectivity roundtrip
        const auto r = select(reproducing, "surjectivity_roundtrip");
        criterion(5, "surjectivity roundtrip", all_pass(r),
                  "max rel L2 error " + fmt(worst_observed(r)) + " over 10 vectors (tol 1e-9)");
    }
    {  // 6. Weak reconstruction
        const auto r = select(reproducing, "weak_reconstruction");
        criterion(6, "weak reconstruction", all_pass(r),
                  "max rel error " + fmt(worst_observed(r)) + " over 10 vectors (tol 1e-9)");
    }

    {  // 7. Direct integral + Plancherel, single-threaded runtime bound
        setenv("SE2_THREADS", "1", 1);
        const auto t0 = Clock::now();
        const auto reports = se2wave::verify::run_reconstruction(seed);
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        unsetenv("SE2_THREADS");
        const auto rec = select(reports, "direct_integral_reconstruction");
        const auto pl = select(reports, "plancherel_identity");
        criterion(7, "direct-integral reconstruction", all_pass(rec) && all_pass(pl) && ms < 60000.0,
                  "rel L2 error " + fmt(worst_observed(rec)) + ", Plancherel dev " +
                      fmt(worst_observed(pl)) + " (tol 1e-6), runtime " + fmt(ms * 1e-3) +
                      " s < 60 s single-threaded");

        // 8. Projector consistency came from the same suite
        const auto proj = select(reports, "projector_convolution_consistency");
        criterion(8, "projector vs Bessel convolution", all_pass(proj),
                  "max rel deviation " + fmt(worst_observed(proj)) + " at 10 points (tol 1e-6)");
    }

    {  // 9+ 10. Bargmann restriction, cross-check, classical holomorphy
        const auto reports = se2wave::verify::run_bargmann(seed, nullptr);
        const auto restriction = select(reports, "bargmann_restriction");
        const auto cross = select(reports, "bargmann_classical_crosscheck");
        criterion(9, "Bargmann restriction identity", all_pass(restriction) && all_pass(cross),
                  "circle-quadrature max rel " + fmt(worst_observed(restriction)) +
                      " (tol 1e-8); classical path " + fmt(worst_observed(cross)) +
                      " (tol 1e-5)");
        const auto holo = select(reports, "holomorphy_order");
        std::string detail = "halving ratios";
        for (const auto& r : holo) detail += " " + fmt(r.observed);
        criterion(10, "classical holomorphy order", all_pass(holo), detail + " in [3.6, 4.4]");
    }

    {  // 11. Byte-identical verify reports across runs
        const char* cli = std::getenv("SE2WAVE_CLI");
        if (cli == nullptr) {
            criterion(11, "deterministic reports", false, "SE2WAVE_CLI not set");
        } else {
            const fs::path dir =
                fs::temp_directory_path() / ("se2wave_acc_" + std::to_string(::getpid()));
            fs::create_directories(dir);
            const fs::path r1 = dir / "r1.json";
            const fs::path r2 = dir / "r2.json";
            int code1 = -1, code2 = -1;
            for (auto* pair : {&code1, &code2}) {
                const std::string cmd = std::string(cli) + " verify all --seed 1 --report " +
                                        (pair == &code1 ? r1 : r2).string() +
                                        " > /dev/null 2> /dev/null";
                const int status = std::system(cmd.c_str());
                *pair = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
            }
            const std::string a = slurp(r1);
            const std::string b = slurp(r2);
            criterion(11, "deterministic reports",
                      code1 == 0 && code2 == 0 && !a.empty() && a == b,
                      "verify all --seed 1 twice: exit " + std::to_string(code1) + "/" +
                          std::to_string(code2) + ", " + std::to_string(a.size()) +
                          " byte reports " + (a == b ? "identical" : "DIFFER"));
            fs::remove_all(dir);
        }
    }

    if (failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
