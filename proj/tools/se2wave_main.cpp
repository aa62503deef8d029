#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "se2wave/bargmann.hpp"
#include "se2wave/cr.hpp"
#include "se2wave/field.hpp"
#include "se2wave/io.hpp"
#include "se2wave/plane.hpp"
#include "se2wave/verify.hpp"

namespace {

using namespace se2wave;

FieldGrid parse_grid(const std::string& spec) {
    std::size_t m1 = 0, m2 = 0, nt = 0;
    char x1 = 0, x2 = 0;
    std::istringstream in(spec);
    in >> m1 >> x1 >> m2 >> x2 >> nt;
    if (!in || x1 != 'x' || x2 != 'x') {
        throw FormatError("--grid expects MxMxT, e.g. 128x128x64, got '" + spec + "'");
    }
    if (m1 != m2) throw FormatError("--grid must be square in the spatial axes");
    return FieldGrid{m1, 0.0, nt};  // extent filled by the caller
}

GroupElement parse_group(const std::string& spec) {
    double q1 = 0.0, q2 = 0.0, theta = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    in >> q1 >> c1 >> q2 >> c2 >> theta;
    if (!in || c1 != ',' || c2 != ',') {
        throw FormatError("expected a group element as q1,q2,theta, got '" + spec + "'");
    }
    return {q1, q2, theta};
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct TransformOptions {
    double omega = 0.0;
    std::optional<double> lambda;
    std::string wavelet_file;
    std::string phi_file;
    std::string grid_spec;
    double extent = 0.0;
    std::string output;
    std::vector<std::string> at_points;
};

int cmd_transform(const TransformOptions& opt) {
    if (!opt.lambda.has_value() && opt.wavelet_file.empty()) {
        std::cerr << "transform: provide either --lambda or --wavelet FILE\n";
        return 2;
    }
    if (opt.lambda.has_value() && !opt.wavelet_file.empty()) {
        std::cerr << "transform: --lambda and --wavelet are mutually exclusive\n";
        return 2;
    }
    const IrrepParams p(opt.omega);
    const CircleFunction phi = io::read_circle_csv(opt.phi_file);
    const CircleFunction u0 = opt.wavelet_file.empty()
                                  ? minimal_wavelet(*opt.lambda, p, phi.size())
                                  : io::read_circle_csv(opt.wavelet_file);
    FieldGrid grid = parse_grid(opt.grid_spec);
    grid.extent = opt.extent;

    WaveletField field = analyze(p, u0, phi, grid);
    io::write_se2f(opt.output, field);
    std::cerr << "wrote " << opt.output << " (" << grid.m << "x" << grid.m << "x" << grid.n_theta
              << " field, omega = " << opt.omega << ")\n";

    if (!opt.at_points.empty()) {
        std::cout << "q1,q2,theta,re,im\n";
        for (const std::string& spec : opt.at_points) {
            const GroupElement g = parse_group(spec);
            const Complex v = analyze_at(p, u0, phi, g);
            std::cout << fmt17(g.q1) << ',' << fmt17(g.q2) << ',' << fmt17(g.theta) << ','
                      << fmt17(v.real()) << ',' << fmt17(v.imag()) << '\n';
        }
    }
    return 0;
}

struct ProjectOptions {
    std::string input;
    double omega = 0.0;
    std::size_t n = 256;
    std::string output;
    std::string ring_output;
};

int cmd_project(const ProjectOptions& opt) {
    if (opt.output.empty() && opt.ring_output.empty()) {
        std::cerr << "project: provide -o and/or --ring\n";
        return 2;
    }
    const PlaneFunction f = io::read_se2f_plane(opt.input);
    const IrrepParams p(opt.omega);
    const RingDistribution ring = ring_restrict(f, p, opt.n);
    if (ring.truncation_warning) {
        std::cerr << "warning: input decays to only " << ring.boundary_ratio
                  << " of its max at the grid boundary; ring values are truncated\n";
    }
    if (!opt.ring_output.empty()) io::write_circle_csv(opt.ring_output, ring.density);
    if (!opt.output.empty()) io::write_se2f(opt.output, render_ring(ring, f.m(), f.extent()));
    return 0;
}

struct ReconstructOptions {
    std::string input;
    double omega_max = 8.0;
    std::size_t nodes = 48;
    std::size_t n = 256;
    std::string output;
};

int cmd_reconstruct(const ReconstructOptions& opt) {
    const PlaneFunction f = io::read_se2f_plane(opt.input);
    const PlaneFunction rec = reconstruct(f, opt.omega_max, opt.nodes, opt.n);
    double num = 0.0, den = 0.0;
    for (std::size_t idx = 0; idx < rec.values().size(); ++idx) {
        num += std::norm(rec.values()[idx] - f.values()[idx]);
        den += std::norm(f.values()[idx]);
    }
    const double rel = den > 0.0 ? std::sqrt(num / den) : 0.0;
    if (!opt.output.empty()) io::write_se2f(opt.output, rec);
    std::cout << "relative_l2_error=" << fmt17(rel) << "\n";
    return 0;
}

struct LiftOptions {
    std::string input;
    double omega = 0.0;
    double lambda = 0.0;
    std::size_t n = 256;
    std::string grid_spec;
    double extent = 0.0;
    std::string output;
};

int cmd_lift(const LiftOptions& opt) {
    const PlaneFunction image = io::read_pgm(opt.input, opt.extent);
    const IrrepParams p(opt.omega);
    const RingDistribution ring = ring_restrict(image, p, opt.n);
    FieldGrid grid = parse_grid(opt.grid_spec);
    grid.extent = opt.extent;
    const WaveletField field = bargmann_se2(opt.lambda, p, ring.density, grid);
    io::write_se2f(opt.output, field);
    std::cerr << "lifted " << opt.input << " -> " << opt.output << "\n";
    return 0;
}

struct VerifyOptions {
    std::string suite;
    std::uint64_t seed = 1;
    double sigma = 1.0;
    std::string report_file;
};

int cmd_verify(const VerifyOptions& opt) {
    std::vector<verify::CrTableRow> cr_table;
    std::vector<verify::BargmannPointRow> bargmann_points;
    const std::vector<verify::VerificationReport> reports =
        verify::run_suite(opt.suite, opt.seed, &cr_table, &bargmann_points, opt.sigma);

    for (const auto& r : reports) {
        std::cerr << (r.passed ? "[ ok ]" : "[FAIL]") << ' ' << r.check_name;
        for (const auto& [k, v] : r.parameters) std::cerr << ' ' << k << '=' << v;
        std::cerr << " observed=" << fmt17(r.observed) << " expected=" << fmt17(r.expected)
                  << " tol=" << fmt17(r.tolerance) << " (" << r.runtime_ms << " ms)\n";
    }
    if (opt.suite == "cr" && !cr_table.empty()) {
        std::cout << "h,residual,ratio\n";
        for (const auto& row : cr_table) {
            std::cout << fmt17(row.h) << ',' << fmt17(row.residual) << ',' << fmt17(row.ratio)
                      << '\n';
        }
    }
    if (opt.suite == "bargmann" && !bargmann_points.empty()) {
        std::cout << "q1,q2,p1,p2,rel_error\n";
        for (const auto& row : bargmann_points) {
            std::cout << fmt17(row.q1) << ',' << fmt17(row.q2) << ',' << fmt17(row.p1) << ','
                      << fmt17(row.p2) << ',' << fmt17(row.rel_error) << '\n';
        }
    }

    const std::string json = verify::reports_to_json(reports);
    if (!opt.report_file.empty()) {
        std::ofstream out(opt.report_file);
        if (!out) throw FormatError("cannot open " + opt.report_file + " for writing");
        out << json;
    } else {
        std::cout << json;
    }
    return verify::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SE(2) continuous wavelet transform toolkit"};
    app.require_subcommand(1);

    TransformOptions transform_opt;
    auto* transform = app.add_subcommand(
        "transform", "Analyze a circle function into a wavelet field (SE2F)");
    transform->add_option("--omega", transform_opt.omega, "ring frequency Omega")->required();
    transform->add_option("--lambda", transform_opt.lambda,
                          "minimal-wavelet parameter (selects u0 = u^{lambda,Omega})");
    transform->add_option("--wavelet", transform_opt.wavelet_file, "mother wavelet CSV");
    transform->add_option("--phi", transform_opt.phi_file, "input circle function CSV")
        ->required();
    transform->add_option("--grid", transform_opt.grid_spec, "field grid MxMxT")->required();
    transform->add_option("--extent", transform_opt.extent, "spatial half-width L")->required();
    transform->add_option("-o,--output", transform_opt.output, "output SE2F file")->required();
    transform->add_option("--at", transform_opt.at_points,
                          "also evaluate at group elements q1,q2,theta (repeatable)");

    ProjectOptions project_opt;
    auto* project_cmd =
        app.add_subcommand("project", "Ring-restrict and render the projector P_Omega");
    project_cmd->add_option("--input", project_opt.input, "input SE2F plane file")->required();
    project_cmd->add_option("--omega", project_opt.omega, "ring frequency Omega")->required();
    project_cmd->add_option("--n", project_opt.n, "circle grid size");
    project_cmd->add_option("-o,--output", project_opt.output, "rendered SE2F output");
    project_cmd->add_option("--ring", project_opt.ring_output, "ring density CSV output");

    ReconstructOptions reconstruct_opt;
    auto* reconstruct_cmd = app.add_subcommand(
        "reconstruct", "Direct-integral reconstruction over [0, omega-max]");
    reconstruct_cmd->add_option("--input", reconstruct_opt.input, "input SE2F plane file")
        ->required();
    reconstruct_cmd->add_option("--omega-max", reconstruct_opt.omega_max, "radial cutoff");
    reconstruct_cmd->add_option("--nodes", reconstruct_opt.nodes, "Gauss-Legendre node count");
    reconstruct_cmd->add_option("--n", reconstruct_opt.n, "circle grid size");
    reconstruct_cmd->add_option("-o,--output", reconstruct_opt.output, "output SE2F file");

    LiftOptions lift_opt;
    auto* lift = app.add_subcommand("lift", "Lift a PGM image to a wavelet field");
    lift->add_option("--input", lift_opt.input, "input P5 PGM image")->required();
    lift->add_option("--omega", lift_opt.omega, "ring frequency Omega")->required();
    lift->add_option("--lambda", lift_opt.lambda, "minimal-wavelet parameter");
    lift->add_option("--n", lift_opt.n, "circle grid size");
    lift->add_option("--grid", lift_opt.grid_spec, "field grid MxMxT")->required();
    lift->add_option("--extent", lift_opt.extent, "spatial half-width L")->required();
    lift->add_option("-o,--output", lift_opt.output, "output SE2F file")->required();

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd
        ->add_option("suite", verify_opt.suite,
                     "parseval | reproducing | uncertainty | cr | reconstruction | bargmann | all")
        ->required();
    verify_cmd->add_option("--seed", verify_opt.seed, "seed for test vectors");
    verify_cmd->add_option("--sigma", verify_opt.sigma,
                           "Gaussian window width for the bargmann suite");
    verify_cmd->add_option("--report", verify_opt.report_file, "JSON report output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (transform->parsed()) return cmd_transform(transform_opt);
        if (project_cmd->parsed()) return cmd_project(project_opt);
        if (reconstruct_cmd->parsed()) return cmd_reconstruct(reconstruct_opt);
        if (lift->parsed()) return cmd_lift(lift_opt);
        if (verify_cmd->parsed()) return cmd_verify(verify_opt);
    } catch (const se2wave::ParameterCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const se2wave::TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const se2wave::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
