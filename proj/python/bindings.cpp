#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "se2wave/bargmann.hpp"
#include "se2wave/cr.hpp"
#include "se2wave/field.hpp"
#include "se2wave/io.hpp"
#include "se2wave/plane.hpp"
#include "se2wave/verify.hpp"

namespace py = pybind11;
using namespace se2wave;

namespace {

CircleFunction circle_from_array(const py::array_t<Complex>& a) {
    if (a.ndim() != 1) throw GridError("expected a 1-d complex array");
    const auto r = a.unchecked<1>();
    std::vector<Complex> values(static_cast<std::size_t>(r.shape(0)));
    for (py::ssize_t j = 0; j < r.shape(0); ++j) values[static_cast<std::size_t>(j)] = r(j);
    return CircleFunction(std::move(values));
}

py::array_t<Complex> circle_to_array(const CircleFunction& u) {
    return py::array_t<Complex>(static_cast<py::ssize_t>(u.size()), u.values().data());
}

PlaneFunction plane_from_array(const py::array_t<Complex>& a, double extent) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw GridError("expected a square 2-d complex array");
    }
    const auto r = a.unchecked<2>();
    const auto m = static_cast<std::size_t>(r.shape(0));
    std::vector<Complex> values(m * m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            values[j * m + k] = r(static_cast<py::ssize_t>(j), static_cast<py::ssize_t>(k));
        }
    }
    return PlaneFunction(m, extent, std::move(values));
}

py::array_t<Complex> plane_to_array(const PlaneFunction& f) {
    const auto m = static_cast<py::ssize_t>(f.m());
    py::array_t<Complex> out({m, m});
    auto w = out.mutable_unchecked<2>();
    for (py::ssize_t j = 0; j < m; ++j) {
        for (py::ssize_t k = 0; k < m; ++k) {
            w(j, k) = f.value(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        }
    }
    return out;
}

py::array_t<Complex> field_to_array(const WaveletField& f) {
    const auto m = static_cast<py::ssize_t>(f.m());
    const auto nt = static_cast<py::ssize_t>(f.n_theta());
    py::array_t<Complex> out({m, m, nt});
    auto w = out.mutable_unchecked<3>();
    for (py::ssize_t j = 0; j < m; ++j) {
        for (py::ssize_t k = 0; k < m; ++k) {
            for (py::ssize_t l = 0; l < nt; ++l) {
                w(j, k, l) = f.value(static_cast<std::size_t>(j), static_cast<std::size_t>(k),
                                     static_cast<std::size_t>(l));
            }
        }
    }
    return out;
}

Point point_of(const std::pair<double, double>& p) { return {p.first, p.second}; }

py::dict report_to_dict(const verify::VerificationReport& r) {
    py::dict d;
    d["check"] = r.check_name;
    d["parameters"] = r.parameters;
    d["observed"] = r.observed;
    d["expected"] = r.expected;
    d["tolerance"] = r.tolerance;
    d["passed"] = r.passed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SE(2) continuous wavelet transform core";

    py::register_exception<GridError>(m, "GridError", PyExc_ValueError);
    py::register_exception<ParameterCapError>(m, "ParameterCapError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<RepresentationError>(m, "RepresentationError", PyExc_ValueError);
    py::register_exception<NotInRangeError>(m, "NotInRangeError", PyExc_ValueError);
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init<double, double, double>(), py::arg("q1"), py::arg("q2"), py::arg("theta"))
        .def_readonly("q1", &GroupElement::q1)
        .def_readonly("q2", &GroupElement::q2)
        .def_readonly("theta", &GroupElement::theta)
        .def("__repr__", [](const GroupElement& g) {
            return "GroupElement(" + std::to_string(g.q1) + ", " + std::to_string(g.q2) + ", " +
                   std::to_string(g.theta) + ")";
        });

    m.def("compose", &compose);
    m.def("inverse", &inverse);
    m.def("act", [](const GroupElement& g, std::pair<double, double> x) {
        const Point y = act(g, point_of(x));
        return std::make_pair(y[0], y[1]);
    });

    m.def("inner_product", [](const py::array_t<Complex>& u, const py::array_t<Complex>& v) {
        return inner_product(circle_from_array(u), circle_from_array(v));
    });
    m.def("norm", [](const py::array_t<Complex>& u) { return norm(circle_from_array(u)); });
    m.def("rotate", [](const py::array_t<Complex>& u, double theta) {
        return circle_to_array(rotate(circle_from_array(u), theta));
    });
    m.def("spectral_derivative", [](const py::array_t<Complex>& u) {
        return circle_to_array(spectral_derivative(circle_from_array(u)));
    });
    m.def("j0", [](Complex z) { return j0(z); });

    m.def("apply_irrep", [](double omega, const GroupElement& g, const py::array_t<Complex>& u) {
        return circle_to_array(apply_irrep(IrrepParams(omega), g, circle_from_array(u)));
    });
    m.def("dpi_x1", [](double omega, const py::array_t<Complex>& u) {
        return circle_to_array(dpi_x1(IrrepParams(omega), circle_from_array(u)));
    });
    m.def("dpi_x2", [](const py::array_t<Complex>& u) {
        return circle_to_array(dpi_x2(circle_from_array(u)));
    });
    m.def("dpi_x3", [](double omega, const py::array_t<Complex>& u) {
        return circle_to_array(dpi_x3(IrrepParams(omega), circle_from_array(u)));
    });
    m.def("uncertainty_gap", [](double omega, const py::array_t<Complex>& u) {
        return uncertainty_gap(IrrepParams(omega), circle_from_array(u));
    });
    m.def("minimal_wavelet", [](double lambda, double omega, std::size_t n) {
        return circle_to_array(minimal_wavelet(lambda, IrrepParams(omega), n));
    });

    py::class_<RingDistribution>(m, "RingDistribution")
        .def(py::init([](double omega, const py::array_t<Complex>& density) {
                 return RingDistribution{omega, circle_from_array(density)};
             }),
             py::arg("omega"), py::arg("density"))
        .def_readonly("omega", &RingDistribution::omega)
        .def_readonly("truncation_warning", &RingDistribution::truncation_warning)
        .def_readonly("boundary_ratio", &RingDistribution::boundary_ratio)
        .def_property_readonly(
            "density", [](const RingDistribution& r) { return circle_to_array(r.density); });

    py::class_<PlaneFunction>(m, "PlaneFunction")
        .def(py::init(
                 [](const py::array_t<Complex>& values, double extent) {
                     return plane_from_array(values, extent);
                 }),
             py::arg("values"), py::arg("extent"))
        .def_property_readonly("values", &plane_to_array)
        .def_property_readonly("m", &PlaneFunction::m)
        .def_property_readonly("extent", &PlaneFunction::extent)
        .def("l2_norm", &PlaneFunction::l2_norm);

    m.def("ring_restrict", [](const PlaneFunction& f, double omega, std::size_t n) {
        return ring_restrict(f, IrrepParams(omega), n);
    });
    m.def("render_ring", &render_ring);
    m.def("project", [](const PlaneFunction& f, double omega, std::size_t n) {
        return project(f, IrrepParams(omega), n);
    });
    m.def("h_omega_norm", &h_omega_norm);
    m.def("reconstruct", &reconstruct, py::arg("f"), py::arg("omega_max"), py::arg("n_nodes"),
          py::arg("n"));
    m.def("plancherel_sum", &plancherel_sum, py::arg("f"), py::arg("omega_max"),
          py::arg("n_nodes"), py::arg("n"));

    py::class_<WaveletField>(m, "WaveletField")
        .def_property_readonly("omega", &WaveletField::omega)
        .def_property_readonly("n_theta", &WaveletField::n_theta)
        .def_property_readonly("m", &WaveletField::m)
        .def_property_readonly("extent", &WaveletField::extent)
        .def_property_readonly("values", &field_to_array)
        .def_property_readonly("u0",
                               [](const WaveletField& f) {
                                   return circle_to_array(f.provenance_u0());
                               })
        .def_property_readonly("phi", [](const WaveletField& f) {
            return circle_to_array(f.provenance_phi());
        });

    m.def("analyze", [](double omega, const py::array_t<Complex>& u0,
                        const py::array_t<Complex>& phi, std::size_t mgrid, double extent,
                        std::size_t n_theta) {
        return analyze(IrrepParams(omega), circle_from_array(u0), circle_from_array(phi),
                       FieldGrid{mgrid, extent, n_theta});
    });
    m.def("analyze_at", [](double omega, const py::array_t<Complex>& u0,
                           const py::array_t<Complex>& phi, const GroupElement& g) {
        return analyze_at(IrrepParams(omega), circle_from_array(u0), circle_from_array(phi), g);
    });
    m.def("kernel", [](double omega, const py::array_t<Complex>& u0, const GroupElement& g,
                       const GroupElement& g2) {
        return kernel(IrrepParams(omega), circle_from_array(u0), g, g2);
    });
    m.def("field_norm", &field_norm);
    m.def("reproduce_check", [](double omega, const py::array_t<Complex>& u0,
                                const py::array_t<Complex>& phi, const GroupElement& g) {
        const ReproducePair pair =
            reproduce_check(IrrepParams(omega), circle_from_array(u0), circle_from_array(phi), g);
        return std::make_pair(pair.lhs, pair.rhs);
    });
    m.def("weak_reconstruct",
          [](const WaveletField& f) { return circle_to_array(weak_reconstruct(f)); });
    m.def("bargmann_se2", [](double lambda, double omega, const py::array_t<Complex>& phi,
                             std::size_t mgrid, double extent, std::size_t n_theta) {
        return bargmann_se2(lambda, IrrepParams(omega), circle_from_array(phi),
                            FieldGrid{mgrid, extent, n_theta});
    });
    m.def("surjective_invert", [](const WaveletField& f, double lambda) {
        return circle_to_array(surjective_invert(f, lambda));
    });

    m.def("apply_field", [](const WaveletField& f, const std::string& which, double h) {
        LeftField lf;
        if (which == "X1") lf = LeftField::X1;
        else if (which == "X2") lf = LeftField::X2;
        else if (which == "X3") lf = LeftField::X3;
        else throw GridError("which must be X1, X2 or X3");
        return apply_field(f, lf, h);
    });
    m.def("cr_residual", &cr_residual, py::arg("f"), py::arg("lambda"), py::arg("h"));
    m.def("group_fourier", [](const WaveletField& f, double omega, const py::array_t<Complex>& u) {
        return circle_to_array(group_fourier(f, IrrepParams(omega), circle_from_array(u)));
    });

    m.def("bargmann_classical", [](double sigma, const PlaneFunction& f,
                                   std::pair<double, double> q, std::pair<double, double> p) {
        return bargmann_classical(BargmannParams(sigma), f, point_of(q), point_of(p));
    });
    m.def("holomorphy_residual", [](double sigma, const PlaneFunction& f, double q_half,
                                    double p_half, std::size_t per_axis, double h) {
        return holomorphy_residual(BargmannParams(sigma), f, PhaseSpaceGrid{q_half, p_half, per_axis},
                                   h);
    });
    m.def("bargmann_of_ring", [](double sigma, const RingDistribution& r,
                                 std::pair<double, double> q, std::pair<double, double> p) {
        return bargmann_of_ring(BargmannParams(sigma), r, point_of(q), point_of(p));
    });
    m.def("restriction_theorem_check",
          [](double sigma, double omega, const py::array_t<Complex>& phi,
             const std::vector<std::pair<std::pair<double, double>, std::pair<double, double>>>&
                 points) {
              std::vector<std::pair<Point, Point>> pts;
              pts.reserve(points.size());
              for (const auto& [q, p] : points) pts.emplace_back(point_of(q), point_of(p));
              const RestrictionReport report = restriction_theorem_check(
                  BargmannParams(sigma), IrrepParams(omega), circle_from_array(phi), pts);
              py::list rows;
              for (const RestrictionPoint& pt : report.points) {
                  py::dict d;
                  d["q"] = std::make_pair(pt.q[0], pt.q[1]);
                  d["p"] = std::make_pair(pt.p[0], pt.p[1]);
                  d["lhs"] = pt.lhs;
                  d["rhs"] = pt.rhs;
                  d["rel_error"] = pt.rel_error;
                  rows.append(d);
              }
              return py::make_tuple(rows, report.max_rel_error);
          });

    m.def("run_suite", [](const std::string& name, std::uint64_t seed) {
        py::list out;
        for (const auto& r : verify::run_suite(name, seed)) out.append(report_to_dict(r));
        return out;
    });

    m.def("write_se2f_plane", [](const std::string& path, const PlaneFunction& f) {
        io::write_se2f(path, f);
    });
    m.def("write_se2f_field", [](const std::string& path, const WaveletField& f) {
        io::write_se2f(path, f);
    });
    m.def("read_se2f_plane", [](const std::string& path) { return io::read_se2f_plane(path); });
    m.def("read_se2f_field", [](const std::string& path) { return io::read_se2f_field(path); });
    m.def("read_pgm", [](const std::string& path, double extent) {
        return io::read_pgm(path, extent);
    });
    m.def("write_circle_csv", [](const std::string& path, const py::array_t<Complex>& u) {
        io::write_circle_csv(std::filesystem::path(path), circle_from_array(u));
    });
    m.def("read_circle_csv", [](const std::string& path) {
        return circle_to_array(io::read_circle_csv(std::filesystem::path(path)));
    });
}
