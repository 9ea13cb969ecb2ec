#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptosc/errors.hpp"
#include "ptosc/limits.hpp"
#include "ptosc/oracle.hpp"
#include "ptosc/parameters.hpp"
#include "ptosc/perturbation.hpp"
#include "ptosc/semiclassical.hpp"
#include "ptosc/spectra.hpp"

namespace py = pybind11;
using namespace ptosc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Poschl-Teller oscillator: spectra, pressures, limits, semiclassics and a finite-difference oracle";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", error.ptr());
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", error.ptr());

    py::class_<PTParameters>(m, "PTParameters")
        .def(py::init([](double mass, double wellDepth, double halfWidth, double actionQuantum) {
                 PTParameters p{mass, wellDepth, halfWidth, actionQuantum};
                 p.validate();
                 return p;
             }),
             py::arg("mass") = 1.0, py::arg("well_depth") = 0.0, py::arg("half_width") = 1.0,
             py::arg("hbar") = 1.0)
        .def_readwrite("mass", &PTParameters::mass)
        .def_readwrite("well_depth", &PTParameters::wellDepth)
        .def_readwrite("half_width", &PTParameters::halfWidth)
        .def_readwrite("hbar", &PTParameters::actionQuantum)
        .def("validate", &PTParameters::validate)
        .def("with_half_width", &PTParameters::withHalfWidth)
        .def("with_well_depth", &PTParameters::withWellDepth)
        .def("__repr__", [](const PTParameters& p) {
            return "PTParameters(mass=" + py::repr(py::float_(p.mass)).cast<std::string>() +
                   ", well_depth=" + py::repr(py::float_(p.wellDepth)).cast<std::string>() +
                   ", half_width=" + py::repr(py::float_(p.halfWidth)).cast<std::string>() +
                   ", hbar=" + py::repr(py::float_(p.actionQuantum)).cast<std::string>() + ")";
        });

    py::class_<DerivedScales>(m, "DerivedScales")
        .def_readonly("alpha", &DerivedScales::alpha)
        .def_readonly("kinetic_scale", &DerivedScales::kineticScale)
        .def_readonly("zeta_squared", &DerivedScales::zetaSquared)
        .def_readonly("lambda_", &DerivedScales::lambdaExact)
        .def_readonly("oscillator_quantum", &DerivedScales::oscillatorQuantum)
        .def_readonly("psi", &DerivedScales::psiFactor)
        .def_readonly("n_critical", &DerivedScales::nCritical)
        .def_readonly("coupling", &DerivedScales::coupling);
    m.def("derive_scales", &derive_scales, py::arg("params"));

    py::class_<EnergyLevel>(m, "EnergyLevel")
        .def_readonly("fp", &EnergyLevel::fp)
        .def_readonly("ho", &EnergyLevel::ho)
        .def_readonly("total", &EnergyLevel::total);
    py::class_<PressureLevel>(m, "PressureLevel")
        .def_readonly("fp", &PressureLevel::fp)
        .def_readonly("ho", &PressureLevel::ho)
        .def_readonly("total", &PressureLevel::total);

    m.def("energy_level", py::overload_cast<const PTParameters&, long>(&energy_level), py::arg("params"),
          py::arg("n"));
    m.def("pressure_level", py::overload_cast<const PTParameters&, long>(&pressure_level), py::arg("params"),
          py::arg("n"));
    m.def(
        "regime_ratio",
        [](const PTParameters& p, long n) {
            const RegimeRatio r = regime_ratio(p, n);
            return py::make_tuple(r.eta, std::string(to_string(r.label)));
        },
        py::arg("params"), py::arg("n"), "Returns (eta, label).");
    m.def(
        "spectrum_table",
        [](const PTParameters& p, long nMax) {
            py::list rows;
            for (const SpectrumRow& r : spectrum_table(p, nMax).rows) {
                py::dict d;
                d["n"] = r.n;
                d["E_fp"] = r.energyFP;
                d["E_ho"] = r.energyHO;
                d["E_total"] = r.energyTotal;
                d["P_fp"] = r.pressureFP;
                d["P_ho"] = r.pressureHO;
                d["P_total"] = r.pressureTotal;
                d["eta"] = r.regimeRatio;
                d["eta_approx"] = r.approximateRatio;
                d["regime"] = std::string(to_string(r.regimeLabel));
                rows.append(d);
            }
            return rows;
        },
        py::arg("params"), py::arg("n_max"));
    m.def("effective_exponent", &effective_exponent, py::arg("params"), py::arg("n"));

    py::class_<LimitExpansion>(m, "LimitExpansion")
        .def_readonly("order_kept", &LimitExpansion::orderKept)
        .def_readonly("n", &LimitExpansion::n)
        .def_readonly("lambda_approx", &LimitExpansion::lambdaApprox)
        .def_readonly("oscillator_quantum_approx", &LimitExpansion::oscillatorQuantumApprox)
        .def_readonly("energy_approx", &LimitExpansion::energyApprox);
    m.def("fp_limit_expansion", &fp_limit_expansion, py::arg("params"), py::arg("order"), py::arg("n") = 1);
    m.def("ho_limit_expansion", &ho_limit_expansion, py::arg("params"), py::arg("order"), py::arg("n") = 1);

    m.def("classical_momentum", &classical_momentum, py::arg("params"), py::arg("x"), py::arg("energy"));
    m.def("turning_point", &turning_point, py::arg("params"), py::arg("energy"));
    m.def(
        "action",
        [](const PTParameters& p, double energy) {
            const ActionEvaluation a = action(p, energy);
            return py::make_tuple(a.action, a.quadratureError);
        },
        py::arg("params"), py::arg("energy"), "Returns (action, quadrature error estimate).");
    m.def("action_closed", &action_closed, py::arg("params"), py::arg("energy"));
    m.def("qc_energy_closed", &qc_energy_closed, py::arg("params"), py::arg("n"));
    m.def("qc_energy_numeric", &qc_energy_numeric, py::arg("params"), py::arg("n"));

    py::class_<PerturbedEnergy>(m, "PerturbedEnergy")
        .def_readonly("harmonic_part", &PerturbedEnergy::harmonicPart)
        .def_readonly("quartic_correction", &PerturbedEnergy::quarticCorrection)
        .def_readonly("total", &PerturbedEnergy::total);
    m.def("perturbed_energy", &perturbed_energy, py::arg("params"), py::arg("n"),
          py::arg("literal_bracket") = false);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](long interiorPoints, int richardsonLevels, int levelCount) {
                 GridSpec g;
                 g.interiorPoints = interiorPoints;
                 g.richardsonLevels = richardsonLevels;
                 g.levelCount = levelCount;
                 g.validate();
                 return g;
             }),
             py::arg("interior_points") = 4000, py::arg("richardson_levels") = 2, py::arg("level_count") = 5)
        .def_readwrite("interior_points", &GridSpec::interiorPoints)
        .def_readwrite("richardson_levels", &GridSpec::richardsonLevels)
        .def_readwrite("level_count", &GridSpec::levelCount);

    m.def(
        "solve_eigenvalues",
        [](const PTParameters& p, const GridSpec& g) {
            NumericalSpectrum s;
            {
                py::gil_scoped_release release;
                s = solve_eigenvalues(p, g);
            }
            return py::make_tuple(s.eigenvalues, s.errorEstimates);
        },
        py::arg("params"), py::arg("grid") = GridSpec{},
        "Returns (eigenvalues, error estimates) for the lowest grid.level_count levels.");
    m.def(
        "numerical_pressure",
        [](const PTParameters& p, long n, double step, bool fromEigenvalues, const GridSpec& g) {
            py::gil_scoped_release release;
            return numerical_pressure(p, n, step, fromEigenvalues ? EnergySource::Eigenvalues : EnergySource::ClosedForm,
                                      g);
        },
        py::arg("params"), py::arg("n"), py::arg("relative_step") = kDefaultRelativeStep,
        py::arg("from_eigenvalues") = false, py::arg("grid") = GridSpec{});
}
