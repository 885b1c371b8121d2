#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "defdirac/algebra.hpp"
#include "defdirac/closed_form.hpp"
#include "defdirac/radial.hpp"
#include "defdirac/verify.hpp"

namespace py = pybind11;
using namespace defdirac;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dirac-Kepler spectra in a deformed-algebra space with position-dependent mass";

    py::register_exception<SupercriticalCoupling>(m, "SupercriticalCoupling");
    py::register_exception<NonPositivePrincipal>(m, "NonPositivePrincipal");
    py::register_exception<DeformationRequired>(m, "DeformationRequired");
    py::register_exception<ComplexRoots>(m, "ComplexRoots");
    py::register_exception<MassParameterTooLarge>(m, "MassParameterTooLarge");
    py::register_exception<BracketingFailure>(m, "BracketingFailure");

    py::enum_<Branch>(m, "Branch")
        .value("plus", Branch::plus)
        .value("minus", Branch::minus);

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init([](double hbar, double mass, double c, double e2) {
                 PhysicalConstants pc{hbar, mass, c, e2};
                 pc.validate();
                 return pc;
             }),
             py::arg("hbar") = 1.0, py::arg("m") = 1.0, py::arg("c") = 1.0, py::arg("e2") = 1.0)
        .def_readwrite("hbar", &PhysicalConstants::hbar)
        .def_readwrite("m", &PhysicalConstants::m)
        .def_readwrite("c", &PhysicalConstants::c)
        .def_readwrite("e2", &PhysicalConstants::e2)
        .def("alpha", &PhysicalConstants::alpha)
        .def("mc2", &PhysicalConstants::mc2);

    py::class_<DeformationParams>(m, "DeformationParams")
        .def_static("with_a", &DeformationParams::with_a, py::arg("nu"), py::arg("a"),
                    py::arg("consts"))
        .def_static("with_abar", &DeformationParams::with_abar, py::arg("nu"), py::arg("abar"),
                    py::arg("consts"))
        .def_readonly("nu", &DeformationParams::nu)
        .def_readonly("a", &DeformationParams::a)
        .def_readonly("abar", &DeformationParams::abar);

    py::class_<Couplings>(m, "Couplings")
        .def_readonly("alpha", &Couplings::alpha)
        .def_readonly("mca_over_hbar", &Couplings::mca_over_hbar)
        .def_readonly("alpha_bar_sq", &Couplings::alpha_bar_sq);

    py::class_<QuantumState>(m, "QuantumState")
        .def_readonly("k", &QuantumState::k)
        .def_readonly("n_r", &QuantumState::n_r)
        .def_readonly("branch", &QuantumState::branch)
        .def_readonly("lam", &QuantumState::lambda)
        .def_readonly("l_star", &QuantumState::l_star)
        .def_readonly("n", &QuantumState::n);

    m.def("derive_couplings", &derive_couplings);
    m.def("lambda_eigenvalue", &lambda_eigenvalue);
    m.def("effective_orbital", &effective_orbital);
    m.def("principal_quantum_number", &principal_quantum_number);
    m.def("bound_state_condition", &bound_state_condition);
    m.def("make_state", &make_state, py::arg("couplings"), py::arg("k"), py::arg("n_r"),
          py::arg("branch"));

    py::class_<SpectrumRecord>(m, "SpectrumRecord")
        .def_readonly("k", &SpectrumRecord::k)
        .def_readonly("n_r", &SpectrumRecord::n_r)
        .def_readonly("branch", &SpectrumRecord::branch)
        .def_readonly("lam", &SpectrumRecord::lambda)
        .def_readonly("l_star", &SpectrumRecord::l_star)
        .def_readonly("n", &SpectrumRecord::n)
        .def_readonly("e_closed", &SpectrumRecord::e_closed)
        .def_readonly("e_radical", &SpectrumRecord::e_radical)
        .def_readonly("e_low", &SpectrumRecord::e_low)
        .def_readonly("e_high", &SpectrumRecord::e_high)
        .def_readonly("quadratic_residual", &SpectrumRecord::quadratic_residual)
        .def_readonly("radical_residual", &SpectrumRecord::radical_residual)
        .def_readonly("bound_ok", &SpectrumRecord::bound_ok)
        .def_readonly("level_exists", &SpectrumRecord::level_exists);

    m.def("energy_exact", &energy_exact);
    m.def("energy_radical", &energy_radical);
    m.def("quadratic_residual", &quadratic_residual);
    m.def("energy_nu_zero", &energy_nu_zero);
    m.def("energy_nonrelativistic", [](double mass, double hbar, double e2, double nu, double abar,
                                       int k, double n) {
        const NonRelativisticLevel lv = energy_nonrelativistic(mass, hbar, e2, nu, abar, k, n);
        return py::make_tuple(lv.e_prime, lv.bounded);
    });
    m.def("energy_qt", [](double mass, double hbar, double e2, double nu, int l, double n) {
        const NonRelativisticLevel lv = energy_qt(mass, hbar, e2, nu, l, n);
        return py::make_tuple(lv.e_prime, lv.bounded);
    });
    m.def("qt_reconciliation", &qt_reconciliation);
    m.def("relativistic_correction", [](const PhysicalConstants& consts, double nu, double abar,
                                        int k, double n) {
        const CorrectionBreakdown cb = relativistic_correction(consts, nu, abar, k, n);
        return py::make_tuple(cb.delta1, cb.delta2, cb.delta3, cb.total);
    });
    m.def("eckart_level", [](double A, double B, double nu, int n_r) {
        const EckartLevel lv = eckart_level(EckartParams{A, B, nu}, n_r);
        return py::make_tuple(lv.epsilon, lv.exists);
    });

    m.def("map_r_to_x", &map_r_to_x);
    m.def("map_x_to_r", &map_x_to_r);

    m.def("fd_levels", [](double A, double B, double nu, double x_max, int n_points, int count) {
        const RadialGrid grid = build_grid(-1.0, nu, n_points, x_max);
        const PotentialSamples pot = eckart_potential(EckartParams{A, B, nu}, grid);
        std::vector<double> vals;
        for (const EigenPair& ep : fd_eigen(pot, count)) vals.push_back(ep.value);
        return to_array(vals);
    }, "lowest finite-difference eigenvalues of the mapped hyperbolic well");

    py::class_<SelfConsistentResult>(m, "SelfConsistentResult")
        .def_readonly("energy", &SelfConsistentResult::energy)
        .def_readonly("residual_g", &SelfConsistentResult::residual_g)
        .def_readonly("node_count", &SelfConsistentResult::node_count);

    m.def("self_consistent_energy",
          [](const QuantumState& st, const PhysicalConstants& consts,
             const DeformationParams& deform, int n_points) {
              SolverOptions opts;
              opts.n_points = n_points;
              return self_consistent_energy(st, consts, deform, opts);
          },
          py::arg("state"), py::arg("consts"), py::arg("deform"), py::arg("n_points") = 4001);

    m.def("export_wavefunction",
          [](const QuantumState& st, const PhysicalConstants& consts,
             const DeformationParams& deform, int n_points) {
              SolverOptions opts;
              opts.n_points = n_points;
              const WavefunctionSamples ws = export_wavefunction(st, consts, deform, opts);
              py::dict d;
              d["x"] = to_array(ws.x);
              d["r"] = to_array(ws.r);
              d["chi"] = to_array(ws.chi);
              d["energy"] = ws.energy;
              d["nodes"] = ws.nodes;
              return d;
          },
          py::arg("state"), py::arg("consts"), py::arg("deform"), py::arg("n_points") = 4001);

    m.def("lambda_matrix_eigenvalues",
          [](const PhysicalConstants& consts, double C1, double C2, int k) {
              const LambdaMatrix lm = lambda_matrix_numeric(consts, C1, C2, k);
              return py::make_tuple(lm.eig_plus, lm.eig_minus);
          });
    m.def("deformed_commutator_residual", &deformed_commutator_residual, py::arg("nu"),
          py::arg("x_max"), py::arg("n_points"), py::arg("hbar") = 1.0);

    m.def("verify_suite", [](const std::string& name) {
        SuiteReport rep;
        if (name == "eckart") rep = verify_eckart();
        else if (name == "susy") rep = verify_susy();
        else if (name == "limits") rep = verify_limits();
        else if (name == "algebra") rep = verify_algebra();
        else if (name == "corrections") rep = verify_corrections();
        else throw py::value_error("unknown suite: " + name);
        py::list checks;
        for (const Check& c : rep.checks) {
            py::dict d;
            d["name"] = c.name;
            d["measured"] = c.measured;
            d["bound"] = c.bound;
            d["pass"] = c.pass;
            d["note"] = c.note;
            checks.append(d);
        }
        return checks;
    });
}
