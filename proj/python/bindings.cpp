#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "cgmn/dense_oracle.hpp"
#include "cgmn/experiments.hpp"
#include "cgmn/helmholtz.hpp"
#include "cgmn/solver.hpp"
#include "cgmn/symbol.hpp"

namespace py = pybind11;
using cgmn::HelmholtzProblem;
using Complex = std::complex<double>;

namespace {

std::vector<std::vector<double>> dense_rows(const cgmn::SparseRowMatrix& A) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(A.dimension()),
                                          std::vector<double>(static_cast<std::size_t>(A.dimension()), 0.0));
    for (int i = 0; i < A.dimension(); ++i)
        for (const auto& e : A.row(i))
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.col)] = e.value;
    return rows;
}

cgmn::SolverConfig make_config(double tol, int max_iter, bool record_true,
                               const std::string& stop_on) {
    cgmn::SolverConfig config;
    config.tolerance = tol;
    config.max_iterations = max_iter;
    config.record_true_residual = record_true;
    if (stop_on == "true")
        config.stop_on = cgmn::StopOn::TrueResidual;
    else if (stop_on == "preconditioned")
        config.stop_on = cgmn::StopOn::PreconditionedResidual;
    else
        throw std::invalid_argument("stop_on must be 'preconditioned' or 'true'");
    return config;
}

template <typename Scalar>
void bind_problem(py::module_& m, const char* name) {
    py::class_<HelmholtzProblem<Scalar>>(m, name)
        .def_property(
            "rhs", [](const HelmholtzProblem<Scalar>& p) { return p.rhs; },
            [](HelmholtzProblem<Scalar>& p, std::vector<Scalar> rhs) {
                if (static_cast<int>(rhs.size()) != p.dimension())
                    throw std::invalid_argument("rhs size does not match problem dimension");
                p.rhs = std::move(rhs);
            })
        .def_property_readonly("dimension", &HelmholtzProblem<Scalar>::dimension)
        .def_readonly("nx", &HelmholtzProblem<Scalar>::nx)
        .def_readonly("ny", &HelmholtzProblem<Scalar>::ny)
        .def_readonly("spacing", &HelmholtzProblem<Scalar>::spacing)
        .def_property_readonly("row_norms_sq",
                               [](const HelmholtzProblem<Scalar>& p) {
                                   return p.matrix.row_norms_sq();
                               })
        .def("matrix_dense",
             [](const HelmholtzProblem<Scalar>& p) { return dense_rows(p.matrix); },
             "Dense copy of the system matrix (rows as lists); small problems only.");
}

template <typename Scalar>
void bind_solve_ops(py::module_& m) {
    m.def("double_sweep",
          [](const HelmholtzProblem<Scalar>& p, std::vector<Scalar> u,
             const std::vector<Scalar>& rhs, const cgmn::SweepPlan& plan) {
              cgmn::double_sweep(u, p.matrix, rhs, plan);
              return u;
          },
          py::arg("problem"), py::arg("u"), py::arg("rhs"), py::arg("plan"),
          "One symmetric Kaczmarz double sweep: returns Q u + R rhs.");
    m.def("apply_I_minus_Q",
          [](const HelmholtzProblem<Scalar>& p, const std::vector<Scalar>& v,
             const cgmn::SweepPlan& plan) { return cgmn::apply_I_minus_Q(v, p.matrix, plan); },
          py::arg("problem"), py::arg("v"), py::arg("plan"));
    m.def("apply_R",
          [](const HelmholtzProblem<Scalar>& p, const std::vector<Scalar>& s,
             const cgmn::SweepPlan& plan) { return cgmn::apply_R(s, p.matrix, plan); },
          py::arg("problem"), py::arg("rhs"), py::arg("plan"));
    m.def("cgmn_solve",
          [](const HelmholtzProblem<Scalar>& p, const cgmn::SweepPlan& plan, double tol,
             int max_iter, bool record_true, const std::string& stop_on,
             std::vector<Scalar> x0) {
              return cgmn::cgmn_solve(p, plan, make_config(tol, max_iter, record_true, stop_on),
                                      std::move(x0));
          },
          py::arg("problem"), py::arg("plan"), py::arg("tol") = 1e-6, py::arg("max_iter") = 0,
          py::arg("record_true_residual") = false, py::arg("stop_on") = "preconditioned",
          py::arg("initial_guess") = std::vector<Scalar>{},
          "CG on (I - Q) u = R s; returns (solution, history).");
    m.def("richardson_solve",
          [](const HelmholtzProblem<Scalar>& p, const cgmn::SweepPlan& plan, double tol,
             int max_iter, std::vector<Scalar> x0) {
              cgmn::SolverConfig config;
              config.tolerance = tol;
              config.max_iterations = max_iter;
              return cgmn::richardson_solve(p, plan, config, std::move(x0));
          },
          py::arg("problem"), py::arg("plan"), py::arg("tol") = 1e-6, py::arg("max_iter") = 0,
          py::arg("initial_guess") = std::vector<Scalar>{});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "CGMN solver for finite-difference Helmholtz problems: symmetric Kaczmarz "
              "sweeps accelerated by CG, with Fourier-symbol relaxation tuning.";
    m.attr("__version__") = cgmn::experiments::kLibraryVersion;

    py::class_<cgmn::SweepPlan>(m, "SweepPlan")
        .def(py::init<std::vector<int>, std::vector<double>>(), py::arg("order"),
             py::arg("omega"))
        .def_static("uniform", &cgmn::SweepPlan::uniform, py::arg("n"), py::arg("omega"))
        .def_static("per_row", &cgmn::SweepPlan::per_row, py::arg("omega"))
        .def_readonly("order", &cgmn::SweepPlan::order)
        .def_readonly("omega", &cgmn::SweepPlan::omega);

    py::enum_<cgmn::SolveStatus>(m, "SolveStatus")
        .value("Converged", cgmn::SolveStatus::Converged)
        .value("MaxIterations", cgmn::SolveStatus::MaxIterations)
        .value("Breakdown", cgmn::SolveStatus::Breakdown);

    py::class_<cgmn::ConvergenceHistory>(m, "ConvergenceHistory")
        .def_readonly("preconditioned_residuals", &cgmn::ConvergenceHistory::preconditioned_residuals)
        .def_readonly("true_residuals", &cgmn::ConvergenceHistory::true_residuals)
        .def_readonly("iterations", &cgmn::ConvergenceHistory::iterations)
        .def_readonly("converged", &cgmn::ConvergenceHistory::converged)
        .def_readonly("status", &cgmn::ConvergenceHistory::status);

    bind_problem<double>(m, "RealProblem");
    bind_problem<Complex>(m, "ComplexProblem");

    m.def("build_helmholtz_1d", &cgmn::build_helmholtz_1d<double>, py::arg("k"),
          py::arg("n_interior"),
          "Tridiagonal 1D Helmholtz system with eliminated Dirichlet boundaries.");
    m.def("analytic_eigenpair_1d",
          [](int n, double k, int n_interior) {
              return cgmn::analytic_eigenpair_1d(n, k, cgmn::Grid1D(n_interior));
          },
          py::arg("n"), py::arg("k"), py::arg("n_interior"));
    m.def("build_helmholtz_2d",
          [](const std::vector<double>& medium, int nx, int ny, double h) {
              return cgmn::build_helmholtz_2d<Complex>(cgmn::Medium(medium),
                                                       cgmn::Grid2D(nx, ny, h));
          },
          py::arg("medium"), py::arg("nx"), py::arg("ny"), py::arg("spacing"),
          "5-point 2D Helmholtz system; medium is row-major with x fastest.");
    m.def("scattered_field_rhs",
          [](const std::vector<double>& medium, double k0, int nx, int ny, double h) {
              return cgmn::scattered_field_rhs(cgmn::Medium(medium), k0, cgmn::Grid2D(nx, ny, h));
          },
          py::arg("medium"), py::arg("background_k"), py::arg("nx"), py::arg("ny"),
          py::arg("spacing"));

    bind_solve_ops<double>(m);
    bind_solve_ops<Complex>(m);

    // Fourier symbol analysis
    m.def("amplitude",
          [](double theta, double omega, double ng, double h) {
              return cgmn::amplitude(theta, omega, cgmn::SymbolParams(ng, omega, h));
          },
          py::arg("theta"), py::arg("omega"), py::arg("ng"), py::arg("spacing") = 1.0 / 101.0,
          "Error-mode amplitude a(theta, omega); depends only on (theta, omega, n_g).");
    m.def("condition_proxy",
          [](double omega, double ng, int theta_count, double h) {
              const auto thetas = cgmn::default_theta_grid(theta_count);
              return cgmn::condition_proxy(omega, cgmn::SymbolParams(ng, omega, h), thetas);
          },
          py::arg("omega"), py::arg("ng"), py::arg("theta_count") = 1024,
          py::arg("spacing") = 1.0 / 101.0);
    m.def("optimal_omega", &cgmn::optimal_omega, py::arg("ng"));

    py::class_<cgmn::OmegaCurve::Sample>(m, "OmegaCurveSample")
        .def_readonly("ng", &cgmn::OmegaCurve::Sample::n_g)
        .def_readonly("optimal_omega", &cgmn::OmegaCurve::Sample::optimal_omega)
        .def_readonly("condition_proxy_at_optimum",
                      &cgmn::OmegaCurve::Sample::condition_proxy_at_optimum);
    py::class_<cgmn::OmegaCurve>(m, "OmegaCurve")
        .def_static("build_default", &cgmn::OmegaCurve::build_default)
        .def_static("build",
                    [](const std::vector<double>& nodes) { return cgmn::OmegaCurve::build(nodes); },
                    py::arg("ng_values"))
        .def("omega_at", &cgmn::OmegaCurve::omega_at, py::arg("ng"))
        .def_property_readonly("samples", &cgmn::OmegaCurve::samples);

    // Dense oracle + experiments
    m.def("verify_oracle",
          [](const std::vector<int>& sizes, const std::vector<double>& omegas, double tol) {
              const auto report = cgmn::experiments::verify_oracle(sizes, omegas, tol);
              py::dict out;
              out["passed"] = report.passed;
              out["max_g_vs_h"] = report.max_g_vs_h;
              out["max_q_vs_h"] = report.max_q_vs_h;
              out["max_intertwining"] = report.max_intertwining;
              out["max_rhs_relation"] = report.max_rhs_relation;
              return out;
          },
          py::arg("sizes") = std::vector<int>{5, 8, 16, 32},
          py::arg("omegas") = std::vector<double>{0.5, 1.0, 1.5, 1.9}, py::arg("tol") = 1e-12,
          "Dense SSOR/Kaczmarz identity suite on 1D Helmholtz matrices.");

    py::class_<cgmn::experiments::Cell1D>(m, "Cell1D")
        .def_readonly("k", &cgmn::experiments::Cell1D::k)
        .def_readonly("n_interior", &cgmn::experiments::Cell1D::n_interior)
        .def_readonly("ng_local", &cgmn::experiments::Cell1D::local_ng)
        .def_readonly("omega", &cgmn::experiments::Cell1D::omega)
        .def_readonly("iterations", &cgmn::experiments::Cell1D::iterations)
        .def_readonly("converged", &cgmn::experiments::Cell1D::converged)
        .def_readonly("predicted_optimal_omega",
                      &cgmn::experiments::Cell1D::predicted_optimal_omega);
    m.def("run_fixed_ng_1d",
          [](const std::vector<double>& k_values, double ng, std::vector<double> omegas,
             double tol) {
              if (omegas.empty()) omegas = cgmn::experiments::default_omega_grid();
              return cgmn::experiments::run_fixed_ng_1d(k_values, ng, omegas, tol).cells;
          },
          py::arg("k_values"), py::arg("ng") = 10.0,
          py::arg("omega_grid") = std::vector<double>{}, py::arg("tol") = 1e-6);
    m.def("run_fixed_h_1d",
          [](const std::vector<double>& k_values, double ng, std::vector<double> omegas,
             double tol) {
              if (omegas.empty()) omegas = cgmn::experiments::default_omega_grid();
              return cgmn::experiments::run_fixed_h_1d(k_values, ng, omegas, tol).cells;
          },
          py::arg("k_values"), py::arg("ng") = 10.0,
          py::arg("omega_grid") = std::vector<double>{}, py::arg("tol") = 1e-6);
}
