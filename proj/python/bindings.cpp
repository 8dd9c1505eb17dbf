#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "causalchain/correspondence.hpp"
#include "causalchain/errors.hpp"
#include "causalchain/diagnostics.hpp"
#include "causalchain/fermion.hpp"
#include "causalchain/game.hpp"
#include "causalchain/sweep.hpp"

namespace py = pybind11;
namespace cc = causalchain;

namespace {

py::dict outcome_dict(const cc::GameOutcome& g) {
    py::dict d;
    d["p_left"] = g.p_left;
    d["p_right"] = g.p_right;
    d["p_total"] = g.p_total;
    return d;
}

}  // namespace

PYBIND11_MODULE(causalchain, m) {
    m.doc() = "Causal-order game vs Ising-cluster chain simulator";

    m.def("two_party_game", [](double theta) { return outcome_dict(cc::two_party_game(theta)); },
          py::arg("theta"), "Game probabilities on the optimal two-party resource.");

    m.def("multi_party_game",
          [](int n_parties, double f0, double f1) {
              return outcome_dict(cc::multi_party_game(n_parties, f0, f1));
          },
          py::arg("n_parties"), py::arg("f0"), py::arg("f1"));

    m.def("classical_bound",
          [](int n_parties) {
              const auto b = cc::classical_bound(n_parties);
              return py::make_tuple(b.p_left, b.p_right, b.p_total);
          },
          py::arg("n_parties"));

    m.def("tfim_observables",
          [](int m_sites, double theta) {
              const auto g = cc::correlation_matrix(
                  cc::solve_modes(cc::build_quadratic_form({m_sites, theta})));
              const auto [m_x, c_zz] = cc::observables(g);
              py::dict d;
              d["m_x"] = m_x;
              d["c_zz"] = c_zz;
              d["string"] = cc::string_expectation(g);
              return d;
          },
          py::arg("m_sites"), py::arg("theta"),
          "Free-fermion ground-state observables of the TFIM factor.");

    m.def("k_avg_ground",
          [](double theta) {
              return cc::k_avg(cc::analytic_ground_state(theta), cc::ObservablePair::canonical());
          },
          py::arg("theta"));

    m.def("verify_eq10",
          [](double theta) {
              const auto r = cc::verify_eq10(theta);
              py::dict d;
              d["pi0"] = r.pi0_expectation;
              d["pi1"] = r.pi1_expectation;
              d["p_alice"] = r.p_alice_trace;
              d["p_bob"] = r.p_bob_trace;
              d["max_deviation"] = r.max_deviation;
              d["pass"] = r.pass;
              return d;
          },
          py::arg("theta"));

    m.def("mz_thermo", &cc::mz_thermo, py::arg("theta"));
    m.def("ostr_thermo", &cc::ostr_thermo, py::arg("theta"));
    m.def("ostr_finite",
          [](int m_sites, double theta) { return cc::ostr_finite({m_sites, theta}); },
          py::arg("m_sites"), py::arg("theta"));

    m.def("classify",
          [](int steps) {
              std::vector<double> grid;
              for (int j = 0; j < steps; ++j)
                  grid.push_back((j + 1) * 3.14159265358979323846 / 2.0 / (steps + 1));
              const auto report = cc::classify_eigenstates(grid);
              py::list out;
              for (const auto& e : report.entries) {
                  py::dict d;
                  d["state"] = e.index;
                  d["max_k_avg"] = e.max_k;
                  d["flagged"] = e.flagged;
                  out.append(d);
              }
              return out;
          },
          py::arg("steps") = 65);

    m.def("run_sweep",
          [](int n_sites, int steps, double theta_min, double theta_max,
             const std::string& backend) {
              cc::SweepConfig config;
              config.n_sites = n_sites;
              config.steps = steps;
              config.theta_min = theta_min;
              config.theta_max = theta_max;
              config.backend = backend == "dense"     ? cc::Backend::Dense
                               : backend == "fermion" ? cc::Backend::Fermion
                                                      : cc::Backend::Auto;
              py::list out;
              for (const auto& r : cc::run_sweep(config)) {
                  py::dict d;
                  d["theta"] = r.theta;
                  d["n_sites"] = r.n_sites;
                  d["m_x"] = r.m_x;
                  d["c_zz"] = r.c_zz;
                  d["p_left"] = r.p_left;
                  d["p_right"] = r.p_right;
                  d["p_total"] = r.p_total;
                  d["k_avg"] = r.k_avg;
                  d["m_z_thermo"] = r.m_z_thermo;
                  d["o_str_thermo"] = r.o_str_thermo;
                  d["o_str_finite"] = r.o_str_finite;
                  d["classical_bound"] = r.classical_bound;
                  out.append(d);
              }
              return out;
          },
          py::arg("n_sites"), py::arg("steps") = 65, py::arg("theta_min") = 0.0,
          py::arg("theta_max") = 1.5707963267948966, py::arg("backend") = "auto");

    py::register_exception<cc::validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<cc::capacity_error>(m, "CapacityError", PyExc_RuntimeError);
}
