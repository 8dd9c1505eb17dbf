#include "causalchain/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "causalchain/correspondence.hpp"
#include "causalchain/diagnostics.hpp"
#include "causalchain/errors.hpp"
#include "causalchain/fermion.hpp"
#include "causalchain/game.hpp"
#include "causalchain/lattice.hpp"

namespace causalchain {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ChainObservables {
    double m_x;    // cluster correlator <Z X Z> = TFIM-factor <X>
    double c_zz;   // Ising correlator <Z Z>
    double k_avg;  // NaN when only the fermion route is available
};

ChainObservables dense_observables(int n, double theta) {
    const auto h = n == 4 ? build_game_hamiltonian(theta)
                          : build_chain_hamiltonian(ChainSpec{n, theta});
    const auto spectrum = eigensolve(to_dense(h));
    StateVector gs(n, spectrum.eigenvectors.col(0));

    OperatorExpr zxz(n), zz(n), pi1zz(n);
    zxz.add(1.0, {{0, Axis::Z}, {1, Axis::X}, {2, Axis::Z}});
    zz.add(1.0, {{0, Axis::Z}, {2 % n, Axis::Z}});
    pi1zz.add(1.0, {{1, Axis::Z}, {3 % n, Axis::Z}});
    const double m_x = expectation(gs, zxz);
    const double c_zz = expectation(gs, zz);
    const double k = 0.25 * (2.0 + m_x + expectation(gs, pi1zz));
    return ChainObservables{m_x, c_zz, k};
}

ChainObservables fermion_observables(int m, double theta) {
    const auto g = correlation_matrix(solve_modes(build_quadratic_form(TfimSpec{m, theta})));
    const auto [m_x, c_zz] = observables(g);
    return ChainObservables{m_x, c_zz, std::numeric_limits<double>::quiet_NaN()};
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    const int n = config.n_sites;
    if (n < 4 || n % 2 != 0)
        throw validation_error("sweep requires even n_sites >= 4");
    if (config.steps < 2) throw validation_error("sweep requires steps >= 2");
    if (!(config.theta_min < config.theta_max))
        throw validation_error("sweep requires theta_min < theta_max");

    Backend backend = config.backend;
    if (backend == Backend::Auto)
        backend = n <= dense_cap() ? Backend::Dense : Backend::Fermion;
    if (backend == Backend::Dense && n > dense_cap())
        throw capacity_error("dense backend rejected beyond the dense cap");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SweepRecord> records;
    records.reserve(config.steps);
    for (int j = 0; j < config.steps; ++j) {
        const double theta =
            config.theta_min + j * (config.theta_max - config.theta_min) / (config.steps - 1);
        const ChainObservables obs = backend == Backend::Dense
                                         ? dense_observables(n, theta)
                                         : fermion_observables(n / 2, theta);
        const auto game = multi_party_game(std::max(2, n / 2), obs.c_zz, obs.m_x);

        SweepRecord rec;
        rec.theta = theta;
        rec.n_sites = n;
        rec.m_x = obs.m_x;
        rec.c_zz = obs.c_zz;
        rec.p_left = game.p_left;
        rec.p_right = game.p_right;
        rec.p_total = game.p_total;
        rec.k_avg = std::isnan(obs.k_avg) ? game.p_total : obs.k_avg;
        const bool in_range = theta >= 0.0 && theta <= kPi / 2.0;
        rec.m_z_thermo = in_range ? mz_thermo(theta) : nan;
        rec.o_str_thermo = in_range ? ostr_thermo(theta) : nan;
        rec.o_str_finite = ostr_finite(TfimSpec{n / 2, theta});
        rec.classical_bound = 0.75;
        records.push_back(rec);
    }
    return records;
}

namespace {

const char* kFields[] = {"theta",      "n_sites",     "m_x",          "c_zz",
                         "p_left",     "p_right",     "p_total",      "k_avg",
                         "m_z_thermo", "o_str_thermo", "o_str_finite", "classical_bound"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    for (size_t i = 0; i < std::size(kFields); ++i)
        out << (i ? "," : "") << kFields[i];
    out << "\n";
    for (const auto& r : records) {
        out << fmt(r.theta) << "," << r.n_sites << "," << fmt(r.m_x) << "," << fmt(r.c_zz)
            << "," << fmt(r.p_left) << "," << fmt(r.p_right) << "," << fmt(r.p_total) << ","
            << fmt(r.k_avg) << "," << fmt(r.m_z_thermo) << "," << fmt(r.o_str_thermo) << ","
            << fmt(r.o_str_finite) << "," << fmt(r.classical_bound) << "\n";
    }
}

void write_json(std::ostream& out, const std::vector<SweepRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json o;
        o["theta"] = r.theta;
        o["n_sites"] = r.n_sites;
        o["m_x"] = r.m_x;
        o["c_zz"] = r.c_zz;
        o["p_left"] = r.p_left;
        o["p_right"] = r.p_right;
        o["p_total"] = r.p_total;
        o["k_avg"] = r.k_avg;
        o["m_z_thermo"] = r.m_z_thermo;
        o["o_str_thermo"] = r.o_str_thermo;
        o["o_str_finite"] = r.o_str_finite;
        o["classical_bound"] = r.classical_bound;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << "\n";
}

}  // namespace causalchain
