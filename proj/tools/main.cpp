#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causalchain/correspondence.hpp"
#include "causalchain/diagnostics.hpp"
#include "causalchain/errors.hpp"
#include "causalchain/fermion.hpp"
#include "causalchain/game.hpp"
#include "causalchain/lattice.hpp"
#include "causalchain/sweep.hpp"

namespace cc = causalchain;

namespace {

constexpr double kPi = 3.14159265358979323846;

void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw cc::validation_error("cannot open output path: " + path);
    writer(out);
}

int cmd_sweep(const cc::SweepConfig& config) {
    const auto records = cc::run_sweep(config);
    emit(config.output_path, [&](std::ostream& out) {
        if (config.format == cc::OutputFormat::Csv)
            cc::write_csv(out, records);
        else
            cc::write_json(out, records);
    });
    return 0;
}

struct CheckRunner {
    int failures = 0;

    void run(const std::string& name, const std::function<bool(std::string&)>& check) {
        std::string detail;
        bool ok = false;
        try {
            ok = check(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            std::cout << "PASS " << name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        }
    }
};

bool check_dense_vs_fermion(int m_max, std::string& detail) {
    double worst = 0.0;
    for (int m = 2; m <= m_max; ++m) {
        for (int j = 0; j < 16; ++j) {
            const double theta = (j + 0.5) / 16.0 * kPi / 2.0;
            const cc::TfimSpec spec{m, theta};
            const auto g = cc::correlation_matrix(cc::solve_modes(cc::build_quadratic_form(spec)));
            const auto [m_x, c_zz] = cc::observables(g);
            const double str = cc::string_expectation(g);
            const double e0 =
                cc::ground_energy(cc::solve_modes(cc::build_quadratic_form(spec)));

            const auto spectrum = cc::eigensolve(cc::to_dense(cc::build_tfim(spec)));
            // Resolve the lowest (possibly quasi-degenerate) level to the
            // even spin-flip sector matched by the fermion solution.
            cc::OperatorExpr parity(m);
            std::vector<cc::PauliFactor> flip;
            for (int i = 0; i < m; ++i) flip.push_back({i, cc::Axis::X});
            parity.add(1.0, flip);
            const cc::StateVector gs = cc::symmetric_ground_state(spectrum, cc::to_dense(parity));
            cc::OperatorExpr x0(m), zz(m), strop(m);
            x0.add(1.0, {{0, cc::Axis::X}});
            zz.add(1.0, {{0, cc::Axis::Z}, {1, cc::Axis::Z}});
            std::vector<cc::PauliFactor> fs;
            for (int i = 0; i < m / 2; ++i) fs.push_back({i, cc::Axis::X});
            strop.add(1.0, fs);
            worst = std::max({worst, std::abs(m_x - cc::expectation(gs, x0)),
                              std::abs(c_zz - cc::expectation(gs, zz)),
                              std::abs(str - cc::expectation(gs, strop)),
                              std::abs(e0 - spectrum.eigenvalues(0))});
        }
    }
    detail = "max deviation " + std::to_string(worst);
    return worst <= 1e-8;
}

int cmd_verify(const std::string& level) {
    const bool full = level == "full";
    CheckRunner r;

    r.run("eq10-correspondence-64pt", [&](std::string& detail) {
        double worst = 0.0;
        for (int j = 0; j < 64; ++j) {
            const auto rep = cc::verify_eq10((j + 1) * kPi / 2.0 / 65.0);
            worst = std::max(worst, rep.max_deviation);
        }
        detail = "max deviation " + std::to_string(worst);
        return worst <= 1e-10;
    });
    r.run("eq10-variants", [&](std::string&) {
        for (int shift = 0; shift < 4; ++shift)
            if (!cc::verify_eq10(0.7, cc::ObservablePair::variant(shift)).pass) return false;
        return true;
    });
    r.run("rho134-closed-form-16pt", [&](std::string&) {
        for (int j = 0; j < 16; ++j)
            if (!cc::verify_rho134((j + 0.5) / 16.0 * kPi / 2.0).pass) return false;
        return true;
    });
    r.run("strategy-catalog-16pt", [&](std::string& detail) {
        double worst = 0.0;
        for (int j = 0; j < 16; ++j)
            for (const auto& row : cc::table1_catalog((j + 0.5) / 16.0 * kPi / 2.0))
                worst = std::max(worst, row.max_deviation);
        detail = "max deviation " + std::to_string(worst);
        return worst <= 1e-10;
    });
    r.run("bound-geometry-65pt", [&](std::string&) {
        for (int j = 0; j <= 64; ++j) {
            const double theta = j * kPi / 2.0 / 64.0;
            const auto g = cc::two_party_game(theta);
            if (j == 0 || j == 64) {
                if (std::abs(g.p_total - 0.75) > 1e-12) return false;
            } else if (g.p_total <= 0.75) {
                return false;
            }
            const auto mirrored = cc::two_party_game(kPi / 2.0 - theta);
            if (std::abs(g.p_total - mirrored.p_total) > 1e-12) return false;
        }
        return true;
    });
    r.run("rho-b2-independence", [&](std::string&) {
        const auto w = cc::build_w_opt(0.9);
        const double expected = 0.5 * (1.0 + std::cos(0.9));
        std::mt19937 rng(7);
        std::normal_distribution<double> dist;
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::Matrix2cd g;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) g(i, j) = std::complex<double>(dist(rng), dist(rng));
            Eigen::Matrix2cd rho = g * g.adjoint();
            rho /= rho.trace();
            double p_bob = 0.0;
            for (int a = 0; a <= 1; ++a)
                for (int x = 0; x <= 1; ++x)
                    p_bob += cc::outcome_probability(
                        w, {{0, cc::pauli_projector(cc::Axis::Z, x)},
                            {1, cc::pauli_projector(cc::Axis::Z, a)},
                            {2, cc::pauli_projector(cc::Axis::Z, a)},
                            {3, rho}});
            if (std::abs(p_bob / 2.0 - expected) > 1e-12) return false;
        }
        return true;
    });
    r.run("cz-mapping", [&](std::string& detail) {
        double worst = 0.0;
        for (int n : {4, 6, 8}) {
            const auto u = cc::build_cz_circuit(n).mat;
            for (int j = 0; j < 4; ++j) {
                const double theta = (j + 0.5) / 4.0 * kPi / 2.0;
                const auto h = n == 4 ? cc::build_game_hamiltonian(theta)
                                      : cc::build_chain_hamiltonian({n, theta});
                const auto tf = cc::build_tfim({n / 2, theta});
                cc::OperatorExpr split(n);
                for (const auto& t : tf.terms()) {
                    std::vector<cc::PauliFactor> odd, even;
                    for (const auto& f : t.factors) {
                        odd.push_back({(2 * f.site) % n, f.axis});
                        even.push_back({(2 * f.site + 1) % n, f.axis});
                    }
                    split.add(t.coefficient, odd);
                    split.add(t.coefficient, even);
                }
                worst = std::max(worst, (u * cc::to_dense(h).mat * u.adjoint() -
                                         cc::to_dense(split).mat)
                                            .cwiseAbs()
                                            .maxCoeff());
            }
        }
        detail = "max deviation " + std::to_string(worst);
        return worst <= 1e-12;
    });
    r.run(full ? "fermion-oracle-m2-10" : "fermion-oracle-m2-6", [&](std::string& detail) {
        return check_dense_vs_fermion(full ? 10 : 6, detail);
    });
    r.run("self-duality", [&](std::string&) {
        for (int m : {8, 50}) {
            for (double theta : {0.3, kPi / 4.0, 1.1}) {
                const auto g1 = cc::correlation_matrix(
                    cc::solve_modes(cc::build_quadratic_form({m, theta})));
                const auto g2 = cc::correlation_matrix(
                    cc::solve_modes(cc::build_quadratic_form({m, kPi / 2.0 - theta})));
                if (std::abs(cc::observables(g1).first - cc::observables(g2).second) > 1e-9)
                    return false;
            }
        }
        return true;
    });
    r.run("process-validity", [&](std::string& detail) {
        double min_eig = 1.0;
        for (int j = 0; j < 32; ++j) {
            const double theta = j * kPi / 2.0 / 31.0;
            min_eig = std::min(min_eig, cc::validate_process(cc::build_w_opt(theta)).min_eigenvalue);
            min_eig = std::min(min_eig,
                               cc::validate_process(
                                   cc::build_w_three(std::cos(theta), std::sin(theta)))
                                   .min_eigenvalue);
        }
        detail = "min eigenvalue " + std::to_string(min_eig);
        return min_eig >= -1e-10;
    });
    if (full) {
        r.run("eigenstate-classification", [&](std::string&) {
            const auto report = cc::classify_eigenstates(cc::default_classification_grid());
            int flagged = 0;
            for (const auto& e : report.entries)
                if (e.flagged) ++flagged;
            return flagged == 2 && report.entries.front().flagged &&
                   report.entries.back().flagged;
        });
    }

    std::cout << (r.failures == 0 ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
    return r.failures == 0 ? 0 : 1;
}

int cmd_classify(int steps, const std::string& output) {
    std::vector<double> grid;
    for (int j = 0; j < steps; ++j) grid.push_back((j + 1) * kPi / 2.0 / (steps + 1));
    const auto report = cc::classify_eigenstates(grid);
    emit(output, [&](std::ostream& out) {
        out << "state,max_k_avg,flagged\n";
        for (const auto& e : report.entries) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.15g", e.max_k);
            out << e.index << "," << buf << "," << (e.flagged ? 1 : 0) << "\n";
        }
    });
    return 0;
}

int cmd_game(int parties, double theta) {
    cc::GameOutcome outcome;
    double f0 = std::cos(theta), f1 = std::sin(theta);
    if (parties == 2) {
        outcome = cc::two_party_game(theta);
    } else {
        // f0, f1 from the ground state of the matching chain (TFIM factor
        // of length = parties).
        const auto g = cc::correlation_matrix(
            cc::solve_modes(cc::build_quadratic_form({parties, theta})));
        std::tie(f1, f0) = cc::observables(g);  // m_x -> f1, c_zz -> f0
        outcome = cc::multi_party_game(parties, f0, f1);
    }
    const auto bound = cc::classical_bound(parties);
    std::cout << "parties        " << parties << "\n"
              << "theta          " << theta << "\n"
              << "f0, f1         " << f0 << ", " << f1 << "\n"
              << "p_left         " << outcome.p_left << "\n"
              << "p_right        " << outcome.p_right << "\n"
              << "p_total        " << outcome.p_total << "\n"
              << "classical      " << bound.p_total << "\n"
              << (outcome.p_total > bound.p_total + 1e-12 ? "VIOLATION" : "no violation")
              << "\n";
    if (2 * parties <= cc::dense_cap()) {
        const auto w = parties == 2 ? cc::build_w_opt(theta)
                                    : cc::build_w_general(parties, f0, f1);
        const auto v = cc::validate_process(w);
        std::cout << "w trace dev    " << v.trace_deviation << "\n"
                  << "w min eig      " << v.min_eigenvalue << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Causal-order game vs Ising-cluster chain simulator"};
    app.require_subcommand(1);

    cc::SweepConfig config;
    std::string backend = "auto", format = "csv", level = "quick", output;
    bool theta_over_pi = false;
    int classify_steps = 65, parties = 2;
    double game_theta = kPi / 4.0;
    bool have_theta_max = false;

    auto* sweep = app.add_subcommand("sweep", "Emit theta-sweep records");
    sweep->add_option("--n", config.n_sites, "Number of chain sites (even)");
    sweep->add_option("--steps", config.steps, "Grid points");
    sweep->add_option("--theta-min", config.theta_min, "Grid start (radians)");
    sweep->add_option("--theta-max", config.theta_max, "Grid end (radians)")
        ->each([&](const std::string&) { have_theta_max = true; });
    sweep->add_flag("--theta-over-pi", theta_over_pi, "Interpret theta bounds as fractions of pi");
    sweep->add_option("--backend", backend, "dense|fermion|auto");
    sweep->add_option("--format", format, "csv|json");
    sweep->add_option("--output,-o", config.output_path, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run the correspondence check suites");
    verify->add_option("--level", level, "quick|full");

    auto* classify = app.add_subcommand("classify", "Classify the 4-site eigenstates");
    classify->add_option("--steps", classify_steps, "Theta grid points");
    classify->add_option("--output,-o", output, "Output path (default stdout)");

    auto* game = app.add_subcommand("game", "Evaluate the causal-order game");
    game->add_option("--parties", parties, "Number of parties");
    game->add_option("--theta", game_theta, "Coupling angle (radians)")->required();
    game->add_flag("--theta-over-pi", theta_over_pi, "Interpret theta as a fraction of pi");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            if (theta_over_pi) {
                config.theta_min *= kPi;
                config.theta_max = have_theta_max ? config.theta_max * kPi : kPi / 2.0;
            }
            if (backend == "dense")
                config.backend = cc::Backend::Dense;
            else if (backend == "fermion")
                config.backend = cc::Backend::Fermion;
            else if (backend == "auto")
                config.backend = cc::Backend::Auto;
            else
                throw cc::validation_error("unknown backend: " + backend);
            if (format == "csv")
                config.format = cc::OutputFormat::Csv;
            else if (format == "json")
                config.format = cc::OutputFormat::Json;
            else
                throw cc::validation_error("unknown format: " + format);
            return cmd_sweep(config);
        }
        if (verify->parsed()) {
            if (level != "quick" && level != "full")
                throw cc::validation_error("unknown level: " + level);
            return cmd_verify(level);
        }
        if (classify->parsed()) return cmd_classify(classify_steps, output);
        if (game->parsed()) return cmd_game(parties, theta_over_pi ? game_theta * kPi : game_theta);
    } catch (const cc::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cc::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
