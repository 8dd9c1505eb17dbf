#include <cmath>

#include <doctest.h>

#include "causalchain/correspondence.hpp"
#include "causalchain/dense.hpp"
#include "causalchain/errors.hpp"
#include "causalchain/game.hpp"
#include "causalchain/lattice.hpp"

using namespace causalchain;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("analytic ground state endpoints") {
    // theta = 0: product of Bell pairs on the two sublattices.
    const auto ferro = analytic_ground_state(0.0);
    Vector expect = Vector::Zero(16);
    expect(0b0000) = 0.5;
    expect(0b0101) = 0.5;
    expect(0b1010) = 0.5;
    expect(0b1111) = 0.5;
    CHECK((ferro.amps - expect).cwiseAbs().maxCoeff() <= 1e-12);

    // theta = pi/2: the cluster state, checked as the +1 eigenstate of all
    // four stabilizers Z X Z.
    const auto cluster = analytic_ground_state(kPi / 2.0);
    for (int i = 0; i < 4; ++i) {
        OperatorExpr stab(4);
        stab.add(1.0, {{i, Axis::Z}, {(i + 1) % 4, Axis::X}, {(i + 2) % 4, Axis::Z}});
        CHECK(expectation(cluster, stab) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("analytic ground state diagonalizes the chain") {
    for (double theta : {0.3, 0.7, kPi / 4.0, 1.3}) {
        const auto gs = analytic_ground_state(theta);
        const auto spectrum = eigensolve(to_dense(build_game_hamiltonian(theta)));
        const double overlap =
            std::abs(spectrum.eigenvectors.col(0).dot(gs.amps));
        CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(expectation(gs, build_game_hamiltonian(theta)) ==
              doctest::Approx(spectrum.eigenvalues(0)).epsilon(1e-12));
    }
}

TEST_CASE("projector pairs are projectors with a consistent expectation") {
    const auto gs = analytic_ground_state(0.9);
    double first_pi0 = 0.0, first_pi1 = 0.0;
    for (int shift = 0; shift < 4; ++shift) {
        const auto pair = ObservablePair::variant(shift);
        for (const auto* p : {&pair.pi0, &pair.pi1}) {
            const auto m = to_dense(*p).mat;
            CHECK((m * m - m).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        }
        const double e0 = expectation(gs, pair.pi0);
        const double e1 = expectation(gs, pair.pi1);
        if (shift == 0) {
            first_pi0 = e0;
            first_pi1 = e1;
        } else {
            CHECK(std::abs(e0 - first_pi0) <= 1e-10);
            CHECK(std::abs(e1 - first_pi1) <= 1e-10);
        }
    }
}

TEST_CASE("correspondence identity between expectations and game traces") {
    for (int j = 0; j < 64; ++j) {
        const auto report = verify_eq10((j + 1) * kPi / 2.0 / 65.0);
        CHECK(report.pass);
        CHECK(report.max_deviation <= 1e-10);
    }
    const auto r0 = verify_eq10(1e-14);
    CHECK(r0.pi0_expectation == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r0.pi1_expectation == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("k_avg values") {
    const auto pair = ObservablePair::canonical();
    CHECK(k_avg(analytic_ground_state(kPi / 4.0), pair) ==
          doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-10));
    CHECK(k_avg(analytic_ground_state(0.0), pair) == doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("most-excited state mirrors the ground state at theta + pi") {
    const double theta = 0.6;
    const auto spec_lo = eigensolve(to_dense(build_game_hamiltonian(theta)));
    const auto spec_hi = eigensolve(to_dense(build_game_hamiltonian(theta + kPi)));
    // Spectral mirror as multisets.
    for (int k = 0; k < 16; ++k)
        CHECK(std::abs(spec_lo.eigenvalues(k) + spec_hi.eigenvalues(15 - k)) <= 1e-10);

    // K_avg of the most-excited state equals the theta + pi ground value.
    StateVector most_excited(4, spec_lo.eigenvectors.col(15));
    const double k = k_avg(most_excited, ObservablePair::canonical());
    const double expected = 0.25 * (2.0 + std::cos(theta + kPi) + std::sin(theta + kPi));
    CHECK(k == doctest::Approx(expected).epsilon(1e-10));

    // rho134 of the excited state matches the ground state at theta + pi.
    const auto rho_ex = reduced_density(most_excited, {0, 2, 3});
    const auto rho_g = reduced_density(analytic_ground_state(theta + kPi), {0, 2, 3});
    CHECK((rho_ex.mat - rho_g.mat).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("three-body reduced density closed form") {
    for (double theta : {1e-13, 0.3, kPi / 3.0, kPi / 2.0, 1.2}) {
        const auto report = verify_rho134(theta);
        CHECK(report.pass);
        CHECK(report.zz_correlator == doctest::Approx(std::cos(theta)).epsilon(1e-10));
        CHECK(report.zzx_correlator == doctest::Approx(std::sin(theta)).epsilon(1e-10));
    }
}

TEST_CASE("strategy catalog rows") {
    for (int j = 0; j < 16; ++j) {
        const double theta = (j + 0.5) / 16.0 * kPi / 2.0;
        const auto rows = table1_catalog(theta);
        REQUIRE(rows.size() == 3);
        for (const auto& row : rows) {
            CHECK(row.pass);
            CHECK(row.max_deviation <= 1e-10);
        }
        CHECK(rows[1].p_bob_expected == 1.0);
        CHECK(rows[2].p_bob_expected == 0.5);
    }
    // The string-strategy total stays below the classical bound everywhere.
    const auto rows = table1_catalog(kPi / 4.0);
    CHECK(rows[2].p_alice_trace == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(0.5 * (rows[2].p_alice_trace + rows[2].p_bob_trace) ==
          doctest::Approx(0.625).epsilon(1e-10));
}

TEST_CASE("eigenstate classification flags exactly the extremal states") {
    const auto report = classify_eigenstates(default_classification_grid());
    REQUIRE(report.entries.size() == 16);
    int flagged = 0;
    for (const auto& e : report.entries)
        if (e.flagged) ++flagged;
    CHECK(flagged == 2);
    CHECK(report.entries.front().flagged);
    CHECK(report.entries.back().flagged);
    CHECK(report.entries.front().max_k ==
          doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-6));
    CHECK(report.entries.back().max_k ==
          doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-6));
    for (int i = 1; i < 15; ++i) CHECK(report.entries[i].max_k <= 0.75 + 1e-9);

    CHECK_THROWS_AS(classify_eigenstates({0.0}), validation_error);
    CHECK_THROWS_AS(classify_eigenstates({}), validation_error);
}
