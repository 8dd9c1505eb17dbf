#include <cmath>
#include <random>

#include <doctest.h>

#include "causalchain/errors.hpp"
#include "causalchain/game.hpp"

using namespace causalchain;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("party register layout") {
    const auto reg = PartyRegister::cyclic(3);
    REQUIRE(reg.parties.size() == 3);
    CHECK(reg.parties[0].name == "A");
    CHECK(reg.parties[2].input_qubit == 4);
    CHECK(reg.parties[2].output_qubit == 5);
    CHECK(reg.n_qubits() == 6);
    CHECK_THROWS_AS(PartyRegister::cyclic(1), validation_error);
}

TEST_CASE("two-party resource: trace and spectrum") {
    for (int j = 0; j < 32; ++j) {
        const double theta = j * kPi / 2.0 / 31.0;
        const auto v = validate_process(build_w_opt(theta));
        CHECK(v.hermiticity_residual <= 1e-12);
        CHECK(v.trace_deviation <= 1e-10);
        CHECK(v.min_eigenvalue >= -1e-10);
    }
    // The two correlation terms anticommute, so the spectrum is {0, 1/2}
    // with multiplicity 8 each for every theta.
    const auto dense = to_dense(build_w_opt(0.3).body);
    const auto s = eigensolve(dense);
    for (int k = 0; k < 8; ++k) {
        CHECK(std::abs(s.eigenvalues(k)) <= 1e-10);
        CHECK(std::abs(s.eigenvalues(k + 8) - 0.5) <= 1e-10);
    }
}

TEST_CASE("general builder reproduces the special cases") {
    const auto w3 = build_w_three(0.4, -0.2);
    const auto w3g = build_w_general(3, 0.4, -0.2);
    CHECK((to_dense(w3.body).mat - to_dense(w3g.body).mat).cwiseAbs().maxCoeff() <= 1e-14);

    const double theta = 0.8;
    WAxes axes{Axis::Z, Axis::Z, Axis::Z, Axis::X, Axis::Z};
    const auto w2 = build_w_general(2, std::cos(theta), std::sin(theta), axes, 1, 1);
    CHECK((to_dense(w2.body).mat - to_dense(build_w_opt(theta).body).mat)
              .cwiseAbs()
              .maxCoeff() <= 1e-14);

    CHECK_THROWS_AS(build_w_three(1.5, 0.0), validation_error);
}

TEST_CASE("maximally mixed process is uniform and valid") {
    const auto w = build_w_three(0.0, 0.0);
    const auto s = eigensolve(to_dense(w.body));
    for (int k = 0; k < s.eigenvalues.size(); ++k)
        CHECK(s.eigenvalues(k) == doctest::Approx(1.0 / 8.0));  // 2^N / 2^{2N}
}

TEST_CASE("three-party resource validity across the circle") {
    double min_eig = 1.0;
    for (int j = 0; j < 32; ++j) {
        const double theta = j * kPi / 2.0 / 31.0;
        min_eig = std::min(
            min_eig, validate_process(build_w_three(std::cos(theta), std::sin(theta)))
                         .min_eigenvalue);
    }
    CHECK(min_eig >= -1e-10);
}

TEST_CASE("corrupted process matrix is flagged") {
    auto w = build_w_three(1.0, 0.0);
    OperatorExpr corrupt(w.reg.n_qubits());
    corrupt.add(2.0, {{1, Axis::Z}, {2, Axis::Z}});
    w.body = w.body + corrupt;
    CHECK(validate_process(w).min_eigenvalue < -1e-6);
}

TEST_CASE("local measurement projectors") {
    const auto reg = PartyRegister::cyclic(2);
    const auto m = local_measurement(0, 0, Axis::Z, reg.parties[0], reg);
    // |0><0| (x) |0><0| on qubits 0,1; identity on 2,3.
    CHECK(m.mat(0, 0).real() == doctest::Approx(1.0));
    CHECK(m.mat.trace().real() == doctest::Approx(4.0));

    const auto minus = pauli_projector(Axis::X, 1);
    CHECK(minus(0, 1).real() == doctest::Approx(-0.5));
    CHECK(minus.trace().real() == doctest::Approx(1.0));

    // Completeness: summing over both bits on both qubits gives identity.
    Matrix sum = Matrix::Zero(16, 16);
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) sum += local_measurement(a, b, Axis::X, reg.parties[0], reg).mat;
    CHECK((sum - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("outcome probability validation and uniform case") {
    const auto w = build_w_general(2, 0.0, 0.0, {}, 1, 1);
    std::vector<QubitEffect> overlapping = {{0, pauli_projector(Axis::Z, 0)},
                                            {0, pauli_projector(Axis::Z, 1)}};
    CHECK_THROWS_AS(outcome_probability(w, overlapping), validation_error);

    // Maximally mixed process (body I/2^N): any full product of rank-1
    // projectors has probability 1/4, so the two-bit marginal sums to 1.
    double p = 0.0;
    for (int y = 0; y <= 1; ++y)
        for (int b = 0; b <= 1; ++b)
            p += outcome_probability(w, {{0, pauli_projector(Axis::Z, 0)},
                                         {1, pauli_projector(Axis::Z, 0)},
                                         {2, pauli_projector(Axis::X, y)},
                                         {3, pauli_projector(Axis::Z, b)}});
    CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-party game matches the closed forms on a 64-point grid") {
    for (int j = 0; j <= 63; ++j) {
        const double theta = j * kPi / 2.0 / 63.0;
        const auto g = two_party_game(theta);
        CHECK(std::abs(g.p_left - 0.5 * (1.0 + std::sin(theta))) <= 1e-12);
        CHECK(std::abs(g.p_right - 0.5 * (1.0 + std::cos(theta))) <= 1e-12);
        CHECK(std::abs(g.p_total - 0.5 * (g.p_left + g.p_right)) <= 1e-12);
        // cos/sin exchange symmetry
        CHECK(std::abs(g.p_total - two_party_game(kPi / 2.0 - theta).p_total) <= 1e-12);
    }
    CHECK(two_party_game(kPi / 4.0).p_total ==
          doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-12));
    CHECK(two_party_game(kPi).p_total == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("probability completeness for a fixed strategy") {
    const auto w = build_w_opt(0.7);
    double total = 0.0;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            total += outcome_probability(w, {{0, pauli_projector(Axis::Z, x)},
                                             {1, pauli_projector(Axis::Z, 0)},
                                             {2, pauli_projector(Axis::X, y)},
                                             {3, pauli_projector(Axis::Z, (y + 1) % 2)}});
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Bob's outcome is independent of his output state") {
    const auto w = build_w_opt(0.9);
    const double expected = 0.5 * (1.0 + std::cos(0.9));
    std::mt19937 rng(3);
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
                p_bob += outcome_probability(w, {{0, pauli_projector(Axis::Z, x)},
                                                 {1, pauli_projector(Axis::Z, a)},
                                                 {2, pauli_projector(Axis::Z, a)},
                                                 {3, rho}});
        CHECK(std::abs(p_bob / 2.0 - expected) <= 1e-12);
    }
}

TEST_CASE("classical bound geometry of the quantum value") {
    for (int j = 0; j <= 32; ++j) {
        const double theta = j * kPi / 2.0 / 32.0;
        const double p = two_party_game(theta).p_total;
        if (j == 0 || j == 32)
            CHECK(std::abs(p - 0.75) <= 1e-12);
        else
            CHECK(p > 0.75);
    }
}

TEST_CASE("classical bounds") {
    const auto b2 = classical_bound(2);
    CHECK(b2.p_left == doctest::Approx(0.75));
    CHECK(b2.p_right == doctest::Approx(0.75));
    CHECK(b2.p_total == 0.75);
    const auto b3 = classical_bound(3);
    CHECK(b3.p_left == doctest::Approx(5.0 / 6.0));
    CHECK(b3.p_right == doctest::Approx(2.0 / 3.0));
    const auto b10 = classical_bound(10);
    CHECK(b10.p_left == doctest::Approx(0.95));
    CHECK(b10.p_right == doctest::Approx(0.55));
    CHECK(b10.p_total == 0.75);
    CHECK_THROWS_AS(classical_bound(1), validation_error);
}

TEST_CASE("multi-party game reproduces the per-row closed forms") {
    for (int n : {3, 4, 5}) {
        const double f0 = 0.62, f1 = 0.31;
        const auto g = multi_party_game(n, f0, f1);
        CHECK(std::abs(g.p_left - 0.5 * (1.0 + f0)) <= 1e-10);
        CHECK(std::abs(g.p_right - 0.5 * (1.0 + f1)) <= 1e-10);
        CHECK(std::abs(g.p_total - 0.25 * (2.0 + f0 + f1)) <= 1e-12);
    }
    // trivial cases
    const auto perfect_left = multi_party_game(3, 1.0, 0.0);
    CHECK(perfect_left.p_left == doctest::Approx(1.0));
    CHECK(perfect_left.p_right == doctest::Approx(0.5));
    CHECK(perfect_left.p_total == doctest::Approx(0.75));

    // two-party delegation agrees with the dedicated path
    const double theta = 1.1;
    const auto direct = two_party_game(theta);
    const auto general = multi_party_game(2, std::cos(theta), std::sin(theta));
    CHECK(std::abs(direct.p_left - general.p_left) <= 1e-12);
    CHECK(std::abs(direct.p_right - general.p_right) <= 1e-12);
}
