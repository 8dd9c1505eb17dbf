#pragma once

#include <string>
#include <vector>

#include "causalchain/dense.hpp"
#include "causalchain/pauli.hpp"

namespace causalchain {

/// Party i owns input qubit 2i and output qubit 2i+1 of the 2N-qubit
/// register; names run A, B, C, ...
struct Party {
    std::string name;
    int input_qubit;
    int output_qubit;
};

struct PartyRegister {
    static PartyRegister cyclic(int n_parties);

    int n_parties = 0;
    std::vector<Party> parties;

    int n_qubits() const { return 2 * n_parties; }
};

/// Process matrix as a Pauli-sum body on the party register.
struct ProcessMatrix {
    OperatorExpr body;
    PartyRegister reg;
};

struct ValidityReport {
    double hermiticity_residual;
    double trace_deviation;  // from 2^N
    double min_eigenvalue;
};

struct GameOutcome {
    double p_left;   // P_Alice for two parties
    double p_right;  // P_Bob for two parties
    double p_total;
};

struct ClassicalBound {
    double p_left;
    double p_right;
    double p_total;
};

/// Axis pattern (alpha, beta, gamma, delta, eta) of the general W:
/// f0 terms sigma_alpha^{O_i} sigma_beta^{I_{i+1}},
/// f1 terms sigma_gamma^{I_i} sigma_delta^{I_{i+1}} sigma_eta^{O_{i+1}}.
struct WAxes {
    Axis alpha = Axis::Z;
    Axis beta = Axis::Z;
    Axis gamma = Axis::X;
    Axis delta = Axis::X;
    Axis eta = Axis::Z;
};

/// Two-party resource (1/4)[I + cos(t) Z^{A2}Z^{B1} + sin(t) Z^{A1}X^{B1}Z^{B2}].
ProcessMatrix build_w_opt(double theta);

/// Three-party W with cyclic two- and three-body terms weighted f0/3, f1/3.
ProcessMatrix build_w_three(double f0, double f1);

/// General cyclic N-party form; n0/n1 are the term-count normalizations
/// (default: one per cyclic term).
ProcessMatrix build_w_general(int n_parties, double f0, double f1, WAxes axes = {},
                              int n0 = -1, int n1 = -1);

/// (I + (-1)^bit sigma_axis)/2 as a 2x2 matrix.
Eigen::Matrix2cd pauli_projector(Axis axis, int bit);

/// One local effect operator on a single qubit (rank-1 projector or any
/// unit-trace state for a free output).
struct QubitEffect {
    int qubit;
    Eigen::Matrix2cd op;
};

/// Input projector (zeta, alpha) tensor output projector (Z, beta) on the
/// party's two qubits, identity elsewhere, as a dense operator.
DenseOperator local_measurement(int alpha, int beta, Axis zeta, const Party& party,
                                const PartyRegister& reg);

/// Tr[(tensor of effects, identity on uncovered qubits) * W].
double outcome_probability(const ProcessMatrix& w, const std::vector<QubitEffect>& effects);

/// Two-party game on build_w_opt(theta), probabilities evaluated as traces.
GameOutcome two_party_game(double theta);

/// N-party game on build_w_general(n, f0, f1); every cyclic strategy row is
/// evaluated as a trace and averaged. n_parties = 2 delegates to the
/// two-party strategies with the (f0, f1) resource.
GameOutcome multi_party_game(int n_parties, double f0, double f1);

ClassicalBound classical_bound(int n_parties);

ValidityReport validate_process(const ProcessMatrix& w);

}  // namespace causalchain
