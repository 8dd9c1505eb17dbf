#include "causalchain/game.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <string>

#include "causalchain/errors.hpp"

namespace causalchain {

using namespace std::complex_literals;

PartyRegister PartyRegister::cyclic(int n_parties) {
    if (n_parties < 2) throw validation_error("need at least 2 parties");
    PartyRegister reg;
    reg.n_parties = n_parties;
    for (int i = 0; i < n_parties; ++i) {
        std::string name = n_parties <= 26 ? std::string(1, static_cast<char>('A' + i))
                                           : "P" + std::to_string(i);
        reg.parties.push_back(Party{name, 2 * i, 2 * i + 1});
    }
    return reg;
}

ProcessMatrix build_w_general(int n_parties, double f0, double f1, WAxes axes, int n0, int n1) {
    if (std::abs(f0) > 1.0 + 1e-12 || std::abs(f1) > 1.0 + 1e-12)
        throw validation_error("correlation weights must lie in [-1, 1]");
    auto reg = PartyRegister::cyclic(n_parties);
    if (n0 < 0) n0 = n_parties;
    if (n1 < 0) n1 = n_parties;
    const double norm = 1.0 / std::pow(2.0, n_parties);
    OperatorExpr body(reg.n_qubits());
    body.add(norm, {});
    for (int i = 0; i < n0; ++i) {
        const int j = (i + 1) % n_parties;
        body.add(norm * f0 / n0,
                 {{reg.parties[i].output_qubit, axes.alpha}, {reg.parties[j].input_qubit, axes.beta}});
    }
    for (int i = 0; i < n1; ++i) {
        const int j = (i + 1) % n_parties;
        body.add(norm * f1 / n1,
                 {{reg.parties[i].input_qubit, axes.gamma},
                  {reg.parties[j].input_qubit, axes.delta},
                  {reg.parties[j].output_qubit, axes.eta}});
    }
    return ProcessMatrix{std::move(body), std::move(reg)};
}

ProcessMatrix build_w_opt(double theta) {
    // Single cyclic term of each type: (1/4)[I + cos ZZ + sin ZXZ].
    WAxes axes{Axis::Z, Axis::Z, Axis::Z, Axis::X, Axis::Z};
    return build_w_general(2, std::cos(theta), std::sin(theta), axes, 1, 1);
}

ProcessMatrix build_w_three(double f0, double f1) {
    return build_w_general(3, f0, f1);
}

Eigen::Matrix2cd pauli_projector(Axis axis, int bit) {
    const double sgn = bit ? -1.0 : 1.0;
    Eigen::Matrix2cd p = 0.5 * Eigen::Matrix2cd::Identity();
    switch (axis) {
        case Axis::X:
            p(0, 1) += 0.5 * sgn;
            p(1, 0) += 0.5 * sgn;
            break;
        case Axis::Y:
            p(0, 1) += -0.5i * sgn;
            p(1, 0) += 0.5i * sgn;
            break;
        case Axis::Z:
            p(0, 0) += 0.5 * sgn;
            p(1, 1) += -0.5 * sgn;
            break;
    }
    return p;
}

DenseOperator local_measurement(int alpha, int beta, Axis zeta, const Party& party,
                                const PartyRegister& reg) {
    const int n = reg.n_qubits();
    if (n > dense_cap()) throw capacity_error("party register exceeds dense cap");
    const Eigen::Matrix2cd pin = pauli_projector(zeta, alpha);
    const Eigen::Matrix2cd pout = pauli_projector(Axis::Z, beta);
    const long dim = 1L << n;
    Matrix m = Matrix::Zero(dim, dim);
    auto bit_of = [n](long idx, int q) { return (idx >> (n - 1 - q)) & 1L; };
    for (long row = 0; row < dim; ++row)
        for (long col = 0; col < dim; ++col) {
            if ((row & ~((1L << (n - 1 - party.input_qubit)) | (1L << (n - 1 - party.output_qubit)))) !=
                (col & ~((1L << (n - 1 - party.input_qubit)) | (1L << (n - 1 - party.output_qubit)))))
                continue;
            m(row, col) = pin(bit_of(row, party.input_qubit), bit_of(col, party.input_qubit)) *
                          pout(bit_of(row, party.output_qubit), bit_of(col, party.output_qubit));
        }
    return DenseOperator{n, std::move(m)};
}

double outcome_probability(const ProcessMatrix& w, const std::vector<QubitEffect>& effects) {
    const int n = w.reg.n_qubits();
    std::set<int> covered;
    for (const auto& e : effects) {
        if (e.qubit < 0 || e.qubit >= n) throw validation_error("effect qubit out of range");
        if (!covered.insert(e.qubit).second)
            throw validation_error("overlapping measurement supports");
    }
    // Tr[(x) effects (x) I * W] factorizes per Pauli string of the body.
    double total = 0.0;
    for (const auto& term : w.body.terms()) {
        std::complex<double> factor = term.coefficient;
        std::set<int> term_sites;
        for (const auto& f : term.factors) term_sites.insert(f.site);
        for (const auto& e : effects) {
            if (!term_sites.count(e.qubit)) {
                factor *= e.op.trace();  // identity at this qubit
            }
        }
        for (const auto& f : term.factors) {
            const QubitEffect* eff = nullptr;
            for (const auto& e : effects)
                if (e.qubit == f.site) eff = &e;
            if (eff == nullptr) {
                factor = 0.0;  // Tr sigma = 0 on an uncovered qubit
                break;
            }
            // Tr[op * sigma] = 2 * (projector expectation - 1/2) for projectors.
            const Eigen::Matrix2cd sigma = 2.0 * pauli_projector(f.axis, 0) - Eigen::Matrix2cd::Identity();
            factor *= (eff->op * sigma).trace();
        }
        // Identity qubits not touched by any effect contribute Tr I = 2.
        int untouched = n - static_cast<int>(effects.size());
        for (const auto& f : term.factors)
            if (!covered.count(f.site)) --untouched;  // already zeroed above
        if (factor == 0.0) continue;
        total += (factor * std::pow(2.0, untouched)).real();
    }
    if (total < -1e-10 || total > 1.0 + 1e-10)
        throw numerical_error("outcome probability outside [0, 1]");
    return std::min(1.0, std::max(0.0, total));
}

namespace {

GameOutcome two_party_game_on(const ProcessMatrix& w) {
    const auto& alice = w.reg.parties[0];
    const auto& bob = w.reg.parties[1];
    // P_Alice: Bob opens a channel to his past (b'=0); average over the
    // random bits, sum over Bob's input outcome.
    double p_alice = 0.0;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int y = 0; y <= 1; ++y) {
                std::vector<QubitEffect> eff = {
                    {alice.input_qubit, pauli_projector(Axis::Z, b)},
                    {alice.output_qubit, pauli_projector(Axis::Z, a)},
                    {bob.input_qubit, pauli_projector(Axis::X, y)},
                    {bob.output_qubit, pauli_projector(Axis::Z, (y + b) % 2)},
                };
                p_alice += outcome_probability(w, eff);
            }
    p_alice /= 4.0;
    // P_Bob: forward channel (b'=1); Bob's output state is free.
    double p_bob = 0.0;
    for (int a = 0; a <= 1; ++a)
        for (int x = 0; x <= 1; ++x) {
            std::vector<QubitEffect> eff = {
                {alice.input_qubit, pauli_projector(Axis::Z, x)},
                {alice.output_qubit, pauli_projector(Axis::Z, a)},
                {bob.input_qubit, pauli_projector(Axis::Z, a)},
                {bob.output_qubit, 0.5 * Eigen::Matrix2cd::Identity()},
            };
            p_bob += outcome_probability(w, eff);
        }
    p_bob /= 2.0;
    return GameOutcome{p_alice, p_bob, 0.5 * (p_alice + p_bob)};
}

// One cyclic strategy row of the N-party game: guesser g reads its input
// along zeta and tries to reproduce the bit of its left (b'=0) or right
// (b'=1) neighbor; everyone else stays in the causal-order slot states.
double row_probability(const ProcessMatrix& w, int bprime, int g) {
    const int np = w.reg.n_parties;
    const int tgt = bprime == 0 ? (g - 1 + np) % np : (g + 1) % np;
    const Axis zeta = bprime == 0 ? Axis::Z : Axis::X;
    double acc = 0.0;
    for (int bit = 0; bit <= 1; ++bit) {  // matched guess == target bit
        std::vector<QubitEffect> eff;
        for (int i = 0; i < np; ++i) {
            int a_in = 0, a_out = 0;
            if (i == g) {
                a_in = bit;
                a_out = bprime == 0 ? 0 : bit;
            }
            if (i == tgt) a_out = bit;
            eff.push_back({w.reg.parties[i].input_qubit, pauli_projector(zeta, a_in)});
            eff.push_back({w.reg.parties[i].output_qubit, pauli_projector(Axis::Z, a_out)});
        }
        acc += outcome_probability(w, eff);
    }
    return std::pow(2.0, np - 1) * acc / 2.0;
}

}  // namespace

GameOutcome two_party_game(double theta) {
    return two_party_game_on(build_w_opt(theta));
}

GameOutcome multi_party_game(int n_parties, double f0, double f1) {
    if (n_parties == 2) {
        WAxes axes{Axis::Z, Axis::Z, Axis::Z, Axis::X, Axis::Z};
        return two_party_game_on(build_w_general(2, f0, f1, axes, 1, 1));
    }
    const auto w = build_w_general(n_parties, f0, f1);
    double p_left = 0.0, p_right = 0.0;
    for (int g = 0; g < n_parties; ++g) {
        p_left += row_probability(w, 0, g);
        p_right += row_probability(w, 1, g);
    }
    p_left /= n_parties;
    p_right /= n_parties;
    return GameOutcome{p_left, p_right, 0.5 * (p_left + p_right)};
}

ClassicalBound classical_bound(int n_parties) {
    if (n_parties < 2) throw validation_error("need at least 2 parties");
    const double n = n_parties;
    return ClassicalBound{1.0 - 1.0 / (2.0 * n), 0.5 + 1.0 / (2.0 * n), 0.75};
}

ValidityReport validate_process(const ProcessMatrix& w) {
    const auto dense = to_dense(w.body);
    const double herm = (dense.mat - dense.mat.adjoint()).cwiseAbs().maxCoeff();
    const double trace_dev =
        std::abs(dense.mat.trace().real() - std::pow(2.0, w.reg.n_parties));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (dense.mat + dense.mat.adjoint().eval()));
    return ValidityReport{herm, trace_dev, solver.eigenvalues().minCoeff()};
}

}  // namespace causalchain
