#pragma once

#include <utility>

#include "causalchain/dense.hpp"
#include "causalchain/pauli.hpp"

namespace causalchain {

/// Periodic Ising-cluster chain, N even.
struct ChainSpec {
    int n_sites;
    double theta;
};

/// Periodic transverse-field Ising chain of length M = N/2.
struct TfimSpec {
    int m_sites;
    double theta;
};

/// N=4 chain: -2 cos(t) (Z0Z2 + Z1Z3) - sin(t) sum_i Z_i X_{i+1} Z_{i+2}.
OperatorExpr build_game_hamiltonian(double theta);

/// N>=6 chain: -cos(t) sum Z_i Z_{i+2} - sin(t) sum Z_i X_{i+1} Z_{i+2}.
OperatorExpr build_chain_hamiltonian(const ChainSpec& spec);

/// U = prod_i CZ_{i,i+1} (periodic). Diagonal, U = U^dag, U^2 = I.
DenseOperator build_cz_circuit(int n_sites);

/// The CZ circuit maps the chain onto two decoupled TFIMs of length N/2,
/// one per sublattice.
std::pair<TfimSpec, TfimSpec> split_to_tfim(const ChainSpec& spec);

/// -cos(t) sum Z_i Z_{i+1} - sin(t) sum X_i, periodic. For M=2 the two
/// wraparound bonds merge into one doubled term.
OperatorExpr build_tfim(const TfimSpec& spec);

}  // namespace causalchain
