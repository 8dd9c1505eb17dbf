#pragma once

#include <Eigen/Dense>
#include <vector>

#include "causalchain/pauli.hpp"

namespace causalchain {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operator on an n-qubit register. Qubit q maps to bit (n-1-q)
/// of the basis index, so |q0 q1 ... q_{n-1}> reads big-endian.
struct DenseOperator {
    int n_qubits = 0;
    Matrix mat;
};

/// Normalized pure state; construction checks the norm.
struct StateVector {
    StateVector(int n_qubits, Vector amplitudes);

    int n_qubits;
    Vector amps;
};

/// Full eigendecomposition, eigenvalues ascending, orthonormal columns.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;
};

/// Dense register cap: DENSE_CAP env override, default 12 qubits.
int dense_cap();

DenseOperator to_dense(const OperatorExpr& expr);

/// Apply without materializing the matrix; O(terms * 2^n).
Vector apply(const OperatorExpr& expr, const Vector& v);

Spectrum eigensolve(const DenseOperator& op);

double expectation(const StateVector& state, const OperatorExpr& op);
double expectation(const StateVector& state, const DenseOperator& op);

/// Ground state resolved to the +1 eigenspace of a conserved involution.
/// When the lowest level is (quasi-)degenerate an eigensolver returns an
/// arbitrary rotation within the level; this projects every vector in the
/// lowest quasi-degenerate block (relative width `degeneracy_tol`) with
/// (I + symmetry)/2 and keeps the dominant projected direction.
StateVector symmetric_ground_state(const Spectrum& spectrum, const DenseOperator& symmetry,
                                   double degeneracy_tol = 1e-9);

/// Partial trace onto the kept sites (result ordered as `keep`).
DenseOperator reduced_density(const StateVector& state, const std::vector<int>& keep);

/// Max-norm of the dense commutator [a, b].
double commutator_norm(const OperatorExpr& a, const OperatorExpr& b);

}  // namespace causalchain
