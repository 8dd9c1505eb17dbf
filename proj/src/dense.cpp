#include "causalchain/dense.hpp"

#include <complex>
#include <cstdlib>
#include <string>

#include "causalchain/errors.hpp"

namespace causalchain {

using namespace std::complex_literals;

StateVector::StateVector(int n, Vector amplitudes) : n_qubits(n), amps(std::move(amplitudes)) {
    if (amps.size() != (1L << n_qubits))
        throw validation_error("amplitude count does not match register size");
    if (std::abs(amps.norm() - 1.0) > 1e-12)
        throw validation_error("state vector not normalized");
}

int dense_cap() {
    if (const char* env = std::getenv("DENSE_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return 12;
}

namespace {

// Act with one Pauli string on basis index `idx`; returns target index,
// accumulates the phase. Qubit q lives at bit (n-1-q).
inline long pauli_action(const PauliTerm& term, int n, long idx, std::complex<double>& phase) {
    long out = idx;
    for (const auto& f : term.factors) {
        const int bitpos = n - 1 - f.site;
        const int bit = (idx >> bitpos) & 1;
        switch (f.axis) {
            case Axis::X:
                out ^= 1L << bitpos;
                break;
            case Axis::Y:
                out ^= 1L << bitpos;
                phase *= bit ? -1.0i : 1.0i;
                break;
            case Axis::Z:
                if (bit) phase = -phase;
                break;
        }
    }
    return out;
}

}  // namespace

DenseOperator to_dense(const OperatorExpr& expr) {
    const int n = expr.register_size();
    if (n > dense_cap())
        throw capacity_error("register of " + std::to_string(n) +
                             " qubits exceeds dense cap " + std::to_string(dense_cap()));
    const long dim = 1L << n;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& term : expr.terms()) {
        for (long col = 0; col < dim; ++col) {
            std::complex<double> phase = term.coefficient;
            const long row = pauli_action(term, n, col, phase);
            m(row, col) += phase;
        }
    }
    return DenseOperator{n, std::move(m)};
}

Vector apply(const OperatorExpr& expr, const Vector& v) {
    const int n = expr.register_size();
    const long dim = 1L << n;
    if (v.size() != dim) throw validation_error("vector size mismatch");
    Vector out = Vector::Zero(dim);
    for (const auto& term : expr.terms()) {
        for (long col = 0; col < dim; ++col) {
            std::complex<double> phase = term.coefficient;
            const long row = pauli_action(term, n, col, phase);
            out(row) += phase * v(col);
        }
    }
    return out;
}

Spectrum eigensolve(const DenseOperator& op) {
    const double scale = std::max(1.0, op.mat.cwiseAbs().maxCoeff());
    if ((op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw validation_error("eigensolve requires a Hermitian operator");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.mat);
    if (solver.info() != Eigen::Success)
        throw numerical_error("dense eigensolver failed to converge");
    return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

double expectation(const StateVector& state, const OperatorExpr& op) {
    if (op.register_size() != state.n_qubits)
        throw validation_error("register size mismatch");
    const std::complex<double> val = state.amps.dot(apply(op, state.amps));
    if (std::abs(val.imag()) > 1e-12)
        throw numerical_error("expectation value has imaginary residue");
    return val.real();
}

double expectation(const StateVector& state, const DenseOperator& op) {
    if (op.n_qubits != state.n_qubits)
        throw validation_error("register size mismatch");
    const std::complex<double> val = state.amps.dot(op.mat * state.amps);
    if (std::abs(val.imag()) > 1e-12)
        throw numerical_error("expectation value has imaginary residue");
    return val.real();
}

StateVector symmetric_ground_state(const Spectrum& spectrum, const DenseOperator& symmetry,
                                   double degeneracy_tol) {
    const long dim = spectrum.eigenvalues.size();
    if (symmetry.mat.rows() != dim) throw validation_error("symmetry dimension mismatch");
    int n = 0;
    while ((1L << n) < dim) ++n;

    const double e0 = spectrum.eigenvalues(0);
    const double width = degeneracy_tol * std::max(1.0, std::abs(e0));
    Vector best;
    double best_norm = -1.0;
    for (long k = 0; k < dim && spectrum.eigenvalues(k) - e0 <= width; ++k) {
        Vector projected =
            0.5 * (spectrum.eigenvectors.col(k) + symmetry.mat * spectrum.eigenvectors.col(k));
        const double norm = projected.norm();
        if (norm > best_norm) {
            best_norm = norm;
            best = std::move(projected);
        }
    }
    if (best_norm < 1e-8)
        throw numerical_error("lowest level has no component in the +1 symmetry sector");
    return StateVector(n, best / best_norm);
}

DenseOperator reduced_density(const StateVector& state, const std::vector<int>& keep) {
    const int n = state.n_qubits;
    if (keep.empty()) throw validation_error("keep set must be nonempty");
    for (int q : keep)
        if (q < 0 || q >= n) throw validation_error("keep site out of range");
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (keep[i] == keep[j]) throw validation_error("duplicate site in keep set");

    const int k = static_cast<int>(keep.size());
    const long dim_keep = 1L << k;
    const long dim_env = 1L << (n - k);
    std::vector<int> env;
    for (int q = 0; q < n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) env.push_back(q);

    // rho_ab = sum_e psi(a,e) conj(psi(b,e)) with (kept, env) bit split.
    auto full_index = [&](long a, long e) {
        long idx = 0;
        for (int i = 0; i < k; ++i)
            if ((a >> (k - 1 - i)) & 1) idx |= 1L << (n - 1 - keep[i]);
        for (size_t i = 0; i < env.size(); ++i)
            if ((e >> (env.size() - 1 - i)) & 1) idx |= 1L << (n - 1 - env[i]);
        return idx;
    };

    Matrix rho = Matrix::Zero(dim_keep, dim_keep);
    for (long a = 0; a < dim_keep; ++a)
        for (long b = 0; b < dim_keep; ++b) {
            std::complex<double> acc = 0.0;
            for (long e = 0; e < dim_env; ++e)
                acc += state.amps(full_index(a, e)) * std::conj(state.amps(full_index(b, e)));
            rho(a, b) = acc;
        }
    return DenseOperator{k, std::move(rho)};
}

double commutator_norm(const OperatorExpr& a, const OperatorExpr& b) {
    if (a.register_size() != b.register_size())
        throw validation_error("register size mismatch");
    const Matrix ma = to_dense(a).mat;
    const Matrix mb = to_dense(b).mat;
    return (ma * mb - mb * ma).cwiseAbs().maxCoeff();
}

}  // namespace causalchain
