#include "causalchain/fermion.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "causalchain/errors.hpp"

namespace causalchain {

QuadraticForm build_quadratic_form(const TfimSpec& spec) {
    const int m = spec.m_sites;
    if (m < 2) throw validation_error("quadratic form requires m_sites >= 2");
    const double c = std::cos(spec.theta), s = std::sin(spec.theta);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    a.diagonal().setConstant(-2.0 * s);
    // Additive per-bond stencil; the wraparound bond carries the flipped
    // (antiperiodic) sign when M is even and the bulk sign when M is odd,
    // which selects the fermion sector hosting the true spin ground state.
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        const double sigma = (i == m - 1 && m % 2 == 0) ? -1.0 : 1.0;
        a(i, j) += -c * sigma;
        a(j, i) += -c * sigma;
        b(i, j) += -c * sigma;
        b(j, i) += +c * sigma;
    }
    return QuadraticForm{m, std::move(a), std::move(b)};
}

ModeDecomposition solve_modes(const QuadraticForm& q) {
    const int m = q.m_sites;
    if ((q.a - q.a.transpose()).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, q.a.cwiseAbs().maxCoeff()))
        throw validation_error("A matrix must be symmetric");
    if ((q.b + q.b.transpose()).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, q.b.cwiseAbs().maxCoeff()))
        throw validation_error("B matrix must be antisymmetric");

    // (A - B)^T = A + B, so the SVD (A - B) = U S V^T simultaneously
    // diagonalizes (A + B)(A - B) with eigenvectors V and eigenvalues S^2,
    // and the consistently-paired left vectors U satisfy the mode relation
    // lam_k * u_k = (A - B) v_k exactly. Working on (A - B) directly keeps
    // full relative accuracy for near-zero modes, where forming the squared
    // matrix and dividing by lam would lose half the digits.
    const Eigen::MatrixXd amb = q.a - q.b;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(amb, Eigen::ComputeFullU | Eigen::ComputeFullV);

    // Singular values come out descending; store modes ascending.
    Eigen::VectorXd lambdas(m);
    Eigen::MatrixXd psi(m, m), phi(m, m);
    for (int k = 0; k < m; ++k) {
        const int src = m - 1 - k;
        lambdas(k) = svd.singularValues()(src);
        psi.row(k) = svd.matrixV().col(src).transpose();
        phi.row(k) = svd.matrixU().col(src).transpose();
    }
    return ModeDecomposition{std::move(lambdas), std::move(psi), std::move(phi)};
}

CorrelationMatrix correlation_matrix(const ModeDecomposition& modes) {
    return CorrelationMatrix{modes.psi.transpose() * modes.phi};
}

double ground_energy(const ModeDecomposition& modes) {
    return -0.5 * modes.lambdas.sum();
}

std::pair<double, double> observables(const CorrelationMatrix& g) {
    return {-g.g(0, 0), -g.g(0, 1)};
}

double string_expectation(const CorrelationMatrix& g) {
    const int m = static_cast<int>(g.g.rows());
    const int r = m / 2;
    const double det = g.g.topLeftCorner(r, r).determinant();
    return (r % 2 == 0) ? det : -det;
}

}  // namespace causalchain
