#pragma once

#include <Eigen/Dense>

#include "causalchain/lattice.hpp"

namespace causalchain {

/// Quadratic fermion form of the TFIM: A symmetric, B antisymmetric.
struct QuadraticForm {
    int m_sites = 0;
    Eigen::MatrixXd a;
    Eigen::MatrixXd b;
};

/// Mode solution: Lambda_k >= 0 ascending; rows of psi/phi are the mode
/// vectors, both orthonormal.
struct ModeDecomposition {
    Eigen::VectorXd lambdas;
    Eigen::MatrixXd psi;
    Eigen::MatrixXd phi;
};

/// G = psi^T phi; single-site and nearest-neighbor observables read off
/// its entries, string expectations are determinants of its blocks.
struct CorrelationMatrix {
    Eigen::MatrixXd g;
};

QuadraticForm build_quadratic_form(const TfimSpec& spec);

ModeDecomposition solve_modes(const QuadraticForm& q);

CorrelationMatrix correlation_matrix(const ModeDecomposition& modes);

/// Ground energy -1/2 sum_k Lambda_k.
double ground_energy(const ModeDecomposition& modes);

/// (m_x, c_zz) = (<X_0>, <Z_0 Z_1>) of the spin ground state.
std::pair<double, double> observables(const CorrelationMatrix& g);

/// <prod_{i<r} X_i> with r = floor(M/2): (-1)^r det of the leading
/// r x r block of G.
double string_expectation(const CorrelationMatrix& g);

}  // namespace causalchain
