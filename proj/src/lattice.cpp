#include "causalchain/lattice.hpp"

#include <cmath>
#include <string>

#include "causalchain/errors.hpp"

namespace causalchain {

OperatorExpr build_game_hamiltonian(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    OperatorExpr h(4);
    for (int i = 0; i < 2; ++i)
        h.add(-2.0 * c, {{i, Axis::Z}, {i + 2, Axis::Z}});
    for (int i = 0; i < 4; ++i)
        h.add(-s, {{i, Axis::Z}, {(i + 1) % 4, Axis::X}, {(i + 2) % 4, Axis::Z}});
    return h;
}

OperatorExpr build_chain_hamiltonian(const ChainSpec& spec) {
    const int n = spec.n_sites;
    if (n < 6 || n % 2 != 0)
        throw validation_error("chain requires even n_sites >= 6, got " + std::to_string(n));
    const double c = std::cos(spec.theta), s = std::sin(spec.theta);
    OperatorExpr h(n);
    for (int i = 0; i < n; ++i) {
        h.add(-c, {{i, Axis::Z}, {(i + 2) % n, Axis::Z}});
        h.add(-s, {{i, Axis::Z}, {(i + 1) % n, Axis::X}, {(i + 2) % n, Axis::Z}});
    }
    return h;
}

DenseOperator build_cz_circuit(int n_sites) {
    if (n_sites > dense_cap())
        throw capacity_error("CZ circuit register exceeds dense cap");
    if (n_sites < 2) throw validation_error("CZ circuit needs >= 2 sites");
    const long dim = 1L << n_sites;
    Matrix u = Matrix::Zero(dim, dim);
    for (long idx = 0; idx < dim; ++idx) {
        int phase = 1;
        for (int i = 0; i < n_sites; ++i) {
            const int bi = (idx >> (n_sites - 1 - i)) & 1;
            const int bj = (idx >> (n_sites - 1 - (i + 1) % n_sites)) & 1;
            if (bi && bj) phase = -phase;
        }
        u(idx, idx) = phase;
    }
    return DenseOperator{n_sites, std::move(u)};
}

std::pair<TfimSpec, TfimSpec> split_to_tfim(const ChainSpec& spec) {
    if (spec.n_sites < 4 || spec.n_sites % 2 != 0)
        throw validation_error("chain requires even n_sites >= 4");
    TfimSpec factor{spec.n_sites / 2, spec.theta};
    return {factor, factor};
}

OperatorExpr build_tfim(const TfimSpec& spec) {
    const int m = spec.m_sites;
    if (m < 2) throw validation_error("TFIM requires m_sites >= 2");
    const double c = std::cos(spec.theta), s = std::sin(spec.theta);
    OperatorExpr h(m);
    for (int i = 0; i < m; ++i) {
        h.add(-c, {{i, Axis::Z}, {(i + 1) % m, Axis::Z}});
        h.add(-s, {{i, Axis::X}});
    }
    return h;
}

}  // namespace causalchain
