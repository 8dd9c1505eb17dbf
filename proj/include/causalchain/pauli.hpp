#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

namespace causalchain {

enum class Axis : char { X = 'X', Y = 'Y', Z = 'Z' };

/// One Pauli factor acting on a single site of the register.
struct PauliFactor {
    int site;
    Axis axis;
};

/// coefficient * product of single-site Paulis (identity elsewhere).
/// Factors are kept sorted by site; sites are distinct.
struct PauliTerm {
    double coefficient = 0.0;
    std::vector<PauliFactor> factors;
};

/// A real-weighted sum of Pauli strings on an n-qubit register.
/// Terms with identical factor sets are merged on construction and
/// zero-coefficient terms dropped, so the stored form is canonical.
class OperatorExpr {
public:
    explicit OperatorExpr(int register_size);
    OperatorExpr(int register_size, std::vector<PauliTerm> terms);

    int register_size() const { return n_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    /// Append coefficient * Pauli string; re-canonicalizes.
    OperatorExpr& add(double coefficient, std::initializer_list<PauliFactor> factors);
    OperatorExpr& add(double coefficient, const std::vector<PauliFactor>& factors);

    OperatorExpr operator+(const OperatorExpr& other) const;
    OperatorExpr operator-(const OperatorExpr& other) const;
    OperatorExpr operator*(double scale) const;

private:
    void canonicalize();

    int n_;
    std::vector<PauliTerm> terms_;
};

}  // namespace causalchain
