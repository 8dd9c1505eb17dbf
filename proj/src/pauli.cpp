#include "causalchain/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "causalchain/errors.hpp"

namespace causalchain {

OperatorExpr::OperatorExpr(int register_size) : n_(register_size) {
    if (n_ < 1) throw validation_error("register size must be >= 1");
}

OperatorExpr::OperatorExpr(int register_size, std::vector<PauliTerm> terms)
    : n_(register_size), terms_(std::move(terms)) {
    if (n_ < 1) throw validation_error("register size must be >= 1");
    canonicalize();
}

OperatorExpr& OperatorExpr::add(double coefficient, std::initializer_list<PauliFactor> factors) {
    return add(coefficient, std::vector<PauliFactor>(factors));
}

OperatorExpr& OperatorExpr::add(double coefficient, const std::vector<PauliFactor>& factors) {
    terms_.push_back(PauliTerm{coefficient, factors});
    canonicalize();
    return *this;
}

void OperatorExpr::canonicalize() {
    // Merge terms with identical factor sets, drop exact zeros.
    std::map<std::vector<std::pair<int, char>>, double> merged;
    for (auto& t : terms_) {
        if (!std::isfinite(t.coefficient))
            throw validation_error("non-finite coefficient");
        auto factors = t.factors;
        std::sort(factors.begin(), factors.end(),
                  [](const PauliFactor& a, const PauliFactor& b) { return a.site < b.site; });
        std::vector<std::pair<int, char>> key;
        key.reserve(factors.size());
        int prev = -1;
        for (auto& f : factors) {
            if (f.site < 0 || f.site >= n_)
                throw validation_error("factor site out of range");
            if (f.site == prev)
                throw validation_error("duplicate site in Pauli term");
            prev = f.site;
            key.emplace_back(f.site, static_cast<char>(f.axis));
        }
        merged[key] += t.coefficient;
    }
    terms_.clear();
    for (auto& [key, coeff] : merged) {
        if (coeff == 0.0) continue;
        PauliTerm t;
        t.coefficient = coeff;
        for (auto& [site, axis] : key)
            t.factors.push_back(PauliFactor{site, static_cast<Axis>(axis)});
        terms_.push_back(std::move(t));
    }
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& other) const {
    if (n_ != other.n_) throw validation_error("register size mismatch");
    auto terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return OperatorExpr(n_, std::move(terms));
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& other) const {
    return *this + other * -1.0;
}

OperatorExpr OperatorExpr::operator*(double scale) const {
    auto terms = terms_;
    for (auto& t : terms) t.coefficient *= scale;
    return OperatorExpr(n_, std::move(terms));
}

}  // namespace causalchain
