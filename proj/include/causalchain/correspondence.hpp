#pragma once

#include <string>
#include <vector>

#include "causalchain/dense.hpp"
#include "causalchain/pauli.hpp"

namespace causalchain {

/// Projector pair whose ground-state expectations reproduce the game
/// probabilities: pi0 three-body (ZZX), pi1 two-body (ZZ). `variant`
/// rotates the site choice by the chain translation (0..3).
struct ObservablePair {
    static ObservablePair canonical();        // pi0 on sites (1,3,4), pi1 on (2,4)
    static ObservablePair variant(int shift); // translated site choice

    OperatorExpr pi0;
    OperatorExpr pi1;
    std::string label;
};

/// Closed-form 4-site ground state: superposition of Bell-pair patterns
/// interpolating between the Ising ferromagnet and the cluster state.
StateVector analytic_ground_state(double theta);

struct Eq10Report {
    double theta;
    double pi0_expectation;  // spin side, expect (1+sin t)/2
    double pi1_expectation;  // spin side, expect (1+cos t)/2
    double p_alice_trace;    // game side
    double p_bob_trace;
    double max_deviation;
    bool pass;
};

/// Check spin expectations against game traces and the closed forms.
Eq10Report verify_eq10(double theta, const ObservablePair& pair);
Eq10Report verify_eq10(double theta);

/// (  <pi0> + <pi1> ) / 2 on the state.
double k_avg(const StateVector& state, const ObservablePair& pair);

struct Rho134Report {
    double theta;
    double max_entry_deviation;  // reduced density vs closed form
    double zz_correlator;        // expect cos t
    double zzx_correlator;       // expect sin t
    bool pass;
};

/// Reduced density matrix on sites (1,3,4) of the ground state vs its
/// Pauli closed form.
Rho134Report verify_rho134(double theta);

struct StrategyRowReport {
    std::string label;
    double p_alice_spin;
    double p_alice_trace;
    double p_alice_expected;
    double p_bob_spin;
    double p_bob_trace;
    double p_bob_expected;
    double max_deviation;
    bool pass;
};

/// The three alternative strategy/observable pairings: Y-type (excited
/// branch signs), fixed-Bob perfect channel, and the XXX string strategy.
std::vector<StrategyRowReport> table1_catalog(double theta);

struct ClassificationEntry {
    int index;        // energy ordering position
    double max_k;     // max over the grid of the achievable game value
    bool flagged;     // exceeds 3/4
};

struct ClassificationReport {
    std::vector<ClassificationEntry> entries;
    std::string degeneracy_note;
};

/// Classify the 16 eigenstates of the 4-site chain over a theta grid:
/// a level counts as violating only if some state of its (exactly)
/// degenerate eigenspace achieves a valid game value above 3/4; the value
/// of a state with correlator pair (f0, f1) is (2+|f0|+|f1|)/4 when
/// f0^2+f1^2 <= 1 (the resource is a valid process matrix there) and the
/// classical 3/4 otherwise.
ClassificationReport classify_eigenstates(const std::vector<double>& theta_grid);

/// 65 interior grid points (j+1) * pi / 132.
std::vector<double> default_classification_grid();

}  // namespace causalchain
