#pragma once

#include <Eigen/Dense>

#include "zetawalk/graph.hpp"
#include "zetawalk/unitarity.hpp"
#include "zetawalk/weights.hpp"

namespace zetawalk {

enum class TransitionProvenance { grover, from_zeta, custom_coin };

// Unitary arc-space evolution operator U = S C.
struct TransitionMatrix {
    Eigen::MatrixXcd entries;
    TransitionProvenance provenance = TransitionProvenance::custom_coin;
};

// Arc reversal: (S psi)(a) = psi(mate a); S^2 = I.
Eigen::MatrixXd shift_matrix(const SymmetricDigraph& d);

// Grover coin: C(a, a') = (2/deg(head a)) [head a' = head a] - [a' = a].
// Requires every vertex to have degree >= 1.
Eigen::MatrixXd grover_coin(const SymmetricDigraph& d);

// U = S C_Gr; elementwise 2/deg(tail a) [head a' = tail a] - [a' = mate a].
TransitionMatrix grover_transition(const SymmetricDigraph& d);

// Transpose of the weight scheme's edge matrix, admitted as a transition
// matrix only when the scheme passes the generalized unitarity conditions.
TransitionMatrix transition_from_weights(const SymmetricDigraph& d, const WeightScheme& w,
                                         double tol = kConditionTol);

// Unit-norm amplitude vector over arcs plus a step counter.
class WalkState {
  public:
    static WalkState delta(const SymmetricDigraph& d, ArcId a);
    static WalkState uniform(const SymmetricDigraph& d);
    // Normalizes; rejects the zero vector.
    static WalkState from_amplitudes(Eigen::VectorXcd amplitudes);

    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    long time() const { return time_; }
    double norm() const { return amplitudes_.norm(); }

    friend WalkState step(const TransitionMatrix& u, const WalkState& s);

  private:
    WalkState(Eigen::VectorXcd amps, long time) : amplitudes_(std::move(amps)), time_(time) {}
    Eigen::VectorXcd amplitudes_;
    long time_ = 0;
};

WalkState step(const TransitionMatrix& u, const WalkState& s);
WalkState evolve(const TransitionMatrix& u, WalkState s, long n_steps);

// Per-vertex observation probability: p_v = sum over in-arcs of |psi(a)|^2.
std::vector<double> observe(const SymmetricDigraph& d, const WalkState& s);

}  // namespace zetawalk
