#include "zetawalk/walk.hpp"

#include <cmath>

#include "zetawalk/zeta.hpp"

namespace zetawalk {

Eigen::MatrixXd shift_matrix(const SymmetricDigraph& d) {
    const auto n = static_cast<Eigen::Index>(d.n_arcs());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) s(a, d.mate(static_cast<ArcId>(a))) = 1.0;
    return s;
}

Eigen::MatrixXd grover_coin(const SymmetricDigraph& d) {
    for (VertexId v = 0; v < d.n_vertices(); ++v) {
        if (d.degree(v) == 0)
            throw InputError("Grover coin undefined: vertex " + std::to_string(v) +
                             " is isolated");
    }
    const auto n = static_cast<Eigen::Index>(d.n_arcs());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        const VertexId v = d.head(static_cast<ArcId>(a));
        const double two_over_deg = 2.0 / static_cast<double>(d.degree(v));
        for (ArcId b : d.in_arcs(v)) c(a, b) = two_over_deg;
        c(a, a) -= 1.0;
    }
    return c;
}

TransitionMatrix grover_transition(const SymmetricDigraph& d) {
    const Eigen::MatrixXd u = shift_matrix(d) * grover_coin(d);
    return TransitionMatrix{u.cast<Complex>(), TransitionProvenance::grover};
}

TransitionMatrix transition_from_weights(const SymmetricDigraph& d, const WeightScheme& w,
                                         double tol) {
    const UnitarityVerdict verdict = check_gw(d, w, tol);
    if (!verdict.unitary) {
        std::string what = "weight scheme does not define a unitary transition:";
        for (const Violation& v : verdict.violations) {
            what += ' ' + v.condition + '(' +
                    (v.site == Violation::Site::vertex ? "vertex " : "arc ") +
                    std::to_string(v.index) + ')';
        }
        throw InputError(what);
    }
    return TransitionMatrix{edge_matrix(d, w).entries.transpose(),
                            TransitionProvenance::from_zeta};
}

WalkState WalkState::delta(const SymmetricDigraph& d, ArcId a) {
    if (a < 0 || static_cast<std::size_t>(a) >= d.n_arcs())
        throw InputError("arc index " + std::to_string(a) + " out of range");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d.n_arcs()));
    amps(a) = Complex{1.0, 0.0};
    return WalkState(std::move(amps), 0);
}

WalkState WalkState::uniform(const SymmetricDigraph& d) {
    if (d.n_arcs() == 0) throw InputError("uniform state needs at least one arc");
    const auto n = static_cast<Eigen::Index>(d.n_arcs());
    Eigen::VectorXcd amps =
        Eigen::VectorXcd::Constant(n, Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    return WalkState(std::move(amps), 0);
}

WalkState WalkState::from_amplitudes(Eigen::VectorXcd amplitudes) {
    const double norm = amplitudes.norm();
    if (norm == 0.0) throw InputError("cannot normalize the zero state");
    amplitudes /= norm;
    return WalkState(std::move(amplitudes), 0);
}

WalkState step(const TransitionMatrix& u, const WalkState& s) {
    if (u.entries.cols() != s.amplitudes_.size())
        throw InputError("transition matrix and state dimensions disagree");
    return WalkState(u.entries * s.amplitudes_, s.time_ + 1);
}

WalkState evolve(const TransitionMatrix& u, WalkState s, long n_steps) {
    if (n_steps < 0) throw InputError("step count must be >= 0");
    for (long i = 0; i < n_steps; ++i) s = step(u, s);
    return s;
}

std::vector<double> observe(const SymmetricDigraph& d, const WalkState& s) {
    if (static_cast<std::size_t>(s.amplitudes().size()) != d.n_arcs())
        throw InputError("state dimension does not match the arc count");
    std::vector<double> p(static_cast<std::size_t>(d.n_vertices()), 0.0);
    for (VertexId v = 0; v < d.n_vertices(); ++v) {
        for (ArcId a : d.in_arcs(v)) p[static_cast<std::size_t>(v)] += std::norm(s.amplitudes()(a));
    }
    return p;
}

}  // namespace zetawalk
