#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zetawalk/graph.hpp"
#include "zetawalk/weights.hpp"

namespace zetawalk {

inline constexpr double kConditionTol = 1e-9;

// Per-vertex data for the unitary Sato-weight family: tau is constant on the
// out-arcs of each vertex with value (2 cos f_v / deg(v)) e^{i f_v}, or
// identically zero where the zero flag is set; upsilon = 1 everywhere.
struct SatoParams {
    std::vector<double> phase;  // f_v, one per vertex, in (-pi/2, pi/2)
    std::vector<char> zero;     // per vertex; empty means no vertex is zeroed
};

// Parameters of the unitary generalized-weight family. For deg(u) >= 2,
// tau(a) = upsilon(a) (d R_u^2 / 2 + i R_u sqrt(4 - d^2 R_u^2) / 2) with
// |upsilon| = 1; for deg(u) = 1, tau(a) = upsilon(a) + e^{i alpha_a}.
struct GWParams {
    std::vector<double> amplitude;      // R_u per vertex, in [-2/deg(u), 2/deg(u)]
    std::vector<double> upsilon_phase;  // per arc; empty means all zero
    std::vector<double> deg1_phase;     // alpha_a per arc; used at degree-1 tails
};

struct Violation {
    enum class Site { vertex, arc };
    Site site;
    long index;
    std::string condition;
    double residual;
};

struct UnitarityVerdict {
    bool unitary = false;
    std::vector<Violation> violations;
};

// Theorem conditions for upsilon = 1: tau constant on each out-arc set and
// |tau| = 2 cos(arg tau) / deg on every vertex. Requires w.upsilon = 1.
UnitarityVerdict check_sato(const SymmetricDigraph& d, const WeightScheme& w,
                            double tol = kConditionTol);

// Full generalized-weight conditions (covers every weight scheme).
UnitarityVerdict check_gw(const SymmetricDigraph& d, const WeightScheme& w,
                          double tol = kConditionTol);

WeightScheme construct_sato(const SymmetricDigraph& d, const SatoParams& p);
WeightScheme construct_gw(const SymmetricDigraph& d, const GWParams& p);

// R_u recovered from tau, upsilon on the out-arcs of u (sign from the
// imaginary part of tau conj(upsilon)); nullopt when deg(u) = 0.
std::optional<double> recover_amplitude(const SymmetricDigraph& d, const WeightScheme& w,
                                        VertexId u);

// Direct oracle: ||M* M - I||_max.
double unitarity_residual(const Eigen::MatrixXcd& m);

}  // namespace zetawalk
