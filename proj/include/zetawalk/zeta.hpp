#pragma once

#include <Eigen/Dense>

#include "zetawalk/cycles.hpp"
#include "zetawalk/graph.hpp"
#include "zetawalk/series.hpp"
#include "zetawalk/weights.hpp"

namespace zetawalk {

inline constexpr std::size_t kDefaultOrder = 8;
inline constexpr std::size_t kDefaultCycleCap = 10;

// Arc-indexed weight matrix
//   entry(a, a') = tau(a') [head(a) = tail(a')] - upsilon(a') [a' = mate(a)].
// Nonzero entries occur only where head(a) = tail(a') (adjacency condition),
// so the rooted-path, prime-cycle and determinant expressions below all
// describe the same series.
struct EdgeMatrix {
    Eigen::MatrixXcd entries;
};

EdgeMatrix edge_matrix(const SymmetricDigraph& d, const WeightScheme& w);

// circ(C) = theta(c_1,c_2) theta(c_2,c_3) ... theta(c_k,c_1); invariant
// under rotation of C.
Complex circular_product(const EdgeMatrix& m, const ClosedPath& p);

// N_k = sum over closed paths of length k of circ, for k = 1..order,
// computed by depth-first path enumeration (zero-weight branches pruned).
std::vector<Complex> weighted_path_sums(const SymmetricDigraph& d, const WeightScheme& w,
                                        std::size_t order,
                                        std::size_t cap = kDefaultCycleCap);

// exp(sum_k N_k t^k / k), truncated.
TruncatedSeries zeta_exponential(const SymmetricDigraph& d, const WeightScheme& w,
                                 std::size_t order, std::size_t cap = kDefaultCycleCap);

// prod over prime cycles of length <= order of 1 / (1 - circ(C) t^{|C|}).
TruncatedSeries zeta_euler(const SymmetricDigraph& d, const WeightScheme& w,
                           std::size_t order, std::size_t cap = kDefaultCycleCap);

// 1 / det(I - t M) as a truncated series; determinant coefficients come from
// the characteristic polynomial of the edge matrix.
TruncatedSeries zeta_hashimoto(const SymmetricDigraph& d, const WeightScheme& w,
                               std::size_t order);

// Vertex-indexed matrices
//   A(u,v) = sum_{a: u->v} tau(a) / (1 - t^2 upsilon(a) upsilon(mate a))
//   D(u,u) = sum_{a: tail a = u} tau(a) upsilon(mate a) / (1 - t^2 ...).
// Throws SingularityError naming the edge when a denominator vanishes at t.
Eigen::MatrixXcd weighted_adjacency(const SymmetricDigraph& d, const WeightScheme& w,
                                    Complex t);
Eigen::MatrixXcd weighted_degree(const SymmetricDigraph& d, const WeightScheme& w, Complex t);

// prod_e (1 - t^2 upsilon(a_e) upsilon(mate a_e)) * det(I - t A + t^2 D);
// equals det(I - t M) away from denominator poles.
Complex zeta_ihara_expression(const SymmetricDigraph& d, const WeightScheme& w, Complex t);

// det(I - t M) evaluated directly (the reciprocal zeta value at t).
Complex hashimoto_reciprocal_value(const SymmetricDigraph& d, const WeightScheme& w, Complex t);

// 16 fixed sample points with |t| <= 0.3, half of them off the real axis.
std::vector<Complex> default_t_samples();

}  // namespace zetawalk
