#include "zetawalk/zeta.hpp"

#include <cmath>
#include <numbers>

#include "zetawalk/spectral.hpp"

namespace zetawalk {

EdgeMatrix edge_matrix(const SymmetricDigraph& d, const WeightScheme& w) {
    const auto n = static_cast<Eigen::Index>(d.n_arcs());
    if (w.tau.size() != d.n_arcs() || w.upsilon.size() != d.n_arcs())
        throw InputError("weight arrays do not match the arc count");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        const ArcId aid = static_cast<ArcId>(a);
        for (ArcId b : d.out_arcs(d.head(aid)))
            m(a, b) = w.tau[static_cast<std::size_t>(b)];
        const ArcId mate = d.mate(aid);
        m(a, mate) -= w.upsilon[static_cast<std::size_t>(mate)];
    }
    return EdgeMatrix{std::move(m)};
}

Complex circular_product(const EdgeMatrix& m, const ClosedPath& p) {
    const auto& arcs = p.arcs;
    if (arcs.empty()) throw InputError("circular product of an empty path");
    Complex acc{1.0, 0.0};
    for (std::size_t i = 0; i < arcs.size(); ++i)
        acc *= m.entries(arcs[i], arcs[(i + 1) % arcs.size()]);
    return acc;
}

namespace {

// theta(a, a') for a' an out-arc of head(a).
inline Complex transition_weight(const SymmetricDigraph& d, const WeightScheme& w, ArcId a,
                                 ArcId next) {
    Complex v = w.tau[static_cast<std::size_t>(next)];
    if (next == d.mate(a)) v -= w.upsilon[static_cast<std::size_t>(next)];
    return v;
}

void path_sum_dfs(const SymmetricDigraph& d, const WeightScheme& w, ArcId root, ArcId current,
                  std::size_t depth, Complex product, std::vector<Complex>& sums) {
    if (d.head(current) == d.tail(root))
        sums[depth] += product * transition_weight(d, w, current, root);
    if (depth == sums.size() - 1) return;
    for (ArcId next : d.out_arcs(d.head(current))) {
        const Complex step = transition_weight(d, w, current, next);
        if (step == Complex{0.0, 0.0}) continue;
        path_sum_dfs(d, w, root, next, depth + 1, product * step, sums);
    }
}

}  // namespace

std::vector<Complex> weighted_path_sums(const SymmetricDigraph& d, const WeightScheme& w,
                                        std::size_t order, std::size_t cap) {
    if (order == 0) throw InputError("series order must be >= 1");
    if (order > cap)
        throw ResourceError("path enumeration order " + std::to_string(order) +
                            " exceeds the cap " + std::to_string(cap));
    std::vector<Complex> sums(order + 1, Complex{0.0, 0.0});  // sums[k] = N_k
    for (std::size_t a = 0; a < d.n_arcs(); ++a)
        path_sum_dfs(d, w, static_cast<ArcId>(a), static_cast<ArcId>(a), 1, Complex{1.0, 0.0},
                     sums);
    return sums;
}

TruncatedSeries zeta_exponential(const SymmetricDigraph& d, const WeightScheme& w,
                                 std::size_t order, std::size_t cap) {
    const std::vector<Complex> sums = weighted_path_sums(d, w, order, cap);
    TruncatedSeries arg(order);
    for (std::size_t k = 1; k <= order; ++k) arg.coeff(k) = sums[k] / static_cast<double>(k);
    return arg.exp();
}

TruncatedSeries zeta_euler(const SymmetricDigraph& d, const WeightScheme& w, std::size_t order,
                           std::size_t cap) {
    if (order == 0) throw InputError("series order must be >= 1");
    if (order > cap)
        throw ResourceError("prime-cycle enumeration order " + std::to_string(order) +
                            " exceeds the cap " + std::to_string(cap));
    const EdgeMatrix m = edge_matrix(d, w);
    TruncatedSeries denom = TruncatedSeries::one(order);
    for (const Cycle& c : enumerate_prime_cycles(d, order)) {
        TruncatedSeries factor = TruncatedSeries::one(order);
        factor.coeff(c.length()) = -circular_product(m, c.representative);
        denom = denom * factor;
    }
    return denom.reciprocal();
}

TruncatedSeries zeta_hashimoto(const SymmetricDigraph& d, const WeightScheme& w,
                               std::size_t order) {
    if (order == 0) throw InputError("series order must be >= 1");
    const auto cp = char_poly(edge_matrix(d, w).entries);
    // det(I - tM): characteristic coefficients reversed.
    const std::size_t n = cp.coeffs.size() - 1;
    TruncatedSeries det(order);
    for (std::size_t k = 0; k <= order && k <= n; ++k) det.coeff(k) = cp.coeffs[n - k];
    return det.reciprocal();
}

namespace {

Complex edge_denominator(const SymmetricDigraph& d, const WeightScheme& w, EdgeId e,
                         Complex t) {
    const std::size_t a = 2 * static_cast<std::size_t>(e);
    const Complex denom = 1.0 - t * t * w.upsilon[a] * w.upsilon[a + 1];
    if (std::abs(denom) < 1e-12)
        throw SingularityError("weighted matrix pole at edge " + std::to_string(e) +
                               " for the given t");
    return denom;
}

}  // namespace

Eigen::MatrixXcd weighted_adjacency(const SymmetricDigraph& d, const WeightScheme& w,
                                    Complex t) {
    const auto n = static_cast<Eigen::Index>(d.n_vertices());
    Eigen::MatrixXcd a_mat = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t a = 0; a < d.n_arcs(); ++a) {
        const Arc& arc = d.arc(static_cast<ArcId>(a));
        a_mat(arc.tail, arc.head) += w.tau[a] / edge_denominator(d, w, arc.edge, t);
    }
    return a_mat;
}

Eigen::MatrixXcd weighted_degree(const SymmetricDigraph& d, const WeightScheme& w, Complex t) {
    const auto n = static_cast<Eigen::Index>(d.n_vertices());
    Eigen::MatrixXcd d_mat = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t a = 0; a < d.n_arcs(); ++a) {
        const Arc& arc = d.arc(static_cast<ArcId>(a));
        d_mat(arc.tail, arc.tail) += w.tau[a] * w.upsilon[static_cast<std::size_t>(arc.mate)] /
                                     edge_denominator(d, w, arc.edge, t);
    }
    return d_mat;
}

Complex zeta_ihara_expression(const SymmetricDigraph& d, const WeightScheme& w, Complex t) {
    Complex prefactor{1.0, 0.0};
    for (std::size_t e = 0; e < d.graph().n_edges(); ++e)
        prefactor *= edge_denominator(d, w, static_cast<EdgeId>(e), t);
    const auto n = static_cast<Eigen::Index>(d.n_vertices());
    const Eigen::MatrixXcd inner = Eigen::MatrixXcd::Identity(n, n) -
                                   t * weighted_adjacency(d, w, t) +
                                   t * t * weighted_degree(d, w, t);
    return prefactor * inner.determinant();
}

Complex hashimoto_reciprocal_value(const SymmetricDigraph& d, const WeightScheme& w,
                                   Complex t) {
    const auto n = static_cast<Eigen::Index>(d.n_arcs());
    const Eigen::MatrixXcd m = edge_matrix(d, w).entries;
    return (Eigen::MatrixXcd::Identity(n, n) - t * m).determinant();
}

std::vector<Complex> default_t_samples() {
    std::vector<Complex> out;
    out.reserve(16);
    for (int ring = 0; ring < 2; ++ring) {
        const double radius = ring == 0 ? 0.3 : 0.15;
        const double offset = ring == 0 ? 0.0 : std::numbers::pi / 8.0;
        for (int k = 0; k < 8; ++k) {
            const double angle = offset + 2.0 * std::numbers::pi * k / 8.0;
            out.push_back(std::polar(radius, angle));
        }
    }
    return out;
}

}  // namespace zetawalk
