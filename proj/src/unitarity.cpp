#include "zetawalk/unitarity.hpp"

#include <cmath>
#include <numbers>

namespace zetawalk {

namespace {

void require_sizes(const SymmetricDigraph& d, const WeightScheme& w) {
    if (w.tau.size() != d.n_arcs() || w.upsilon.size() != d.n_arcs())
        throw InputError("weight arrays do not match the arc count");
}

void add_violation(UnitarityVerdict& v, Violation::Site site, long index,
                   const std::string& condition, double residual) {
    v.violations.push_back(Violation{site, index, condition, residual});
}

}  // namespace

UnitarityVerdict check_sato(const SymmetricDigraph& d, const WeightScheme& w, double tol) {
    require_sizes(d, w);
    for (std::size_t a = 0; a < d.n_arcs(); ++a) {
        if (std::abs(w.upsilon[a] - Complex{1.0, 0.0}) > tol)
            throw InputError("check_sato requires upsilon = 1 on every arc");
    }
    UnitarityVerdict verdict;
    for (VertexId u = 0; u < d.n_vertices(); ++u) {
        const auto& out = d.out_arcs(u);
        if (out.empty()) continue;
        const double deg = static_cast<double>(out.size());
        const Complex tau0 = w.tau[static_cast<std::size_t>(out.front())];

        double constancy = 0.0;
        for (ArcId a : out)
            constancy = std::max(constancy, std::abs(w.tau[static_cast<std::size_t>(a)] - tau0));
        if (constancy > tol)
            add_violation(verdict, Violation::Site::vertex, u, "tau_not_constant", constancy);

        // From the unit diagonal of M*M: |tau| (deg |tau| - 2 cos(arg tau)) = 0.
        double magnitude = 0.0;
        for (ArcId a : out) {
            const Complex tau = w.tau[static_cast<std::size_t>(a)];
            const double mod = std::abs(tau);
            if (mod <= tol) continue;  // the tau = 0 branch
            magnitude = std::max(magnitude, std::abs(mod - 2.0 * std::cos(std::arg(tau)) / deg));
        }
        if (magnitude > tol)
            add_violation(verdict, Violation::Site::vertex, u, "magnitude", magnitude);
    }
    verdict.unitary = verdict.violations.empty();
    return verdict;
}

UnitarityVerdict check_gw(const SymmetricDigraph& d, const WeightScheme& w, double tol) {
    require_sizes(d, w);
    UnitarityVerdict verdict;
    for (VertexId u = 0; u < d.n_vertices(); ++u) {
        const auto& out = d.out_arcs(u);
        if (out.empty()) continue;
        const double deg = static_cast<double>(out.size());

        if (out.size() == 1) {
            const auto a = static_cast<std::size_t>(out.front());
            const double res = std::abs(std::norm(w.tau[a] - w.upsilon[a]) - 1.0);
            if (res > tol)
                add_violation(verdict, Violation::Site::arc, out.front(), "deg1_circle", res);
            continue;
        }

        bool moduli_ok = true;
        for (ArcId a : out) {
            const double res = std::abs(std::abs(w.upsilon[static_cast<std::size_t>(a)]) - 1.0);
            if (res > tol) {
                add_violation(verdict, Violation::Site::arc, a, "upsilon_modulus", res);
                moduli_ok = false;
            }
        }
        if (!moduli_ok) continue;  // the ratio conditions presume |upsilon| = 1

        // z = tau conj(upsilon) must be one common value on arc_{u*} ...
        const Complex z0 = w.tau[static_cast<std::size_t>(out.front())] *
                           std::conj(w.upsilon[static_cast<std::size_t>(out.front())]);
        double spread = 0.0;
        double relation = 0.0;
        for (ArcId a : out) {
            const Complex z = w.tau[static_cast<std::size_t>(a)] *
                              std::conj(w.upsilon[static_cast<std::size_t>(a)]);
            spread = std::max(spread, std::abs(z - z0));
            // ... lying on the curve Re z = deg |z|^2 / 2 traced by R_u.
            relation = std::max(relation, std::abs(z.real() - deg * std::norm(z) / 2.0));
        }
        if (spread > tol)
            add_violation(verdict, Violation::Site::vertex, u, "tau_upsilon_ratio_not_constant",
                          spread);
        if (relation > tol)
            add_violation(verdict, Violation::Site::vertex, u, "amplitude_relation", relation);
    }
    verdict.unitary = verdict.violations.empty();
    return verdict;
}

WeightScheme construct_sato(const SymmetricDigraph& d, const SatoParams& p) {
    const auto n_vertices = static_cast<std::size_t>(d.n_vertices());
    if (p.phase.size() != n_vertices)
        throw InputError("SatoParams.phase must have one entry per vertex");
    if (!p.zero.empty() && p.zero.size() != n_vertices)
        throw InputError("SatoParams.zero must be empty or one flag per vertex");

    WeightScheme w;
    w.preset = WeightPreset::sato;
    w.tau.assign(d.n_arcs(), Complex{0.0, 0.0});
    w.upsilon.assign(d.n_arcs(), Complex{1.0, 0.0});
    for (VertexId u = 0; u < d.n_vertices(); ++u) {
        const bool zeroed = !p.zero.empty() && p.zero[static_cast<std::size_t>(u)];
        if (zeroed) continue;
        const double f = p.phase[static_cast<std::size_t>(u)];
        if (!(f > -std::numbers::pi / 2.0 && f < std::numbers::pi / 2.0))
            throw InputError("Sato phase at vertex " + std::to_string(u) +
                             " must lie in (-pi/2, pi/2) unless the vertex is zero-flagged");
        const auto& out = d.out_arcs(u);
        if (out.empty()) continue;
        const Complex tau =
            std::polar(2.0 * std::cos(f) / static_cast<double>(out.size()), f);
        for (ArcId a : out) w.tau[static_cast<std::size_t>(a)] = tau;
    }
    return w;
}

WeightScheme construct_gw(const SymmetricDigraph& d, const GWParams& p) {
    const auto n_vertices = static_cast<std::size_t>(d.n_vertices());
    const auto n_arcs = d.n_arcs();
    if (p.amplitude.size() != n_vertices)
        throw InputError("GWParams.amplitude must have one entry per vertex");
    if (!p.upsilon_phase.empty() && p.upsilon_phase.size() != n_arcs)
        throw InputError("GWParams.upsilon_phase must be empty or one angle per arc");
    if (!p.deg1_phase.empty() && p.deg1_phase.size() != n_arcs)
        throw InputError("GWParams.deg1_phase must be empty or one angle per arc");

    WeightScheme w;
    w.preset = WeightPreset::custom;
    w.tau.assign(n_arcs, Complex{0.0, 0.0});
    w.upsilon.assign(n_arcs, Complex{1.0, 0.0});
    for (std::size_t a = 0; a < n_arcs; ++a) {
        const VertexId u = d.tail(static_cast<ArcId>(a));
        const double deg = static_cast<double>(d.degree(u));
        const Complex upsilon =
            p.upsilon_phase.empty() ? Complex{1.0, 0.0} : std::polar(1.0, p.upsilon_phase[a]);
        w.upsilon[a] = upsilon;
        if (deg == 1.0) {
            const double alpha = p.deg1_phase.empty() ? 0.0 : p.deg1_phase[a];
            w.tau[a] = upsilon + std::polar(1.0, alpha);
            continue;
        }
        const double r = p.amplitude[static_cast<std::size_t>(u)];
        if (std::abs(r) > 2.0 / deg + 1e-15)
            throw InputError("GW amplitude at vertex " + std::to_string(u) +
                             " is outside [-2/deg, 2/deg]");
        const double disc = std::max(0.0, 4.0 - deg * deg * r * r);
        w.tau[a] = upsilon * Complex{deg * r * r / 2.0, r * std::sqrt(disc) / 2.0};
    }
    return w;
}

std::optional<double> recover_amplitude(const SymmetricDigraph& d, const WeightScheme& w,
                                        VertexId u) {
    require_sizes(d, w);
    const auto& out = d.out_arcs(u);
    if (out.empty()) return std::nullopt;
    const auto a = static_cast<std::size_t>(out.front());
    const Complex z = w.tau[a] * std::conj(w.upsilon[a]);
    const double r = std::sqrt(std::max(0.0, 2.0 * z.real() / static_cast<double>(out.size())));
    return z.imag() < 0.0 ? -r : r;
}

double unitarity_residual(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw InputError("unitarity residual requires a square matrix");
    if (m.rows() == 0) return 0.0;
    const Eigen::MatrixXcd gram =
        m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return gram.cwiseAbs().maxCoeff();
}

}  // namespace zetawalk
