#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "zetawalk/exact.hpp"
#include "zetawalk/graph.hpp"
#include "zetawalk/series.hpp"

namespace zetawalk {

inline constexpr long kDefaultPeriodBound = 720;
inline constexpr double kPeriodTol = 1e-8;

// det(lambda I - M), ascending coefficients, leading coefficient 1.
// exact_coeffs is populated when the matrix was given in rational form.
struct CharPoly {
    std::vector<Complex> coeffs;
    std::optional<std::vector<exact::Rational>> exact_coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    Complex evaluate(Complex lambda) const;
};

// Faddeev-LeVerrier recurrence in double precision.
CharPoly char_poly(const Eigen::MatrixXcd& m);
// Exact recurrence over the (denominator-cleared) integers.
CharPoly char_poly_exact(const exact::RationalMatrix& m);

// Lazy random-walk structure matrix: T(u,v) = |arcs u->v| / deg(u). On
// simple graphs this is the paper-facing 1/deg neighbor matrix; the
// multi-edge extension is ours and only informational.
Eigen::MatrixXd t_matrix(const Multigraph& g);

// Comparison of det(lambda I - U_Gr) against
// (lambda^2 - 1)^(m-n) det((lambda^2 + 1) I - 2 lambda T), both sides
// computed independently in exact arithmetic. A negative exponent is
// handled by polynomial division with an exactness check.
struct KonnoSatoReport {
    long trivial_exponent = 0;  // m - n
    bool hypothesis_met = false;  // connected and simple
    bool division_exact = true;   // remainder vanished (negative exponent case)
    double max_residual = 0.0;
    bool identity_holds = false;  // max_residual < tol
    std::vector<double> t_spectrum;          // eigenvalues of T, ascending
    std::vector<Complex> lhs_coeffs;         // char poly of U_Gr
    std::vector<Complex> rhs_coeffs;         // factorization side
};
KonnoSatoReport konno_sato_check(const Multigraph& g, double tol = 1e-8);

// Dense eigensolve; eigenvalues sorted by (real, imag).
std::vector<Complex> spectrum(const Eigen::MatrixXcd& m);

// ||U^k - I||_max via binary exponentiation.
double matrix_power_residual(const Eigen::MatrixXcd& u, unsigned long long k);

struct PeriodicityVerdict {
    bool periodic = false;
    std::optional<unsigned long long> period;
    std::vector<long> eigenvalue_orders;  // n(mu) per eigenvalue; -1 when none <= n_max
    long n_max = kDefaultPeriodBound;
    double tol = kPeriodTol;
    std::optional<double> power_residual;  // ||U^period - I|| when verified
    std::optional<bool> exact_decisive;    // cyclotomic test ran on exact coefficients
};

// Smallest n <= n_max with |lambda^n - 1| < tol per eigenvalue; the period is
// the lcm when every order exists.
PeriodicityVerdict periodicity(const std::vector<Complex>& eigenvalues, long n_max = kDefaultPeriodBound,
                               double tol = kPeriodTol);

struct SpectrumReport {
    std::vector<Complex> eigenvalues;
    CharPoly char_polynomial;
    std::vector<double> t_matrix_spectrum;     // filled by the Grover analysis
    std::optional<KonnoSatoReport> konno_sato;  // likewise
    PeriodicityVerdict periodicity;
};

// Spectrum, characteristic polynomial and verified periodicity of a
// transition matrix.
SpectrumReport analyze_transition(const Eigen::MatrixXcd& u, long n_max = kDefaultPeriodBound,
                                  double tol = kPeriodTol);

// Grover-walk analysis: exact characteristic polynomial, the Konno-Sato
// factor data, and a periodicity verdict made decisive by the cyclotomic
// test on the exact coefficients.
SpectrumReport analyze_grover_walk(const Multigraph& g, long n_max = kDefaultPeriodBound,
                                   double tol = kPeriodTol);

}  // namespace zetawalk
