#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetawalk/graph.hpp"

namespace zetawalk::exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);
bool is_integer(const Rational& r);

// Small dense matrix over the rationals; just enough for the exact
// characteristic-polynomial path.
class RationalMatrix {
  public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    bool operator==(const RationalMatrix&) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// det(lambda I - M), ascending coefficients, leading coefficient 1. Runs the
// Faddeev-LeVerrier recurrence on the denominator-cleared integer matrix.
std::vector<Rational> char_poly(const RationalMatrix& m);

// Exact Grover-walk matrices (entries 2/deg and -1).
RationalMatrix grover_transition(const SymmetricDigraph& d);
// Edge matrix of the upsilon = 1, tau = 2/deg(tail) weight scheme; its
// transpose equals grover_transition.
RationalMatrix grover_edge_matrix(const SymmetricDigraph& d);
// Random-walk matrix T_uv = |arcs u->v| / deg(u).
RationalMatrix t_matrix(const Multigraph& g);

// d-th cyclotomic polynomial, ascending integer coefficients.
std::vector<Int> cyclotomic(unsigned long d);

unsigned long euler_phi(unsigned long d);

// Roots-of-unity test for the quadratic lambda^2 - 2 mu lambda + 1: true iff
// 2 mu is an integer in [-2, 2].
bool quadratic_pair_is_root_of_unity(const Rational& mu);

// Exact periodicity of a matrix with the given rational characteristic
// polynomial: the matrix (diagonalizable, e.g. unitary) has finite order iff
// the polynomial is a product of cyclotomics. Peels cyclotomic factors; if a
// non-constant remainder survives, the matrix is aperiodic, decisively.
struct PeriodicityAnalysis {
    bool periodic = false;
    std::optional<unsigned long long> period;
    std::vector<unsigned long> cyclotomic_orders;    // factor indices, with multiplicity
    std::vector<Rational> non_cyclotomic_remainder;  // empty when periodic
};
PeriodicityAnalysis analyze_periodicity(std::vector<Rational> char_poly_coeffs);

}  // namespace zetawalk::exact
