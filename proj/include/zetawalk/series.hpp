#pragma once

#include <complex>
#include <vector>

#include "zetawalk/errors.hpp"

namespace zetawalk {

using Complex = std::complex<double>;

// Complex power series in t truncated at a fixed order L: coefficients
// c_0..c_L. All arithmetic is closed at order L (higher terms dropped).
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::size_t order, std::vector<Complex> coeffs);

    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(std::size_t k) const { return coeffs_[k]; }
    Complex& coeff(std::size_t k) { return coeffs_[k]; }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    // 1/f, requires c_0 != 0.
    TruncatedSeries reciprocal() const;
    // exp(f); log(f) requires c_0 != 0 (principal branch at c_0).
    TruncatedSeries exp() const;
    TruncatedSeries log() const;

    Complex evaluate(Complex t) const;

    // max_k |c_k - rhs.c_k|
    double max_coeff_distance(const TruncatedSeries& rhs) const;

  private:
    void check_same_order(const TruncatedSeries& rhs) const;
    std::vector<Complex> coeffs_;  // size order+1
};

}  // namespace zetawalk
