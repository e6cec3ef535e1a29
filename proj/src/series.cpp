#include "zetawalk/series.hpp"

#include <algorithm>
#include <cmath>

namespace zetawalk {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Complex{0.0, 0.0}) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Complex{0.0, 0.0});
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1.0;
    return s;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& rhs) const {
    if (coeffs_.size() != rhs.coeffs_.size())
        throw InputError("series order mismatch: " + std::to_string(order()) + " vs " +
                         std::to_string(rhs.order()));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    check_same_order(rhs);
    TruncatedSeries out(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    check_same_order(rhs);
    TruncatedSeries out(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    check_same_order(rhs);
    TruncatedSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0] == Complex{0.0, 0.0})
        throw InputError("series reciprocal requires a nonzero constant term");
    TruncatedSeries out(order());
    out.coeffs_[0] = 1.0 / coeffs_[0];
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = -acc / coeffs_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::exp() const {
    // e' = f' e  =>  n e_n = sum_{k=1..n} k f_k e_{n-k}
    TruncatedSeries out(order());
    out.coeffs_[0] = std::exp(coeffs_[0]);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 1; k <= n; ++k)
            acc += static_cast<double>(k) * coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = acc / static_cast<double>(n);
    }
    return out;
}

TruncatedSeries TruncatedSeries::log() const {
    if (coeffs_[0] == Complex{0.0, 0.0})
        throw InputError("series log requires a nonzero constant term");
    // l' = f'/f  =>  n f_0 l_n = n f_n - sum_{k=1..n-1} k l_k f_{n-k}
    TruncatedSeries out(order());
    out.coeffs_[0] = std::log(coeffs_[0]);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Complex acc = static_cast<double>(n) * coeffs_[n];
        for (std::size_t k = 1; k < n; ++k)
            acc -= static_cast<double>(k) * out.coeffs_[k] * coeffs_[n - k];
        out.coeffs_[n] = acc / (static_cast<double>(n) * coeffs_[0]);
    }
    return out;
}

Complex TruncatedSeries::evaluate(Complex t) const {
    Complex acc{0.0, 0.0};
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    return acc;
}

double TruncatedSeries::max_coeff_distance(const TruncatedSeries& rhs) const {
    check_same_order(rhs);
    double worst = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        worst = std::max(worst, std::abs(coeffs_[k] - rhs.coeffs_[k]));
    return worst;
}

}  // namespace zetawalk
