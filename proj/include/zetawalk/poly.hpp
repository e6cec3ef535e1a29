#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zetawalk/errors.hpp"

namespace zetawalk {

// Dense univariate polynomials, ascending coefficient order. Shared by the
// double-precision and exact-rational paths.

template <class T>
std::vector<T> poly_trim(std::vector<T> p) {
    while (p.size() > 1 && p.back() == T(0)) p.pop_back();
    return p;
}

template <class T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return {T(0)};
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == T(0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

template <class T>
std::vector<T> poly_pow(std::vector<T> base, std::size_t e) {
    std::vector<T> out{T(1)};
    while (e > 0) {
        if (e & 1) out = poly_mul(out, base);
        e >>= 1;
        if (e > 0) base = poly_mul(base, base);
    }
    return out;
}

// Quotient/remainder; requires a field scalar or exact divisibility by the
// leading coefficient of the divisor.
template <class T>
std::pair<std::vector<T>, std::vector<T>> poly_divmod(std::vector<T> num,
                                                      const std::vector<T>& den_in) {
    std::vector<T> den = poly_trim(den_in);
    if (den.size() == 1 && den[0] == T(0)) throw InputError("polynomial division by zero");
    num = poly_trim(std::move(num));
    if (num.size() < den.size()) return {{T(0)}, num};
    std::vector<T> quot(num.size() - den.size() + 1, T(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        T q = num[i + den.size() - 1] / den.back();
        quot[i] = q;
        if (q == T(0)) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
    }
    return {std::move(quot), poly_trim(std::move(num))};
}

template <class T, class X>
X poly_eval(const std::vector<T>& p, const X& x) {
    X acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + X(p[i]);
    return acc;
}

template <class T>
bool poly_is_zero(const std::vector<T>& p) {
    for (const T& c : p)
        if (!(c == T(0))) return false;
    return true;
}

}  // namespace zetawalk
