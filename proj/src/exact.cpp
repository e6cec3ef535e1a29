#include "zetawalk/exact.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "zetawalk/poly.hpp"

namespace zetawalk::exact {

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

// Faddeev-LeVerrier over the integers: M_1 = A, c_{n-1} = -tr(M_1);
// M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k (exact division).
std::vector<Int> integer_char_poly(const std::vector<Int>& a, std::size_t n) {
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    if (n == 0) return coeffs;
    std::vector<Int> aux = a;
    std::vector<Int> next(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            const Int& shift = coeffs[n - k + 1];
            // next = a * (aux + shift I)
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    Int acc = 0;
                    for (std::size_t l = 0; l < n; ++l) {
                        Int rhs = aux[l * n + j];
                        if (l == j) rhs += shift;
                        if (a[i * n + l] != 0 && rhs != 0) acc += a[i * n + l] * rhs;
                    }
                    next[i * n + j] = acc;
                }
            }
            aux.swap(next);
        }
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += aux[i * n + i];
        Int q, r;
        boost::multiprecision::divide_qr(Int(-tr), Int(k), q, r);
        if (r != 0) throw NumericalError("Faddeev-LeVerrier trace not divisible by step index");
        coeffs[n - k] = q;
    }
    return coeffs;
}

}  // namespace

std::vector<Rational> char_poly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("char_poly requires a square matrix");
    const std::size_t n = m.rows();
    // Clear denominators: B = q M with integer entries, then
    // chi_M(lambda) = q^{-n} chi_B(q lambda).
    Int q = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q = lcm_int(q, denominator(m(i, j)));
    std::vector<Int> scaled(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = m(i, j);
            scaled[i * n + j] = numerator(v) * (q / denominator(v));
        }
    std::vector<Int> b = integer_char_poly(scaled, n);
    std::vector<Rational> out(n + 1);
    Int power = 1;  // q^(n-j)
    for (std::size_t j = n + 1; j-- > 0;) {
        out[j] = Rational(b[j], power);
        power *= q;
    }
    return out;
}

RationalMatrix grover_transition(const SymmetricDigraph& d) {
    const std::size_t n = d.n_arcs();
    RationalMatrix u(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const ArcId aid = static_cast<ArcId>(a);
        const Rational tau(2, static_cast<long>(d.degree(d.tail(aid))));
        for (ArcId b : d.in_arcs(d.tail(aid))) u(a, static_cast<std::size_t>(b)) = tau;
        u(a, static_cast<std::size_t>(d.mate(aid))) -= 1;
    }
    return u;
}

RationalMatrix grover_edge_matrix(const SymmetricDigraph& d) {
    const std::size_t n = d.n_arcs();
    RationalMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const ArcId aid = static_cast<ArcId>(a);
        for (ArcId b : d.out_arcs(d.head(aid))) {
            m(a, static_cast<std::size_t>(b)) =
                Rational(2, static_cast<long>(d.degree(d.tail(b))));
        }
        m(a, static_cast<std::size_t>(d.mate(aid))) -= 1;
    }
    return m;
}

RationalMatrix t_matrix(const Multigraph& g) {
    SymmetricDigraph d(g);
    const std::size_t n = static_cast<std::size_t>(g.n_vertices);
    RationalMatrix t(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        const std::size_t deg = d.degree(static_cast<VertexId>(u));
        if (deg == 0)
            throw InputError("t_matrix: vertex " + std::to_string(u) + " is isolated");
        for (ArcId a : d.out_arcs(static_cast<VertexId>(u)))
            t(u, static_cast<std::size_t>(d.head(a))) += Rational(1, static_cast<long>(deg));
    }
    return t;
}

unsigned long euler_phi(unsigned long d) {
    unsigned long result = d;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            result -= result / p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

namespace {

std::vector<Int> cyclotomic_impl(unsigned long d,
                                 std::map<unsigned long, std::vector<Int>>& cache) {
    if (auto it = cache.find(d); it != cache.end()) return it->second;
    // Phi_d(x) = (x^d - 1) / prod_{e | d, e < d} Phi_e(x)
    std::vector<Int> num(d + 1, Int(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [quot, rem] = poly_divmod(num, cyclotomic_impl(e, cache));
        if (!poly_is_zero(rem)) throw NumericalError("cyclotomic division left a remainder");
        num = std::move(quot);
    }
    cache[d] = num;
    return num;
}

}  // namespace

std::vector<Int> cyclotomic(unsigned long d) {
    if (d == 0) throw InputError("cyclotomic index must be >= 1");
    static std::mutex cache_mutex;
    static std::map<unsigned long, std::vector<Int>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_impl(d, cache);
}

bool quadratic_pair_is_root_of_unity(const Rational& mu) {
    const Rational twice = 2 * mu;
    return is_integer(twice) && twice >= -2 && twice <= 2;
}

PeriodicityAnalysis analyze_periodicity(std::vector<Rational> p) {
    PeriodicityAnalysis out;
    p = poly_trim(std::move(p));
    if (p.empty() || p.back() == 0) throw InputError("zero polynomial has no periodicity");

    std::size_t deg = p.size() - 1;
    // phi(d) >= sqrt(d/2), so factors of degree <= deg have index below the
    // bound; beyond it nothing can divide.
    const unsigned long d_bound = 2 * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg) + 1;
    for (unsigned long d = 1; d <= d_bound && deg > 0; ++d) {
        if (euler_phi(d) > deg) continue;
        std::vector<Rational> phi;
        for (const Int& c : cyclotomic(d)) phi.emplace_back(c);
        while (deg > 0) {
            auto [quot, rem] = poly_divmod(p, phi);
            if (!poly_is_zero(rem)) break;
            p = std::move(quot);
            deg = p.size() - 1;
            out.cyclotomic_orders.push_back(d);
        }
    }
    if (deg == 0) {
        out.periodic = true;
        unsigned long long period = 1;
        for (unsigned long d : out.cyclotomic_orders) {
            period = std::lcm(period, static_cast<unsigned long long>(d));
            if (period > (1ULL << 62)) throw NumericalError("period overflow");
        }
        out.period = period;
    } else {
        out.non_cyclotomic_remainder = std::move(p);
    }
    return out;
}

}  // namespace zetawalk::exact
