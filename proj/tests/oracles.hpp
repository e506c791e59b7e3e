// Independent reference computations used by the tests.  None of these call
// into the library's arithmetic beyond constructing Polynomial values from
// coefficient vectors.
#ifndef XEOP_TESTS_ORACLES_HPP
#define XEOP_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "xeop/polynomial.hpp"

namespace oracle {

using xeop::BigInt;
using xeop::Polynomial;
using xeop::Rational;

inline BigInt fact(int n) {
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt pow_int(long base, int e) {
    BigInt r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

// n! sum_p s^p (2x)^(n-2p) / (p! (n-2p)!), s = -1 for Hermite, +1 for pseudo-Hermite.
inline Polynomial hermite_sum(int n, int s) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int p = 0; 2 * p <= n; ++p) {
        Rational term(fact(n) * pow_int(2, n - 2 * p), fact(p) * fact(n - 2 * p));
        term.canonicalize();
        if (s < 0 && p % 2 == 1) term = -term;
        c[static_cast<std::size_t>(n - 2 * p)] = term;
    }
    return Polynomial(std::move(c));
}

inline std::vector<Rational> dense(const Polynomial& p) {
    return {p.coefficients().begin(), p.coefficients().end()};
}

inline Polynomial convolve(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(a.degree() + b.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return Polynomial(std::move(c));
}

inline Rational naive_eval(const Polynomial& p, const Rational& x) {
    Rational sum = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational xi = 1;
        for (int k = 0; k < i; ++k) xi *= x;
        sum += p[i] * xi;
    }
    return sum;
}

inline Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : c) {
        v = Rational(num(rng), den(rng));
        v.canonicalize();
    }
    return Polynomial(std::move(c));
}

}  // namespace oracle

#endif  // XEOP_TESTS_ORACLES_HPP
