#ifndef XEOP_POLYNOMIAL_HPP
#define XEOP_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace xeop {

/// Arbitrary-precision rational; GMP keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

/// Dense univariate polynomial over Q, ascending coefficients.
///
/// The zero polynomial is the empty coefficient vector and has degree -1.
/// Every non-zero polynomial has a non-zero top coefficient, so equality is
/// plain coefficient-wise equality.
///
/// Note: every polynomial built by this library has a definite parity
/// (only even or only odd powers).  That structure is documented here but
/// deliberately not exploited by the storage or the arithmetic.
class Polynomial {
public:
    static constexpr int zero_degree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int power);
    static Polynomial x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational operator[](int i) const;
    Rational leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Descending human-readable form, e.g. "4x^4 + 3".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial derivative(const Polynomial& p);
Polynomial derivative(const Polynomial& p, int order);

/// p * q' - p' * q
Polynomial wronskian2(const Polynomial& p, const Polynomial& q);

/// Euclidean division a = q*b + r with deg r < deg b.  Throws
/// std::domain_error when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient; throws std::domain_error when b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// p^n for n >= 0.
Polynomial pow(const Polynomial& p, int n);

Polynomial make_monic(const Polynomial& p);

/// Splits p = c * q where q has integer coefficients, content 1 and a
/// positive leading coefficient.  Returns {q, c}.
std::pair<Polynomial, Rational> primitive_part(const Polynomial& p);

/// gcd of the numerators divided by lcm of the denominators, sign of the
/// leading coefficient.  content(p) * primitive(p) == p.
Rational content(const Polynomial& p);

}  // namespace xeop

#endif  // XEOP_POLYNOMIAL_HPP
