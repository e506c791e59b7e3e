#ifndef XEOP_RATIONAL_FUNCTION_HPP
#define XEOP_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "xeop/polynomial.hpp"

namespace xeop {

/// Quotient of two polynomials kept in a canonical form:
///   - gcd(num, den) = 1,
///   - num and den have integer coefficients whose combined content is 1,
///   - den has a positive leading coefficient,
///   - zero is 0/1.
/// Two rational functions are equal iff their canonical forms are equal.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(const Polynomial& p);  // NOLINT: polynomials embed implicitly
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction constant(const Rational& c) { return {Polynomial::constant(c)}; }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// num/den as a polynomial; throws std::domain_error if den is not constant.
    Polynomial as_polynomial() const;

    double operator()(double x) const { return num_(x) / den_(x); }
    /// Throws std::domain_error at a pole.
    Rational operator()(const Rational& x) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const Rational& s);
    friend RationalFunction operator*(const Rational& s, const RationalFunction& a) { return a * s; }

    RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
    RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
    RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string() const;

private:
    friend RationalFunction ratfunc_normalize(const Polynomial&, const Polynomial&);

    struct Canonical {};
    RationalFunction(Canonical, Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

/// Canonical form of num/den.  Throws std::domain_error on a zero
/// denominator.
RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den);

RationalFunction derivative(const RationalFunction& f);

/// Layout of a rational function that vanishes at infinity,
/// written in powers of its denominator's squarefree base `base`:
///   a_1/base + a_2/base^2 + ...   with deg a_k < deg base.
/// Returns the terms as (coefficient polynomial, power) pairs; zero terms
/// are dropped and a non-vanishing polynomial part is reported with power 0.
/// Throws std::domain_error if den is not a constant times a power of base.
std::vector<std::pair<Polynomial, int>> base_expansion(const RationalFunction& f,
                                                       const Polynomial& base);

}  // namespace xeop

#endif  // XEOP_RATIONAL_FUNCTION_HPP
