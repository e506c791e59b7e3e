#ifndef XEOP_QUASI_GAUSSIAN_HPP
#define XEOP_QUASI_GAUSSIAN_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "xeop/rational_function.hpp"

namespace xeop {

/// R(x) * exp(s x^2 / 2) with R rational and s in {-1, 0, +1}, plus an
/// optional floating prefactor.  The exact part (R, s) is what every
/// identity is checked on; `scale` only carries irrational normalization
/// constants and never enters exact comparisons.
struct QuasiGaussian {
    RationalFunction r;
    int s = 0;
    double scale = 1.0;

    QuasiGaussian() = default;
    QuasiGaussian(RationalFunction r_, int s_, double scale_ = 1.0);

    bool is_zero() const { return r.is_zero(); }
    /// Same exact part, scale dropped.
    QuasiGaussian exact() const { return {r, s}; }

    double operator()(double x) const;
};

QuasiGaussian operator+(const QuasiGaussian& a, const QuasiGaussian& b);
QuasiGaussian operator-(const QuasiGaussian& a, const QuasiGaussian& b);
QuasiGaussian operator*(const Rational& c, const QuasiGaussian& f);
QuasiGaussian operator*(const RationalFunction& w, const QuasiGaussian& f);

/// (R' + s x R) exp(s x^2/2)
QuasiGaussian qg_derivative(const QuasiGaussian& f);

/// (R'' + 2 s x R' + (s + s^2 x^2) R) exp(s x^2/2), computed in one step.
QuasiGaussian qg_second_derivative(const QuasiGaussian& f);

/// Raised by qg_equal when the Gaussian exponents differ.
class IncomparableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact proportionality of exact parts: returns c with f = c * g, or
/// nullopt if no such rational constant exists.  If both are zero the
/// ratio is reported as 1.  Throws IncomparableError when f.s != g.s.
std::optional<Rational> qg_equal(const QuasiGaussian& f, const QuasiGaussian& g);

std::string to_string(const QuasiGaussian& f);

/// sign * d/dx + W(x), with sign = +1 or -1.  The adjoint flips the sign
/// of the derivative and keeps W.
struct FirstOrderOp {
    int sign = 1;
    RationalFunction w;
    std::string label;

    FirstOrderOp adjoint() const;
};

QuasiGaussian qg_apply_first_order(const FirstOrderOp& op, const QuasiGaussian& f);

/// V(x) = x^2 + rest(x).  The harmonic term is implicit; `rest` carries
/// the rational part and any additive constant.
struct Potential {
    RationalFunction rest;

    double operator()(double x) const { return x * x + rest(x); }
    Potential shifted(const Rational& c) const { return {rest + RationalFunction::constant(c)}; }
};

/// -f'' + V f
QuasiGaussian qg_apply_hamiltonian(const Potential& v, const QuasiGaussian& f);

}  // namespace xeop

#endif  // XEOP_QUASI_GAUSSIAN_HPP
