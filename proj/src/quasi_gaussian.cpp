#include "xeop/quasi_gaussian.hpp"

#include <cmath>

namespace xeop {

namespace {

void require_same_s(const QuasiGaussian& a, const QuasiGaussian& b) {
    if (a.s != b.s) {
        throw IncomparableError("quasi-Gaussians with different exponents (s=" +
                                std::to_string(a.s) + " vs s=" + std::to_string(b.s) + ")");
    }
}

}  // namespace

QuasiGaussian::QuasiGaussian(RationalFunction r_, int s_, double scale_)
    : r(std::move(r_)), s(s_), scale(scale_) {
    if (s < -1 || s > 1) {
        throw std::invalid_argument("quasi-Gaussian exponent must be -1, 0 or +1");
    }
}

double QuasiGaussian::operator()(double x) const {
    return scale * r(x) * std::exp(0.5 * s * x * x);
}

QuasiGaussian operator+(const QuasiGaussian& a, const QuasiGaussian& b) {
    require_same_s(a, b);
    return {a.r + b.r, a.s};
}

QuasiGaussian operator-(const QuasiGaussian& a, const QuasiGaussian& b) {
    require_same_s(a, b);
    return {a.r - b.r, a.s};
}

QuasiGaussian operator*(const Rational& c, const QuasiGaussian& f) {
    return {f.r * c, f.s, f.scale};
}

QuasiGaussian operator*(const RationalFunction& w, const QuasiGaussian& f) {
    return {w * f.r, f.s, f.scale};
}

QuasiGaussian qg_derivative(const QuasiGaussian& f) {
    RationalFunction d = derivative(f.r);
    if (f.s != 0) {
        d += RationalFunction(Polynomial::monomial(Rational(f.s), 1)) * f.r;
    }
    return {std::move(d), f.s, f.scale};
}

QuasiGaussian qg_second_derivative(const QuasiGaussian& f) {
    const RationalFunction d1 = derivative(f.r);
    RationalFunction out = derivative(d1);
    if (f.s != 0) {
        const Polynomial two_s_x = Polynomial::monomial(Rational(2 * f.s), 1);
        // s + s^2 x^2
        const Polynomial w{f.s, 0, f.s * f.s};
        out += RationalFunction(two_s_x) * d1 + RationalFunction(w) * f.r;
    }
    return {std::move(out), f.s, f.scale};
}

std::optional<Rational> qg_equal(const QuasiGaussian& f, const QuasiGaussian& g) {
    require_same_s(f, g);
    if (g.is_zero()) {
        return f.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
    }
    if (f.is_zero()) {
        return Rational(0);
    }
    // f.r = c g.r  <=>  f.num * g.den = c * g.num * f.den
    const Polynomial lhs = f.r.num() * g.r.den();
    const Polynomial rhs = g.r.num() * f.r.den();
    if (lhs.degree() != rhs.degree()) {
        return std::nullopt;
    }
    const Rational c = lhs.leading() / rhs.leading();
    if (lhs == rhs * c) {
        return c;
    }
    return std::nullopt;
}

std::string to_string(const QuasiGaussian& f) {
    std::string out = "[" + f.r.to_string() + "]";
    if (f.s == 1) out += " exp(x^2/2)";
    if (f.s == -1) out += " exp(-x^2/2)";
    return out;
}

FirstOrderOp FirstOrderOp::adjoint() const {
    std::string adj = label.ends_with("^+") ? label.substr(0, label.size() - 2) : label + "^+";
    return {-sign, w, std::move(adj)};
}

QuasiGaussian qg_apply_first_order(const FirstOrderOp& op, const QuasiGaussian& f) {
    QuasiGaussian d = qg_derivative(f);
    RationalFunction r = op.sign > 0 ? d.r : -d.r;
    r += op.w * f.r;
    return {std::move(r), f.s, f.scale};
}

QuasiGaussian qg_apply_hamiltonian(const Potential& v, const QuasiGaussian& f) {
    const QuasiGaussian d2 = qg_second_derivative(f);
    // x^2 R + rest R - (second derivative part)
    RationalFunction r = (RationalFunction(Polynomial{0, 0, 1}) + v.rest) * f.r - d2.r;
    return {std::move(r), f.s, f.scale};
}

}  // namespace xeop
