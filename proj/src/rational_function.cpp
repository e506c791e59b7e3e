#include "xeop/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace xeop {

RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    if (num.is_zero()) {
        return RationalFunction();
    }
    Polynomial n = num;
    Polynomial d = den;
    const Polynomial g = gcd(n, d);
    if (g.degree() > 0) {
        n = exact_div(n, g);
        d = exact_div(d, g);
    }
    // Clear all denominators, then strip the common integer content.
    BigInt den_lcm(1);
    BigInt num_gcd(0);
    for (const auto* p : {&n, &d}) {
        for (const auto& c : p->coefficients()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        }
    }
    // num_gcd / den_lcm is the gcd of all coefficients as rationals.
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(d.leading()) < 0) {
        scale = -scale;
    }
    return RationalFunction(RationalFunction::Canonical{}, n * scale, d * scale);
}

RationalFunction::RationalFunction(const Polynomial& p)
    : RationalFunction(ratfunc_normalize(p, Polynomial::constant(Rational(1)))) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : RationalFunction(ratfunc_normalize(num, den)) {}

Polynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial()) {
        throw std::domain_error("rational function is not a polynomial: " + to_string());
    }
    return num_ * (1 / den_.leading());
}

Rational RationalFunction::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (sgn(d) == 0) {
        throw std::domain_error("rational function evaluated at a pole");
    }
    return num_(x) / d;
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(Canonical{}, -num_, den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) {
        return {a.num_ + b.num_, a.den_};
    }
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by the zero rational function");
    }
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction operator*(const RationalFunction& a, const Rational& s) {
    return {a.num_ * s, a.den_};
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) {
        return as_polynomial().to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction derivative(const RationalFunction& f) {
    const Polynomial& n = f.num();
    const Polynomial& d = f.den();
    return {derivative(n) * d - n * derivative(d), d * d};
}

std::vector<std::pair<Polynomial, int>> base_expansion(const RationalFunction& f,
                                                       const Polynomial& base) {
    if (base.degree() < 1) {
        throw std::domain_error("base_expansion needs a non-constant base");
    }
    const Polynomial& den = f.den();
    if (den.degree() % base.degree() != 0) {
        throw std::domain_error("denominator is not a power of the base");
    }
    const int k = den.degree() / base.degree();
    const Polynomial bk = pow(base, k);
    const Rational unit = den.leading() / bk.leading();
    if (!(bk * unit == den)) {
        throw std::domain_error("denominator is not a power of the base");
    }
    Polynomial rest = f.num() * (1 / unit);
    std::vector<std::pair<Polynomial, int>> terms;
    for (int j = k; j >= 1; --j) {
        auto [q, r] = divmod(rest, base);
        if (!r.is_zero()) {
            terms.emplace_back(std::move(r), j);
        }
        rest = std::move(q);
    }
    if (!rest.is_zero()) {
        terms.emplace_back(std::move(rest), 0);
    }
    // Lowest power first reads like the usual layout.
    std::reverse(terms.begin(), terms.end());
    return terms;
}

}  // namespace xeop
