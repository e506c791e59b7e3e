#include "xeop/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xeop {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, int power) {
    if (power < 0) {
        throw std::invalid_argument("monomial with negative power");
    }
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::operator[](int i) const {
    if (i < 0 || i > degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const {
    return is_zero() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

namespace {

std::string coefficient_text(const Rational& abs_c, int power) {
    const bool unit = abs_c == 1;
    std::string s;
    if (!unit || power == 0) {
        s = abs_c.get_str();
    }
    return s;
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        os << coefficient_text(abs(c), i);
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) {
        return {};
    }
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) {
        out[static_cast<std::size_t>(i - 1)] = p[i] * i;
    }
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p, int order) {
    Polynomial r = p;
    for (int k = 0; k < order; ++k) {
        r = derivative(r);
    }
    return r;
}

Polynomial wronskian2(const Polynomial& p, const Polynomial& q) {
    return p * derivative(q) - derivative(p) * q;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Polynomial{}, a};
    }
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational lead_inv = 1 / b.leading();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = rem[static_cast<std::size_t>(k)] * lead_inv;
        quot[static_cast<std::size_t>(k - db)] = f;
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k - db + j)] -= f * b[j];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (1 / p.leading());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a;
    Polynomial v = b;
    while (!v.is_zero()) {
        // Rescaling keeps coefficient growth in check during the remainder chain.
        Polynomial r = make_monic(divmod(u, v).second);
        u = std::move(v);
        v = std::move(r);
    }
    return make_monic(u);
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw std::domain_error("exact_div: divisor does not divide dividend");
    }
    return q;
}

Polynomial pow(const Polynomial& p, int n) {
    if (n < 0) {
        throw std::invalid_argument("negative polynomial power");
    }
    Polynomial r = Polynomial::constant(Rational(1));
    for (int k = 0; k < n; ++k) {
        r *= p;
    }
    return r;
}

Rational content(const Polynomial& p) {
    if (p.is_zero()) {
        return Rational(0);
    }
    BigInt num_gcd(0);
    BigInt den_lcm(1);
    for (const auto& c : p.coefficients()) {
        if (sgn(c) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return sgn(p.leading()) < 0 ? Rational(-r) : r;
}

std::pair<Polynomial, Rational> primitive_part(const Polynomial& p) {
    if (p.is_zero()) {
        return {Polynomial{}, Rational(0)};
    }
    const Rational c = content(p);
    return {p * (1 / c), c};
}

}  // namespace xeop
