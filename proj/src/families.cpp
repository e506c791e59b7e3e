#include "xeop/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "xeop/sturm.hpp"

namespace xeop {

namespace {

BigInt factorial(int n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt pow2(int n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return r;
}

Polynomial three_term(int n, int sign) {
    if (n < 0) {
        throw std::invalid_argument("Hermite-type polynomial of negative degree " + std::to_string(n));
    }
    Polynomial prev{1};
    if (n == 0) return prev;
    Polynomial cur{0, 2};
    const Polynomial two_x{0, 2};
    for (int k = 1; k < n; ++k) {
        Polynomial next = two_x * cur + Rational(sign * 2 * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::string degree_set_text(const FamilyParams& p) {
    std::ostringstream os;
    os << "{" << p.m1() << ", " << p.m2();
    for (int k = 1; k <= 3; ++k) os << ", " << p.m1() + p.m2() + k;
    os << ", ...}";
    return os.str();
}

}  // namespace

Polynomial hermite(int n) { return three_term(n, -1); }

Polynomial pseudo_hermite(int n) { return three_term(n, +1); }

FamilyParams::FamilyParams(int m1, int m2) : m1_(m1), m2_(m2) {
    if (m1 < 2 || m1 % 2 != 0) {
        throw std::invalid_argument("invalid m1=" + std::to_string(m1) +
                                    ": m1 must be even with m1 >= 2 (seed degrees m = 2, 4, 6, ...)");
    }
    if (m2 % 2 == 0 || m2 <= m1) {
        throw std::invalid_argument("invalid m2=" + std::to_string(m2) +
                                    ": m2 must be odd and such that m2 > m1 (m1=" + std::to_string(m1) + ")");
    }
}

std::string FamilyParams::label() const {
    return "(" + std::to_string(m1_) + "," + std::to_string(m2_) + ")";
}

std::string to_string(Which w) {
    switch (w) {
        case Which::H1: return "H1";
        case Which::H: return "H";
        case Which::H2: return "H2";
    }
    return "?";
}

Which which_from_string(const std::string& s) {
    if (s == "H1") return Which::H1;
    if (s == "H") return Which::H;
    if (s == "H2") return Which::H2;
    throw std::invalid_argument("unknown Hamiltonian tag '" + s + "' (expected H1, H or H2)");
}

Polynomial wronskian_g(const FamilyParams& p) {
    const int m1 = p.m1();
    const int m2 = p.m2();
    const Polynomial direct = wronskian2(pseudo_hermite(m1), pseudo_hermite(m2));
    const Polynomial closed = Rational(2) * (Rational(m2) * pseudo_hermite(m1) * pseudo_hermite(m2 - 1) -
                                             Rational(m1) * pseudo_hermite(m1 - 1) * pseudo_hermite(m2));
    if (!(direct == closed)) {
        throw std::logic_error("Wronskian forms of g disagree for " + p.label());
    }
    return direct;
}

Polynomial gbar(const FamilyParams& p) {
    const int m1 = p.m1();
    const int m2 = p.m2();
    const Polynomial h1 = pseudo_hermite(m1);
    const Polynomial h2 = pseudo_hermite(m2);
    const Polynomial direct = wronskian2(derivative(h1), derivative(h2));
    const Polynomial alt = Rational(-2 * m1) * h1 * derivative(h2) + Rational(2 * m2) * derivative(h1) * h2;
    if (!(direct == alt)) {
        throw std::logic_error("Wronskian forms of gbar disagree for " + p.label());
    }
    return direct;
}

Potential log_derivative_potential(const Polynomial& base, const Rational& c) {
    const Polynomial d1 = derivative(base);
    const Polynomial d2 = derivative(d1);
    const RationalFunction bracket(d2 * base - d1 * d1, base * base);
    return {bracket * Rational(-2) + RationalFunction::constant(c)};
}

Potential potential_v_minus(int m) {
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("V^(-) needs an even seed degree m >= 2 (got m=" + std::to_string(m) + ")" +
                                    (m % 2 != 0 ? "; odd seeds vanish at x = 0" : ""));
    }
    return log_derivative_potential(pseudo_hermite(m), Rational(-2));
}

Potential potential_v2(const FamilyParams& p) {
    return log_derivative_potential(wronskian_g(p), Rational(p.m1() + p.m2() - 3));
}

Potential potential_v1(const FamilyParams& p) {
    return {RationalFunction::constant(Rational(p.m1() + p.m2() + 1))};
}

Potential potential_v_mid(const FamilyParams& p) {
    return log_derivative_potential(pseudo_hermite(p.m1()), Rational(p.m1() + p.m2() - 1));
}

Potential potential_v_mid_bar(const FamilyParams& p) {
    return log_derivative_potential(pseudo_hermite(p.m2()), Rational(p.m1() + p.m2() - 1));
}

Polynomial eop_first(int m, int n) {
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("X_m family needs an even m >= 2 (got m=" + std::to_string(m) + ")");
    }
    if (n == 0) {
        return Polynomial{1};
    }
    if (n < 0 || n <= m) {
        throw std::invalid_argument("degree n=" + std::to_string(n) + " lies in the X_" + std::to_string(m) +
                                    " gap {1, ..., " + std::to_string(m) + "}; admissible degrees are 0, " +
                                    std::to_string(m + 1) + ", " + std::to_string(m + 2) + ", ...");
    }
    const int nu = n - m - 1;
    return -(pseudo_hermite(m) * hermite(nu + 1)) - Rational(2 * m) * pseudo_hermite(m - 1) * hermite(nu);
}

Polynomial diffeq_residual_first(int m, int n) {
    const Polynomial y = eop_first(m, n);
    const Polynomial h = pseudo_hermite(m);
    const Polynomial x = Polynomial::x();
    return h * derivative(y, 2) - Rational(2) * (x * h + derivative(h)) * derivative(y) +
           Rational(2 * n) * h * y;
}

bool is_admissible_degree(const FamilyParams& p, int n) {
    return n == p.m1() || n == p.m2() || n >= p.m1() + p.m2() + 1;
}

std::vector<int> admissible_degrees(const FamilyParams& p, int count) {
    std::vector<int> out;
    for (int n = 0; static_cast<int>(out.size()) < count; ++n) {
        if (is_admissible_degree(p, n)) out.push_back(n);
    }
    return out;
}

std::vector<int> degree_gaps(const FamilyParams& p) {
    std::vector<int> out;
    for (int n = 0; n <= p.m1() + p.m2(); ++n) {
        if (!is_admissible_degree(p, n)) out.push_back(n);
    }
    return out;
}

Polynomial eop_second(const FamilyParams& p, int n) {
    if (!is_admissible_degree(p, n)) {
        throw std::invalid_argument("degree n=" + std::to_string(n) + " is not in the X_" + p.label() +
                                    " degree set " + degree_set_text(p) + " (codimension " +
                                    std::to_string(p.mu()) + ")");
    }
    const int m1 = p.m1();
    const int m2 = p.m2();
    if (n == m1) return pseudo_hermite(m1);
    if (n == m2) return pseudo_hermite(m2);
    const int nu = n - m1 - m2 - 1;
    const Polynomial h1 = pseudo_hermite(m1);
    const Polynomial h2 = pseudo_hermite(m2);
    const Polynomial bracket = Rational(m1 * (m2 + nu + 1)) * pseudo_hermite(m1 - 1) * h2 -
                               Rational(m2 * (m1 + nu + 1)) * h1 * pseudo_hermite(m2 - 1);
    return Rational(m2 - m1) * h1 * h2 * hermite(nu + 1) + Rational(2) * bracket * hermite(nu);
}

Polynomial diffeq_residual_second(const FamilyParams& p, int n) {
    const Polynomial y = eop_second(p, n);
    const Polynomial g = wronskian_g(p);
    const Polynomial x = Polynomial::x();
    return g * derivative(y, 2) - Rational(2) * (x * g + derivative(g)) * derivative(y) +
           (Rational(2 * n) * g + Rational(2) * gbar(p)) * y;
}

bool is_admissible_index(const FamilyParams& p, Which which, int nu) {
    if (nu >= 0) return true;
    switch (which) {
        case Which::H1: return false;
        case Which::H: return nu == -p.m1() - 1;
        case Which::H2: return nu == -p.m1() - 1 || nu == -p.m2() - 1;
    }
    return false;
}

long energy_of(const FamilyParams& p, int nu) {
    return 2L * nu + p.m1() + p.m2() + 2;
}

std::vector<EnergyLevel> spectrum(const FamilyParams& p, Which which, int count) {
    if (count < 1) {
        throw std::invalid_argument("spectrum needs count >= 1");
    }
    std::vector<EnergyLevel> out;
    for (int nu = -p.m2() - 1; static_cast<int>(out.size()) < count; ++nu) {
        if (is_admissible_index(p, which, nu)) {
            out.push_back({nu, energy_of(p, nu), which});
        }
    }
    return out;
}

Rational norm_squared_sqrt_pi(const FamilyParams& p, Which which, int nu) {
    if (!is_admissible_index(p, which, nu)) {
        throw std::invalid_argument("index nu=" + std::to_string(nu) + " is not a bound state of " +
                                    to_string(which) + " for " + p.label());
    }
    const int m1 = p.m1();
    const int m2 = p.m2();
    Rational r;
    switch (which) {
        case Which::H1:
            r = Rational(1) / Rational(pow2(nu) * factorial(nu));
            break;
        case Which::H:
            if (nu < 0) {
                r = Rational(pow2(m1) * factorial(m1));
            } else {
                r = Rational(1) / Rational(pow2(nu + 1) * (nu + m1 + 1) * factorial(nu));
            }
            break;
        case Which::H2:
            if (nu == -m2 - 1) {
                r = Rational(pow2(m2 + 1) * factorial(m2) * (m2 - m1));
            } else if (nu == -m1 - 1) {
                r = Rational(pow2(m1 + 1) * factorial(m1) * (m2 - m1));
            } else {
                r = Rational(1) / Rational(pow2(nu) * (nu + m1 + 1) * (nu + m2 + 1) * factorial(nu));
            }
            break;
    }
    r.canonicalize();
    return r;
}

QuasiGaussian wavefunction(const FamilyParams& p, Which which, int nu) {
    const Rational ns = norm_squared_sqrt_pi(p, which, nu);
    const double scale = std::sqrt(ns.get_d() / std::sqrt(std::numbers::pi));
    RationalFunction r;
    switch (which) {
        case Which::H1:
            r = RationalFunction(hermite(nu));
            break;
        case Which::H: {
            const int m1 = p.m1();
            const Polynomial y = nu < 0 ? Polynomial{1} : eop_first(m1, nu + m1 + 1);
            r = RationalFunction(y, pseudo_hermite(m1));
            break;
        }
        case Which::H2:
            r = RationalFunction(eop_second(p, nu + p.mu() + 2), wronskian_g(p));
            break;
    }
    return {std::move(r), -1, scale};
}

ExtendedFamily ExtendedFamily::build(const FamilyParams& p) {
    ExtendedFamily f{p,
                     pseudo_hermite(p.m1()),
                     pseudo_hermite(p.m2()),
                     wronskian_g(p),
                     xeop::gbar(p),
                     potential_v2(p).rest};
    const int mu = p.mu();
    if (f.g.degree() != mu || f.g.leading() != Rational(pow2(mu + 1) * p.ell())) {
        throw std::logic_error("g has unexpected degree or leading coefficient for " + p.label());
    }
    if (f.gbar.degree() != mu - 2) {
        throw std::logic_error("gbar has unexpected degree for " + p.label());
    }
    if (count_real_roots(f.g) != 0) {
        throw std::logic_error("g has real zeros for " + p.label() + "; V^(2) would be singular");
    }
    return f;
}

}  // namespace xeop
