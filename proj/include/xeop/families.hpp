#ifndef XEOP_FAMILIES_HPP
#define XEOP_FAMILIES_HPP

#include <string>
#include <vector>

#include "xeop/quasi_gaussian.hpp"

namespace xeop {

/// Hermite polynomial H_n (leading coefficient 2^n).
Polynomial hermite(int n);

/// Pseudo-Hermite polynomial (-i)^n H_n(ix): positive coefficients, no real
/// zeros for even n, a single zero at x = 0 for odd n.
Polynomial pseudo_hermite(int n);

/// Validated (m1, m2): m1 even >= 2, m2 odd, m2 > m1.
class FamilyParams {
public:
    FamilyParams(int m1, int m2);

    int m1() const { return m1_; }
    int m2() const { return m2_; }
    /// Codimension m1 + m2 - 1; also the degree of g.
    int mu() const { return m1_ + m2_ - 1; }
    /// Ladder step m2 - m1 (odd, >= 1).
    int ell() const { return m2_ - m1_; }

    std::string label() const;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

private:
    int m1_;
    int m2_;
};

/// Which member of the SUSY chain H^(1) -> H -> H^(2).
enum class Which { H1, H, H2 };

std::string to_string(Which w);
Which which_from_string(const std::string& s);

struct EnergyLevel {
    int nu;
    long energy;  // 2 nu + m1 + m2 + 2
    Which which;

    friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
};

/// Wronskian g = W(H_m1, H_m2) of pseudo-Hermite polynomials, computed as
/// the 2x2 Wronskian and via the closed product form; throws
/// std::logic_error if the two disagree.
Polynomial wronskian_g(const FamilyParams& p);

/// gbar = W(H'_m1, H'_m2) of pseudo-Hermite polynomials, computed both as a
/// Wronskian and as -2 m1 H_m1 H'_m2 + 2 m2 H'_m1 H_m2.
Polynomial gbar(const FamilyParams& p);

/// x^2 - 2 [P''/P - (P'/P)^2] + c, as a Potential with rest = everything
/// but x^2.
Potential log_derivative_potential(const Polynomial& base, const Rational& c);

/// First-order partner V^(-) for an even seed degree m >= 2.
Potential potential_v_minus(int m);

/// V^(2): rational part over g^2 plus the constant m1 + m2 - 3.
Potential potential_v2(const FamilyParams& p);

/// Intermediate potentials of the two factorization routes.
Potential potential_v1(const FamilyParams& p);
Potential potential_v_mid(const FamilyParams& p);
Potential potential_v_mid_bar(const FamilyParams& p);

/// First-order type III X_m member y^(m)_n, n in {0} U {m+1, m+2, ...}.
Polynomial eop_first(int m, int n);

/// Residual H y'' - 2 (x H + H') y' + 2 n H y of the X_m equation, H = H_m.
Polynomial diffeq_residual_first(int m, int n);

/// Second-order X_{m1,m2} member y^(mu)_n, n in {m1, m2} U {m1+m2+1, ...}.
Polynomial eop_second(const FamilyParams& p, int n);

/// Residual g y'' - 2 (x g + g') y' + (2 n g + 2 gbar) y.
Polynomial diffeq_residual_second(const FamilyParams& p, int n);

bool is_admissible_degree(const FamilyParams& p, int n);
/// The first `count` admissible degrees in ascending order.
std::vector<int> admissible_degrees(const FamilyParams& p, int count);
/// The mu degrees missing from the sequence.
std::vector<int> degree_gaps(const FamilyParams& p);

bool is_admissible_index(const FamilyParams& p, Which which, int nu);
long energy_of(const FamilyParams& p, int nu);
std::vector<EnergyLevel> spectrum(const FamilyParams& p, Which which, int count);

/// N^2 * sqrt(pi) for the normalized eigenfunction; rational.
Rational norm_squared_sqrt_pi(const FamilyParams& p, Which which, int nu);

/// Eigenfunction: exact part y/den * exp(-x^2/2) and float scale N.
QuasiGaussian wavefunction(const FamilyParams& p, Which which, int nu);

/// Everything derived from (m1, m2).
struct ExtendedFamily {
    FamilyParams params;
    Polynomial h1;
    Polynomial h2;
    Polynomial g;
    Polynomial gbar;
    RationalFunction v2_rational;

    static ExtendedFamily build(const FamilyParams& p);
};

}  // namespace xeop

#endif  // XEOP_FAMILIES_HPP
