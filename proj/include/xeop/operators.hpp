#ifndef XEOP_OPERATORS_HPP
#define XEOP_OPERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "xeop/families.hpp"
#include "xeop/report.hpp"

namespace xeop {

/// Product of first-order operators, written left to right as in
/// c = Abar2 Ahat_l ... Ahat_1 A2^+; the rightmost factor acts first.
struct OperatorChain {
    std::vector<FirstOrderOp> ops;

    int order() const { return static_cast<int>(ops.size()); }
    OperatorChain adjoint() const;
    std::string label() const;
};

/// a o b: apply b, then a.
OperatorChain compose(const OperatorChain& a, const OperatorChain& b);

QuasiGaussian chain_apply(const OperatorChain& chain, const QuasiGaussian& f);

/// All first-order building blocks for one family.
struct Supercharges {
    FamilyParams params;
    FirstOrderOp a;         // d/dx + x
    FirstOrderOp a_dagger;  // -d/dx + x
    FirstOrderOp A1;        // H^(1) -> H
    FirstOrderOp A2;        // H -> H^(2)
    FirstOrderOp Abar1;     // H^(1) -> Hbar (formal)
    FirstOrderOp Abar2;     // Hbar -> H^(2)
    std::vector<FirstOrderOp> hat;  // hat[i-1] = Ahat_i, i = 1..ell

    /// Second-order intertwiner A2 A1.
    OperatorChain calA() const;
    /// The same operator through the other seed ordering, Abar2 Abar1.
    OperatorChain calA_bar() const;
    /// Ahat_ell ... Ahat_1
    OperatorChain hat_chain() const;
    /// b = calA a calA^+, fifth order.
    OperatorChain b() const;
    OperatorChain b_dagger() const;
    /// c = Abar2 Ahat_ell ... Ahat_1 A2^+, order ell + 2.
    OperatorChain c() const;
    OperatorChain c_dagger() const;
};

Supercharges build_supercharges(const FamilyParams& p);

/// Formal Hamiltonian of the hat chain, i = 1..ell+1 (singular at x = 0
/// when m1 + i - 1 is odd).
Potential hat_potential(const FamilyParams& p, int i);

/// Oscillator eigenfunction exact parts H_k exp(-x^2/2), k < count.
std::vector<QuasiGaussian> oscillator_probes(int count);

/// A2 A1 f == Abar2 Abar1 f on the first `probes` oscillator states.
Report verify_factorization_commutes(const FamilyParams& p, int probes = 6);

/// Every first-order intertwining relation of the construction, checked
/// as operator identities on oscillator probes.
Report verify_supercharge_intertwining(const FamilyParams& p, int probes = 5);

/// c H2 psi - (H2 + 2 ell) c psi == 0 for each bound state with nu <= max_nu.
Report verify_intertwining_c(const FamilyParams& p, int max_nu);

/// Outcome of applying a ladder operator to a normalized eigenstate.
struct LadderAction {
    int nu = 0;
    bool zero = false;
    int target_nu = 0;
    Rational exact_ratio;          // L(exact_nu) = exact_ratio * exact_target
    Rational coefficient_squared;  // with normalizations folded in
    double coefficient = 0.0;      // signed
};

/// Exact application of c to psi^(2)_nu.  Throws std::logic_error if the
/// result is nonzero and not proportional to an eigenstate.
LadderAction ladder_c_action(const FamilyParams& p, int nu);
LadderAction ladder_c_dagger_action(const FamilyParams& p, int nu);
LadderAction standard_b_action(const FamilyParams& p, int nu);
LadderAction standard_b_dagger_action(const FamilyParams& p, int nu);

/// Closed-form squared coefficient of c psi_nu; nullopt for a zero mode.
std::optional<Rational> c_action_coefficient_squared(const FamilyParams& p, int nu);
/// The same coefficient written as the product of even factors.
std::optional<Rational> c_action_coefficient_squared_product_form(const FamilyParams& p, int nu);

struct PhaSpec {
    int order = 0;
    Polynomial poly;          // in the energy variable
    std::vector<long> roots;  // with multiplicity, in factor order
};

struct PhaPolys {
    PhaSpec P;  // b^+ b = P(H2)
    PhaSpec Q;  // c^+ c = Q(H2)
};

PhaPolys pha_polys(const FamilyParams& p);

enum class Ladder { b, b_dagger, c, c_dagger };

std::string to_string(Ladder l);
Ladder ladder_from_string(const std::string& s);

struct ZeroModes {
    std::vector<EnergyLevel> physical;  // ascending, distinct
    std::vector<long> formal;           // all roots, with multiplicity
};

ZeroModes zero_modes(const FamilyParams& p, Ladder op);

/// Applies the ladder operator to each H2 bound state with nu <= max_nu
/// and checks that it vanishes exactly on the predicted physical zero
/// modes and nowhere else.
Report verify_zero_modes_exact(const FamilyParams& p, Ladder op, int max_nu);

}  // namespace xeop

#endif  // XEOP_OPERATORS_HPP
