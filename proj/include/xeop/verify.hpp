#ifndef XEOP_VERIFY_HPP
#define XEOP_VERIFY_HPP

#include "xeop/numerics.hpp"
#include "xeop/operators.hpp"
#include "xeop/report.hpp"

namespace xeop {

struct VerifyOptions {
    int max_n = 20;   // EOP degrees checked against their equation
    int max_nu = 12;  // ladder and intertwining states
    bool numeric = true;
    QuadratureSpec quadrature{};
    FdGrid grid{8.0, 2000};
    int fd_levels = 5;
    double fd_tolerance = 1e-3;
    int gram_size = 8;
    double gram_tolerance = 1e-7;
    double ratio_tolerance = 1e-6;
    /// Test hook: shifts the reference fixture's constant by this amount.
    long fixture_offset = 0;
};

/// V^(2) against the reference fixture (empty report for other families).
Report verify_potential_fixture(const FamilyParams& p, long constant_offset = 0);

/// Hermite and pseudo-Hermite recurrences, derivative rules and
/// differential equations for n <= max_n.
Report verify_hermite_identities(int max_n);

/// g' + 2xg = 2(m2-m1) H_m1 H_m2 and g'' + 2xg' - 2 mu g = 2 gbar, plus
/// the structural invariants of g.
Report verify_wronskian_identities(const FamilyParams& p);

/// X_m equation residual for all admissible n <= max_n.
Report verify_diffeq_first(int m, int max_n);
/// X_{m1,m2} equation residual for all admissible n <= max_n.
Report verify_diffeq_second(const FamilyParams& p, int max_n);

/// c and c^+ on every state nu <= max_nu: zero pattern, targets, squared
/// coefficients against the closed forms and against Q.
Report verify_ladder_c(const FamilyParams& p, int max_nu);
/// b and b^+ on every state nu <= max_nu against P.
Report verify_ladder_b(const FamilyParams& p, int max_nu);

/// Physical zero modes from the PHA roots against the stated lists, for
/// b, b^+, c, c^+.
Report verify_zero_mode_census(const FamilyParams& p);

/// Orthonormality, finite-difference spectrum and the quadrature norm of
/// c psi against Q.
Report verify_numerics(const FamilyParams& p, const VerifyOptions& opt);

/// Everything above for one family.
Report verify_family(const FamilyParams& p, const VerifyOptions& opt = {});

}  // namespace xeop

#endif  // XEOP_VERIFY_HPP
