#ifndef XEOP_FIXTURES_HPP
#define XEOP_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "xeop/families.hpp"

namespace xeop {

/// Reference closed form of V^(2) for one example family, entered term by
/// term as quoted (no simplification).
struct PotentialFixture {
    int m1;
    int m2;
    Potential v;
    std::string text;
};

/// The five reference families (2,3), (2,5), (2,7), (4,5), (4,7).
const std::vector<PotentialFixture>& reference_potentials();

/// Fixture for p, if p is one of the reference families.  A nonzero
/// `constant_offset` shifts the additive constant (fault injection).
std::optional<Potential> reference_potential(const FamilyParams& p, long constant_offset = 0);

/// The default parameter grid {(2,3), (2,5), (2,7), (4,5), (4,7)}.
std::vector<FamilyParams> default_grid();

/// Normalization N^2 sqrt(pi) of the H2 eigenstates as quoted alongside the
/// reference wavefunctions.  The nu = -m1-1 and nu >= 0 entries are off by 4 (m2-m1)^2
/// and 4 respectively; see norm_squared_sqrt_pi for the values that
/// actually normalize.
Rational quoted_norm_squared_sqrt_pi(const FamilyParams& p, int nu);

}  // namespace xeop

#endif  // XEOP_FIXTURES_HPP
