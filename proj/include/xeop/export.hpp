#ifndef XEOP_EXPORT_HPP
#define XEOP_EXPORT_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "xeop/families.hpp"
#include "xeop/operators.hpp"
#include "xeop/serialize.hpp"

namespace xeop {

/// "x^2 + a_1/base + a_2/base^2 + ... + c", each numerator written as
/// content(primitive part), e.g.
///   x^2 + 32x^2/(4x^4 + 3) - 384x^2/(4x^4 + 3)^2 + 2
std::string format_potential(const Potential& v, const Polynomial& base);

/// V^(2) in that layout, over the primitive part of g.
std::string format_v2(const FamilyParams& p);

/// {params, mu, ell, h1, h2, g, gbar, v2_rational, degrees, gaps, spectrum}
Json family_to_json(const ExtendedFamily& f, int levels = 8);
/// Rebuilds the exact objects stored by family_to_json (no recomputation).
ExtendedFamily family_from_json(const Json& j);

/// CSV header "n,c0,c1,..." then one row per admissible degree n <= max_n;
/// coefficients as exact rationals, ascending powers.
std::string eop_table_csv(const FamilyParams& p, int max_n);
Json eop_table_json(const FamilyParams& p, int max_n);

std::string samples_csv(const std::vector<std::pair<double, double>>& samples, const std::string& header);

/// {nu, energy, zero, target_nu, ratio, coefficient_squared, coefficient}
Json ladder_action_json(const LadderAction& a, const FamilyParams& p);

/// Writes family JSON, EOP CSV and V^(2) samples for every family of the
/// grid into `dir`; returns the paths written.
std::vector<std::filesystem::path> export_bundle(const std::vector<FamilyParams>& grid,
                                                 const std::filesystem::path& dir, int max_n, int levels);

}  // namespace xeop

#endif  // XEOP_EXPORT_HPP
