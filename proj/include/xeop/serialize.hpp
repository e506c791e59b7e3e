#ifndef XEOP_SERIALIZE_HPP
#define XEOP_SERIALIZE_HPP

#include <json.hpp>

#include "xeop/quasi_gaussian.hpp"

// Wire formats:
//   Rational          ["<numerator>", "<denominator>"]
//   Polynomial        [[num, den], ...]  ascending degree, [] for zero
//   RationalFunction  {"num": Polynomial, "den": Polynomial}
//   QuasiGaussian     {"r": RationalFunction, "s": -1|0|1, "scale": "<decimal>"}
// Integers travel as decimal strings so that arbitrary precision survives.

namespace xeop {

using Json = nlohmann::json;

void to_json(Json& j, const Polynomial& p);
void from_json(const Json& j, Polynomial& p);

void to_json(Json& j, const RationalFunction& f);
void from_json(const Json& j, RationalFunction& f);

void to_json(Json& j, const QuasiGaussian& f);
void from_json(const Json& j, QuasiGaussian& f);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Shortest decimal string that parses back to the same double.
std::string double_to_string(double v);

}  // namespace xeop

#endif  // XEOP_SERIALIZE_HPP
