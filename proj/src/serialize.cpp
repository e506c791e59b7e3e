#include "xeop/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace xeop {

Json rational_to_json(const Rational& q) {
    return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw std::invalid_argument("rational must be a [numerator, denominator] string pair");
    }
    const BigInt num(j[0].get<std::string>());
    const BigInt den(j[1].get<std::string>());
    if (den <= 0) {
        throw std::invalid_argument("rational denominator must be positive");
    }
    Rational q(num, den);
    q.canonicalize();
    if (q.get_den() != den) {
        throw std::invalid_argument("rational is not in lowest terms: " + j.dump());
    }
    return q;
}

void to_json(Json& j, const Polynomial& p) {
    j = Json::array();
    for (const auto& c : p.coefficients()) {
        j.push_back(rational_to_json(c));
    }
}

void from_json(const Json& j, Polynomial& p) {
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial must be a JSON array");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        coeffs.push_back(rational_from_json(c));
    }
    p = Polynomial(std::move(coeffs));
    if (static_cast<std::size_t>(p.degree() + 1) != j.size()) {
        throw std::invalid_argument("polynomial has trailing zero coefficients");
    }
}

void to_json(Json& j, const RationalFunction& f) {
    j = Json{{"num", f.num()}, {"den", f.den()}};
}

void from_json(const Json& j, RationalFunction& f) {
    f = RationalFunction(j.at("num").get<Polynomial>(), j.at("den").get<Polynomial>());
}

std::string double_to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) {
        throw std::runtime_error("double_to_string failed");
    }
    return std::string(buf, end);
}

void to_json(Json& j, const QuasiGaussian& f) {
    j = Json{{"r", f.r}, {"s", f.s}, {"scale", double_to_string(f.scale)}};
}

void from_json(const Json& j, QuasiGaussian& f) {
    const std::string scale = j.at("scale").get<std::string>();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(scale.data(), scale.data() + scale.size(), v);
    if (ec != std::errc{} || ptr != scale.data() + scale.size()) {
        throw std::invalid_argument("bad scale string: " + scale);
    }
    f = QuasiGaussian(j.at("r").get<RationalFunction>(), j.at("s").get<int>(), v);
}

}  // namespace xeop
