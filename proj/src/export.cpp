#include "xeop/export.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "xeop/numerics.hpp"

namespace xeop {

namespace {

bool is_monomial(const Polynomial& q) {
    int nonzero = 0;
    for (const auto& c : q.coefficients()) {
        if (sgn(c) != 0) ++nonzero;
    }
    return nonzero == 1;
}

std::string numerator_text(const Polynomial& magnitude_primitive, const Rational& magnitude) {
    const bool unit = magnitude == 1;
    if (is_monomial(magnitude_primitive)) {
        const int d = magnitude_primitive.degree();
        std::string s = unit && d > 0 ? "" : magnitude.get_str();
        if (d >= 1) s += "x";
        if (d >= 2) s += "^" + std::to_string(d);
        return s;
    }
    return (unit ? "" : magnitude.get_str()) + "(" + magnitude_primitive.to_string() + ")";
}

void append_signed(std::string& out, int sign, const std::string& body) {
    out += sign < 0 ? " - " : " + ";
    out += body;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("cannot write " + path.string());
    }
    os << text;
}

}  // namespace

std::string format_potential(const Potential& v, const Polynomial& base) {
    std::string out = "x^2";
    Polynomial constant_part;
    const std::string base_text = "(" + base.to_string() + ")";
    for (const auto& [a, k] : base_expansion(v.rest, base)) {
        if (k == 0) {
            constant_part = a;
            continue;
        }
        const auto [q, c] = primitive_part(a);
        std::string body = numerator_text(q, abs(c)) + "/" + base_text;
        if (k >= 2) body += "^" + std::to_string(k);
        append_signed(out, sgn(c), body);
    }
    if (!constant_part.is_zero()) {
        if (constant_part.is_constant()) {
            append_signed(out, sgn(constant_part[0]), Rational(abs(constant_part[0])).get_str());
        } else {
            append_signed(out, 1, "(" + constant_part.to_string() + ")");
        }
    }
    return out;
}

std::string format_v2(const FamilyParams& p) {
    return format_potential(potential_v2(p), primitive_part(wronskian_g(p)).first);
}

Json family_to_json(const ExtendedFamily& f, int levels) {
    const FamilyParams& p = f.params;
    Json spec = Json::array();
    for (const auto& l : spectrum(p, Which::H2, levels)) {
        spec.push_back({{"nu", l.nu}, {"energy", l.energy}});
    }
    return Json{{"params", {{"m1", p.m1()}, {"m2", p.m2()}}},
                {"mu", p.mu()},
                {"ell", p.ell()},
                {"h1", f.h1},
                {"h2", f.h2},
                {"g", f.g},
                {"gbar", f.gbar},
                {"v2_rational", f.v2_rational},
                {"v2_text", format_v2(p)},
                {"degrees", admissible_degrees(p, levels)},
                {"gaps", degree_gaps(p)},
                {"spectrum", spec}};
}

ExtendedFamily family_from_json(const Json& j) {
    const FamilyParams p(j.at("params").at("m1").get<int>(), j.at("params").at("m2").get<int>());
    return {p,
            j.at("h1").get<Polynomial>(),
            j.at("h2").get<Polynomial>(),
            j.at("g").get<Polynomial>(),
            j.at("gbar").get<Polynomial>(),
            j.at("v2_rational").get<RationalFunction>()};
}

std::string eop_table_csv(const FamilyParams& p, int max_n) {
    std::ostringstream os;
    os << "n";
    for (int k = 0; k <= max_n; ++k) os << ",c" << k;
    os << "\n";
    for (int n = 0; n <= max_n; ++n) {
        if (!is_admissible_degree(p, n)) continue;
        const Polynomial y = eop_second(p, n);
        os << n;
        for (int k = 0; k <= max_n; ++k) {
            os << ",";
            os << (k <= y.degree() ? y[k].get_str() : "0");
        }
        os << "\n";
    }
    return os.str();
}

Json eop_table_json(const FamilyParams& p, int max_n) {
    Json rows = Json::array();
    for (int n = 0; n <= max_n; ++n) {
        if (!is_admissible_degree(p, n)) continue;
        const Polynomial y = eop_second(p, n);
        rows.push_back({{"n", n}, {"y", y}, {"text", y.to_string()}});
    }
    return Json{{"params", {{"m1", p.m1()}, {"m2", p.m2()}}}, {"polynomials", rows}};
}

std::string samples_csv(const std::vector<std::pair<double, double>>& samples, const std::string& header) {
    std::ostringstream os;
    os << header << "\n";
    for (const auto& [x, y] : samples) {
        os << double_to_string(x) << "," << double_to_string(y) << "\n";
    }
    return os.str();
}

Json ladder_action_json(const LadderAction& a, const FamilyParams& p) {
    Json j{{"nu", a.nu}, {"energy", energy_of(p, a.nu)}, {"zero", a.zero}};
    if (a.zero) {
        j["target_nu"] = nullptr;
        j["coefficient_squared"] = "0";
        j["coefficient"] = 0.0;
    } else {
        j["target_nu"] = a.target_nu;
        j["ratio"] = a.exact_ratio.get_str();
        j["coefficient_squared"] = a.coefficient_squared.get_str();
        j["coefficient"] = a.coefficient;
    }
    return j;
}

std::vector<std::filesystem::path> export_bundle(const std::vector<FamilyParams>& grid,
                                                 const std::filesystem::path& dir, int max_n, int levels) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    for (const auto& p : grid) {
        const std::string tag = std::to_string(p.m1()) + "_" + std::to_string(p.m2());
        const auto family = dir / ("family_" + tag + ".json");
        write_file(family, family_to_json(ExtendedFamily::build(p), levels).dump(2) + "\n");
        const auto eop = dir / ("eop_" + tag + ".csv");
        write_file(eop, eop_table_csv(p, max_n));
        const auto v2 = dir / ("v2_" + tag + ".csv");
        write_file(v2, samples_csv(sample_potential(potential_v2(p), 5.0, 401), "x,V"));
        written.insert(written.end(), {family, eop, v2});
    }
    return written;
}

}  // namespace xeop
