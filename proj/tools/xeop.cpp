// xeop: command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "xeop/export.hpp"
#include "xeop/fixtures.hpp"
#include "xeop/numerics.hpp"
#include "xeop/verify.hpp"

namespace {

using namespace xeop;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::optional<int> m1;
    std::optional<int> m2;
    std::optional<int> m;
    int max_nu = 12;
    int max_n = 20;
    int levels = 6;
    std::string format;
    std::string output;
    std::string op = "c";
    double L = 8.0;
    int M = 2000;
    int N = 1200;
    double qL = 9.0;
    double tol = 1e-3;
    int samples = 401;
    bool no_numeric = false;
    long inject_fault = 0;
};

std::filesystem::path output_path(const std::string& out) {
    std::filesystem::path p(out);
    const char* dir = std::getenv("XEOP_OUTPUT_DIR");
    if (p.is_relative() && dir != nullptr && *dir != '\0') {
        p = std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    const auto path = output_path(cfg.output);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << text;
}

FamilyParams family(const Config& cfg) {
    if (!cfg.m1 || !cfg.m2) throw UsageError("--m1 and --m2 are required");
    return {*cfg.m1, *cfg.m2};
}

std::vector<FamilyParams> families_or_grid(const Config& cfg) {
    if (cfg.m1 || cfg.m2) return {family(cfg)};
    return default_grid();
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (cfg.format == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw UsageError("format '" + cfg.format + "' not supported here (use " + list + ")");
}

std::string pretty_poly_block(const std::string& name, const Polynomial& p) {
    return name + " = " + p.to_string() + "\n";
}

int cmd_family(const Config& cfg) {
    require_format(cfg, {"json", "pretty"});
    const ExtendedFamily f = ExtendedFamily::build(family(cfg));
    if (cfg.format == "json") {
        emit(cfg, family_to_json(f, cfg.levels).dump(2) + "\n");
        return kPass;
    }
    const FamilyParams& p = f.params;
    std::ostringstream os;
    os << "family X_" << p.label() << "  mu = " << p.mu() << "  ell = " << p.ell() << "\n";
    os << pretty_poly_block("pH_m1", f.h1) << pretty_poly_block("pH_m2", f.h2) << pretty_poly_block("g", f.g)
       << pretty_poly_block("gbar", f.gbar);
    os << "V2 = " << format_v2(p) << "\n";
    os << "degrees:";
    for (int n : admissible_degrees(p, cfg.levels)) os << " " << n;
    os << " ...\ngaps:";
    for (int n : degree_gaps(p)) os << " " << n;
    os << "\nenergies:";
    for (const auto& l : spectrum(p, Which::H2, cfg.levels)) os << " " << l.energy;
    os << " ...\n";
    emit(cfg, os.str());
    return kPass;
}

int cmd_potential(const Config& cfg) {
    require_format(cfg, {"json", "csv", "pretty"});
    Potential v;
    std::string text;
    Json params;
    if (cfg.m) {
        v = potential_v_minus(*cfg.m);
        text = format_potential(v, primitive_part(pseudo_hermite(*cfg.m)).first);
        params = {{"m", *cfg.m}};
    } else {
        const FamilyParams p = family(cfg);
        v = potential_v2(p);
        text = format_v2(p);
        params = {{"m1", p.m1()}, {"m2", p.m2()}};
    }
    const auto samples = sample_potential(v, cfg.L, cfg.samples);
    if (cfg.format == "pretty") {
        emit(cfg, "V(x) = " + text + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, samples_csv(samples, "x,V"));
    } else {
        Json xs = Json::array();
        Json vs = Json::array();
        for (const auto& [x, y] : samples) {
            xs.push_back(x);
            vs.push_back(y);
        }
        emit(cfg, Json{{"params", params}, {"text", text}, {"rational", v.rest}, {"x", xs}, {"V", vs}}.dump(2) +
                      "\n");
    }
    return kPass;
}

int cmd_polys(const Config& cfg) {
    require_format(cfg, {"json", "csv", "pretty"});
    if (cfg.m) {
        const int m = *cfg.m;
        std::ostringstream os;
        Json rows = Json::array();
        for (int n = 0; n <= cfg.max_n; ++n) {
            if (n >= 1 && n <= m) continue;
            const Polynomial y = eop_first(m, n);
            if (cfg.format == "csv") {
                os << n;
                for (int k = 0; k <= cfg.max_n; ++k) os << "," << (k <= y.degree() ? y[k].get_str() : "");
                os << "\n";
            } else if (cfg.format == "pretty") {
                os << "y_" << n << " = " << y.to_string() << "\n";
            }
            rows.push_back({{"n", n}, {"y", y}, {"text", y.to_string()}});
        }
        if (cfg.format == "json") {
            emit(cfg, Json{{"params", {{"m", m}}}, {"polynomials", rows}}.dump(2) + "\n");
        } else if (cfg.format == "csv") {
            std::string header = "n";
            for (int k = 0; k <= cfg.max_n; ++k) header += ",c" + std::to_string(k);
            emit(cfg, header + "\n" + os.str());
        } else {
            emit(cfg, os.str());
        }
        return kPass;
    }
    const FamilyParams p = family(cfg);
    if (cfg.format == "csv") {
        emit(cfg, eop_table_csv(p, cfg.max_n));
    } else if (cfg.format == "json") {
        emit(cfg, eop_table_json(p, cfg.max_n).dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (int n = 0; n <= cfg.max_n; ++n) {
            if (is_admissible_degree(p, n)) os << "y_" << n << " = " << eop_second(p, n).to_string() << "\n";
        }
        emit(cfg, os.str());
    }
    return kPass;
}

int cmd_spectrum(const Config& cfg) {
    require_format(cfg, {"json", "csv", "pretty"});
    const FdGrid grid{cfg.L, cfg.M};
    std::vector<std::pair<int, long>> exact;  // (nu, E)
    Potential v;
    Json params;
    if (cfg.m) {
        v = potential_v_minus(*cfg.m);
        exact.emplace_back(-*cfg.m - 1, -2L * *cfg.m - 1);
        for (int nu = 0; static_cast<int>(exact.size()) < cfg.levels; ++nu) exact.emplace_back(nu, 2L * nu + 1);
        params = {{"m", *cfg.m}};
    } else {
        const FamilyParams p = family(cfg);
        v = potential_v2(p);
        for (const auto& l : spectrum(p, Which::H2, cfg.levels)) exact.emplace_back(l.nu, l.energy);
        params = {{"m1", p.m1()}, {"m2", p.m2()}};
    }
    const auto fd = fd_spectrum(v, grid, cfg.levels);
    double worst = 0.0;
    for (std::size_t i = 0; i < fd.size(); ++i) worst = std::max(worst, std::abs(fd[i] - exact[i].second));
    const bool ok = worst <= cfg.tol;
    std::ostringstream os;
    if (cfg.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < fd.size(); ++i) {
            rows.push_back({{"nu", exact[i].first}, {"exact", exact[i].second}, {"fd", fd[i]}});
        }
        os << Json{{"params", params},
                   {"grid", {{"L", cfg.L}, {"M", cfg.M}}},
                   {"levels", rows},
                   {"max_error", worst},
                   {"tolerance", cfg.tol},
                   {"passed", ok}}
                  .dump(2)
           << "\n";
    } else if (cfg.format == "csv") {
        os << "nu,exact,fd\n";
        for (std::size_t i = 0; i < fd.size(); ++i) {
            os << exact[i].first << "," << exact[i].second << "," << double_to_string(fd[i]) << "\n";
        }
    } else {
        os << std::setw(6) << "nu" << std::setw(8) << "exact" << std::setw(18) << "fd" << "\n";
        for (std::size_t i = 0; i < fd.size(); ++i) {
            os << std::setw(6) << exact[i].first << std::setw(8) << exact[i].second << std::setw(18) << std::fixed
               << std::setprecision(8) << fd[i] << "\n";
        }
        os << std::scientific << std::setprecision(3) << "max |fd - exact| = " << worst << " (tolerance " << cfg.tol
           << ")\n";
    }
    emit(cfg, os.str());
    return ok ? kPass : kFail;
}

int cmd_ladder(const Config& cfg) {
    require_format(cfg, {"json", "csv", "pretty"});
    const FamilyParams p = family(cfg);
    const Ladder op = ladder_from_string(cfg.op);
    const PhaPolys pha = pha_polys(p);
    const bool c_like = op == Ladder::c || op == Ladder::c_dagger;
    const PhaSpec& poly = c_like ? pha.Q : pha.P;
    std::vector<LadderAction> rows;
    for (const auto& l : spectrum(p, Which::H2, cfg.max_nu + 3)) {
        switch (op) {
            case Ladder::c: rows.push_back(ladder_c_action(p, l.nu)); break;
            case Ladder::c_dagger: rows.push_back(ladder_c_dagger_action(p, l.nu)); break;
            case Ladder::b: rows.push_back(standard_b_action(p, l.nu)); break;
            case Ladder::b_dagger: rows.push_back(standard_b_dagger_action(p, l.nu)); break;
        }
    }
    const ZeroModes zm = zero_modes(p, op);
    std::ostringstream os;
    if (cfg.format == "json") {
        Json actions = Json::array();
        for (const auto& a : rows) actions.push_back(ladder_action_json(a, p));
        Json physical = Json::array();
        for (const auto& z : zm.physical) physical.push_back({{"nu", z.nu}, {"energy", z.energy}});
        os << Json{{"params", {{"m1", p.m1()}, {"m2", p.m2()}}},
                   {"operator", to_string(op)},
                   {"pha_polynomial", poly.poly},
                   {"pha_roots", poly.roots},
                   {"zero_modes", {{"physical", physical}, {"formal", zm.formal}}},
                   {"actions", actions}}
                  .dump(2)
           << "\n";
    } else if (cfg.format == "csv") {
        os << "nu,energy,zero,target_nu,coefficient_squared,coefficient\n";
        for (const auto& a : rows) {
            os << a.nu << "," << energy_of(p, a.nu) << "," << (a.zero ? 1 : 0) << ","
               << (a.zero ? "" : std::to_string(a.target_nu)) << ","
               << (a.zero ? std::string("0") : a.coefficient_squared.get_str()) << ","
               << double_to_string(a.coefficient) << "\n";
        }
    } else {
        os << to_string(op) << " on X_" << p.label() << " states\n";
        os << (c_like ? "Q" : "P") << "(E) = " << poly.poly.to_string("E") << "\n";
        os << "physical zero modes (E):";
        for (const auto& z : zm.physical) os << " " << z.energy;
        os << "\n";
        os << std::setw(6) << "nu" << std::setw(8) << "E" << std::setw(10) << "target" << std::setw(22) << "coef^2"
           << std::setw(20) << "coef" << "\n";
        for (const auto& a : rows) {
            os << std::setw(6) << a.nu << std::setw(8) << energy_of(p, a.nu);
            if (a.zero) {
                os << std::setw(10) << "zero" << "\n";
                continue;
            }
            os << std::setw(10) << a.target_nu << std::setw(22) << a.coefficient_squared.get_str() << std::setw(20)
               << std::setprecision(12) << a.coefficient << "\n";
        }
    }
    emit(cfg, os.str());
    return kPass;
}

int cmd_verify(const Config& cfg) {
    require_format(cfg, {"json", "pretty"});
    VerifyOptions opt;
    opt.max_n = cfg.max_n;
    opt.max_nu = cfg.max_nu;
    opt.numeric = !cfg.no_numeric;
    opt.grid = {cfg.L, cfg.M};
    opt.quadrature.half_width = cfg.qL;
    opt.quadrature.nodes = cfg.N;
    opt.fd_tolerance = cfg.tol;
    opt.fixture_offset = cfg.inject_fault;
    Report rep;
    if (!cfg.m1 && !cfg.m2) rep.merge(verify_hermite_identities(12));
    for (const auto& p : families_or_grid(cfg)) rep.merge(verify_family(p, opt));
    if (cfg.format == "json") {
        emit(cfg, Json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& c : rep.checks) {
            if (c.passed) continue;
            os << "FAIL " << c.params << " " << c.name;
            if (!c.detail.empty()) os << " [" << c.detail << "]";
            if (c.witness) os << "\n     residual numerator: " << c.witness->to_string();
            os << "\n";
        }
        os << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
        emit(cfg, os.str());
    }
    return rep.all_passed() ? kPass : kFail;
}

int cmd_export(const Config& cfg) {
    std::filesystem::path dir;
    if (!cfg.output.empty()) {
        dir = output_path(cfg.output);
    } else if (const char* env = std::getenv("XEOP_OUTPUT_DIR"); env != nullptr && *env != '\0') {
        dir = env;
    } else {
        dir = "xeop-export";
    }
    const auto grid = families_or_grid(cfg);
    const auto files = export_bundle(grid, dir, cfg.max_n, cfg.levels);
    bool round_trip = true;
    for (const auto& path : files) {
        if (path.extension() != ".json") continue;
        std::ifstream is(path);
        const Json j = Json::parse(is);
        const ExtendedFamily back = family_from_json(j);
        const ExtendedFamily fresh = ExtendedFamily::build(back.params);
        const bool same = back.h1 == fresh.h1 && back.h2 == fresh.h2 && back.g == fresh.g &&
                          back.gbar == fresh.gbar && back.v2_rational == fresh.v2_rational;
        if (!same) {
            std::cerr << "round trip mismatch in " << path << "\n";
            round_trip = false;
        }
    }
    for (const auto& path : files) std::cout << path.string() << "\n";
    return round_trip ? kPass : kFail;
}

void add_family_options(CLI::App* sub, Config& cfg) {
    sub->add_option("--m1", cfg.m1, "even seed degree m1 >= 2");
    sub->add_option("--m2", cfg.m2, "odd seed degree m2 > m1");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type III Hermite X_{m1,m2} exceptional orthogonal polynomials and their ladder operators"};
    app.require_subcommand(1);
    Config cfg;

    auto* fam = app.add_subcommand("family", "g, gbar, V2, degree set and spectrum of one family");
    add_family_options(fam, cfg);
    fam->add_option("--levels", cfg.levels, "number of degrees and levels listed");

    auto* pot = app.add_subcommand("potential", "exact V2 (or V^(-) with --m) and sampled values");
    add_family_options(pot, cfg);
    pot->add_option("--m", cfg.m, "first-order mode: even seed degree m");
    pot->add_option("--L", cfg.L, "sampling half-width");
    pot->add_option("--samples", cfg.samples, "number of sample points");

    auto* polys = app.add_subcommand("polys", "EOP members up to a degree");
    add_family_options(polys, cfg);
    polys->add_option("--m", cfg.m, "first-order mode: X_m members");
    polys->add_option("--max-n", cfg.max_n, "largest degree");

    auto* spec = app.add_subcommand("spectrum", "exact energies next to finite-difference eigenvalues");
    add_family_options(spec, cfg);
    spec->add_option("--m", cfg.m, "first-order mode: V^(-) for even m");
    spec->add_option("--levels", cfg.levels, "number of levels");
    spec->add_option("--L", cfg.L, "grid half-width");
    spec->add_option("--M", cfg.M, "grid intervals (>= 400)");
    spec->add_option("--tol", cfg.tol, "absolute tolerance for the exit status");

    auto* lad = app.add_subcommand("ladder", "action of c, c^+, b or b^+ on the H2 eigenstates");
    add_family_options(lad, cfg);
    lad->add_option("--op", cfg.op, "c, c_dagger, b or b_dagger");
    lad->add_option("--max-nu", cfg.max_nu, "largest nu");

    auto* ver = app.add_subcommand("verify", "exact and numeric verification suite (default grid if no family)");
    add_family_options(ver, cfg);
    ver->add_option("--max-n", cfg.max_n, "largest EOP degree checked");
    ver->add_option("--max-nu", cfg.max_nu, "largest nu for ladder checks");
    ver->add_option("--L", cfg.L, "finite-difference half-width");
    ver->add_option("--M", cfg.M, "finite-difference intervals");
    ver->add_option("--N", cfg.N, "quadrature nodes");
    ver->add_option("--quad-L", cfg.qL, "quadrature half-width");
    ver->add_option("--tol", cfg.tol, "finite-difference tolerance");
    ver->add_flag("--no-numeric", cfg.no_numeric, "exact checks only");
    ver->add_option("--inject-fault", cfg.inject_fault)->group("");

    auto* exp = app.add_subcommand("export", "family JSON, EOP CSV and V2 samples for a grid");
    add_family_options(exp, cfg);
    exp->add_option("--max-n", cfg.max_n, "largest EOP degree");
    exp->add_option("--levels", cfg.levels, "levels listed in the JSON");

    for (auto* sub : {fam, pot, polys, spec, lad, ver}) {
        sub->add_option("--format", cfg.format, "json, csv or pretty");
        sub->add_option("--output", cfg.output, "output file (relative paths go under $XEOP_OUTPUT_DIR)");
    }
    exp->add_option("--output", cfg.output, "output directory (default $XEOP_OUTPUT_DIR or ./xeop-export)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (cfg.format.empty()) cfg.format = ver->parsed() ? "json" : "pretty";
    try {
        if (fam->parsed()) return cmd_family(cfg);
        if (pot->parsed()) return cmd_potential(cfg);
        if (polys->parsed()) return cmd_polys(cfg);
        if (spec->parsed()) return cmd_spectrum(cfg);
        if (lad->parsed()) return cmd_ladder(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (exp->parsed()) return cmd_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
