#include "xeop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "xeop/fixtures.hpp"
#include "xeop/sturm.hpp"

namespace xeop {

namespace {

CheckResult check(std::string name, std::string params, bool ok, std::string detail = {}) {
    return {std::move(name), std::move(params), ok, std::nullopt, std::move(detail)};
}

std::string n_tag(int n) { return "n=" + std::to_string(n); }
std::string nu_tag(int nu) { return "nu=" + std::to_string(nu); }

std::string show(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::vector<EnergyLevel> states_up_to(const FamilyParams& p, int max_nu) {
    return spectrum(p, Which::H2, max_nu + 3);
}

std::set<long> energies(const std::vector<EnergyLevel>& levels) {
    std::set<long> out;
    for (const auto& l : levels) out.insert(l.energy);
    return out;
}

std::string set_text(const std::set<long>& s) {
    std::string out = "{";
    for (long v : s) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(v);
    }
    return out + "}";
}

}  // namespace

Report verify_potential_fixture(const FamilyParams& p, long constant_offset) {
    Report rep;
    const auto fixture = reference_potential(p, constant_offset);
    if (!fixture) return rep;
    rep.add(exact_zero_check("V2 reference example", p.label(), potential_v2(p).rest - fixture->rest,
                             "computed minus reference"));
    return rep;
}

Report verify_hermite_identities(int max_n) {
    Report rep;
    const Polynomial x = Polynomial::x();
    for (int n = 0; n <= max_n; ++n) {
        const Polynomial h = hermite(n);
        const Polynomial ph = pseudo_hermite(n);
        if (n >= 1) {
            rep.add(exact_zero_check("H'_n = 2n H_{n-1}", n_tag(n),
                                     derivative(h) - Rational(2 * n) * hermite(n - 1)));
            rep.add(exact_zero_check("H_{n+1} = 2x H_n - 2n H_{n-1}", n_tag(n),
                                     hermite(n + 1) - Rational(2) * x * h + Rational(2 * n) * hermite(n - 1)));
            rep.add(exact_zero_check("pH'_n = 2n pH_{n-1}", n_tag(n),
                                     derivative(ph) - Rational(2 * n) * pseudo_hermite(n - 1)));
            rep.add(exact_zero_check("pH_{n+1} = 2x pH_n + 2n pH_{n-1}", n_tag(n),
                                     pseudo_hermite(n + 1) - Rational(2) * x * ph -
                                         Rational(2 * n) * pseudo_hermite(n - 1)));
        }
        rep.add(exact_zero_check("H'' - 2x H' + 2n H = 0", n_tag(n),
                                 derivative(h, 2) - Rational(2) * x * derivative(h) + Rational(2 * n) * h));
        rep.add(exact_zero_check("pH'' + 2x pH' - 2n pH = 0", n_tag(n),
                                 derivative(ph, 2) + Rational(2) * x * derivative(ph) - Rational(2 * n) * ph));
    }
    return rep;
}

Report verify_wronskian_identities(const FamilyParams& p) {
    Report rep;
    const Polynomial x = Polynomial::x();
    const Polynomial g = wronskian_g(p);
    const Polynomial h1 = pseudo_hermite(p.m1());
    const Polynomial h2 = pseudo_hermite(p.m2());
    rep.add(exact_zero_check("g' + 2x g = 2(m2-m1) pH_m1 pH_m2", p.label(),
                             derivative(g) + Rational(2) * x * g - Rational(2 * p.ell()) * h1 * h2));
    rep.add(exact_zero_check("g'' + 2x g' - 2 mu g = 2 gbar", p.label(),
                             derivative(g, 2) + Rational(2) * x * derivative(g) - Rational(2 * p.mu()) * g -
                                 Rational(2) * gbar(p)));
    bool built = true;
    std::string why;
    try {
        ExtendedFamily::build(p);
    } catch (const std::logic_error& e) {
        built = false;
        why = e.what();
    }
    rep.add(check("g degree, leading coefficient, no real zeros", p.label(), built, why));
    rep.add(check("pH_m1 has no real zeros", p.label(), count_real_roots(h1) == 0));
    rep.add(check("pH_m2 has exactly one real zero", p.label(), count_real_roots(h2) == 1));
    rep.add(check("codimension equals mu", p.label(), static_cast<int>(degree_gaps(p).size()) == p.mu(),
                  std::to_string(degree_gaps(p).size()) + " gaps"));
    return rep;
}

Report verify_diffeq_first(int m, int max_n) {
    Report rep;
    const std::string params = "m=" + std::to_string(m);
    for (int n = 0; n <= max_n; ++n) {
        if (n >= 1 && n <= m) continue;
        const Polynomial y = eop_first(m, n);
        rep.add(check("deg y_n = n (X_m)", params, y.degree() == n, n_tag(n)));
        rep.add(exact_zero_check("X_m differential equation", params, diffeq_residual_first(m, n), n_tag(n)));
    }
    return rep;
}

Report verify_diffeq_second(const FamilyParams& p, int max_n) {
    Report rep;
    for (int n = 0; n <= max_n; ++n) {
        if (!is_admissible_degree(p, n)) continue;
        const Polynomial y = eop_second(p, n);
        rep.add(check("deg y_n = n (X_m1,m2)", p.label(), y.degree() == n, n_tag(n)));
        rep.add(exact_zero_check("X_m1,m2 differential equation", p.label(), diffeq_residual_second(p, n),
                                 n_tag(n)));
    }
    return rep;
}

Report verify_ladder_c(const FamilyParams& p, int max_nu) {
    Report rep;
    const PhaPolys pha = pha_polys(p);
    const int m1 = p.m1();
    const int m2 = p.m2();
    const int l = p.ell();
    for (const auto& level : states_up_to(p, max_nu)) {
        const int nu = level.nu;
        const LadderAction c = ladder_c_action(p, nu);
        const bool zero_expected = nu == -m2 - 1 || (nu >= 0 && nu < l);
        rep.add(check("c zero pattern", p.label(), c.zero == zero_expected,
                      nu_tag(nu) + (c.zero ? " annihilated" : " not annihilated")));
        if (!c.zero) {
            const int expected_target = nu == -m1 - 1 ? -m2 - 1 : nu - l;
            rep.add(check("c target state", p.label(), c.target_nu == expected_target,
                          nu_tag(nu) + " -> " + std::to_string(c.target_nu)));
            const auto closed = c_action_coefficient_squared(p, nu);
            const auto product = c_action_coefficient_squared_product_form(p, nu);
            const Rational q = pha.Q.poly(Rational(level.energy));
            rep.add(check("c coefficient^2 closed form", p.label(), closed && *closed == c.coefficient_squared,
                          nu_tag(nu) + " exact " + c.coefficient_squared.get_str()));
            rep.add(check("c coefficient^2 product form", p.label(), product && *product == c.coefficient_squared,
                          nu_tag(nu)));
            rep.add(check("||c psi||^2 = Q(E)", p.label(), q == c.coefficient_squared,
                          nu_tag(nu) + " Q(E)=" + q.get_str() + ", coefficient " + show(c.coefficient)));
        }

        const LadderAction cd = ladder_c_dagger_action(p, nu);
        rep.add(check("c^+ zero pattern", p.label(), cd.zero == (nu == -m1 - 1),
                      nu_tag(nu) + (cd.zero ? " annihilated" : " not annihilated")));
        if (!cd.zero) {
            const Rational q = pha.Q.poly(Rational(level.energy + 2 * l));
            rep.add(check("||c^+ psi||^2 = Q(E + 2l)", p.label(), q == cd.coefficient_squared,
                          nu_tag(nu) + " -> " + std::to_string(cd.target_nu)));
        }
    }
    return rep;
}

Report verify_ladder_b(const FamilyParams& p, int max_nu) {
    Report rep;
    const PhaPolys pha = pha_polys(p);
    const Supercharges s = build_supercharges(p);
    rep.add(check("order of b", p.label(), s.b().order() == 5, std::to_string(s.b().order())));
    rep.add(check("order of c", p.label(), s.c().order() == p.ell() + 2, std::to_string(s.c().order())));
    rep.add(check("P has order 5", p.label(), pha.P.poly.degree() == 5));
    rep.add(check("Q has order l + 2", p.label(), pha.Q.poly.degree() == p.ell() + 2));
    for (const auto& level : states_up_to(p, max_nu)) {
        const int nu = level.nu;
        const LadderAction b = standard_b_action(p, nu);
        const Rational pe = pha.P.poly(Rational(level.energy));
        if (b.zero) {
            rep.add(check("b zero mode is a root of P", p.label(), pe == 0, nu_tag(nu)));
        } else {
            rep.add(check("||b psi||^2 = P(E)", p.label(), pe == b.coefficient_squared && b.target_nu == nu - 1,
                          nu_tag(nu) + " P(E)=" + pe.get_str()));
            const double rel = std::abs(b.coefficient * b.coefficient - pe.get_d()) / std::abs(pe.get_d());
            rep.add(check("b coefficient with norm scales", p.label(), rel < 1e-10, nu_tag(nu) + " rel " + show(rel)));
        }
        const LadderAction bd = standard_b_dagger_action(p, nu);
        const Rational pe2 = pha.P.poly(Rational(level.energy + 2));
        if (bd.zero) {
            rep.add(check("b^+ zero mode is a root of P(E + 2)", p.label(), pe2 == 0, nu_tag(nu)));
        } else {
            rep.add(check("||b^+ psi||^2 = P(E + 2)", p.label(),
                          pe2 == bd.coefficient_squared && bd.target_nu == nu + 1, nu_tag(nu)));
        }
    }
    return rep;
}

Report verify_zero_mode_census(const FamilyParams& p) {
    Report rep;
    const long m1 = p.m1();
    const long m2 = p.m2();
    const long l = p.ell();
    std::set<long> c_expected{energy_of(p, static_cast<int>(-m2 - 1))};
    for (int nu = 0; nu < l; ++nu) c_expected.insert(energy_of(p, nu));
    const std::pair<Ladder, std::set<long>> expected[] = {
        {Ladder::b, {m1 - m2, m2 - m1, m1 + m2 + 2}},
        {Ladder::b_dagger, {m1 - m2, m2 - m1}},
        {Ladder::c, c_expected},
        {Ladder::c_dagger, {l}},
    };
    for (const auto& [op, want] : expected) {
        const auto got = energies(zero_modes(p, op).physical);
        rep.add(check("zero-mode census " + to_string(op), p.label(), got == want,
                      "physical " + set_text(got) + ", expected " + set_text(want)));
    }
    rep.add(check("c zero modes number l + 1", p.label(), c_expected.size() == static_cast<std::size_t>(l + 1)));
    return rep;
}

Report verify_numerics(const FamilyParams& p, const VerifyOptions& opt) {
    Report rep;
    const double dev = identity_deviation(gram_matrix(p, opt.gram_size, opt.quadrature));
    rep.add(check("Gram matrix is the identity", p.label(), dev <= opt.gram_tolerance,
                  std::to_string(opt.gram_size) + " states, max deviation " + show(dev)));

    const auto fd = fd_spectrum(potential_v2(p), opt.grid, opt.fd_levels);
    const auto exact = spectrum(p, Which::H2, opt.fd_levels);
    double worst = 0.0;
    for (std::size_t i = 0; i < fd.size(); ++i) {
        worst = std::max(worst, std::abs(fd[i] - static_cast<double>(exact[i].energy)));
    }
    rep.add(check("finite-difference spectrum of V2", p.label(), worst <= opt.fd_tolerance,
                  std::to_string(opt.fd_levels) + " levels, max error " + show(worst)));

    const PhaPolys pha = pha_polys(p);
    for (int nu = p.ell(); nu <= p.ell() + 3; ++nu) {
        const double q = pha.Q.poly(Rational(energy_of(p, nu))).get_d();
        const double ratio = c_norm_ratio(p, nu, opt.quadrature);
        const double rel = std::abs(ratio - q) / std::abs(q);
        rep.add(check("quadrature ||c psi||^2 = Q(E)", p.label(), rel <= opt.ratio_tolerance,
                      nu_tag(nu) + " rel " + show(rel)));
    }
    return rep;
}

Report verify_family(const FamilyParams& p, const VerifyOptions& opt) {
    Report rep;
    rep.merge(verify_potential_fixture(p, opt.fixture_offset));
    rep.merge(verify_wronskian_identities(p));
    rep.merge(verify_diffeq_first(p.m1(), opt.max_n));
    rep.merge(verify_diffeq_second(p, opt.max_n));
    rep.merge(verify_factorization_commutes(p));
    rep.merge(verify_supercharge_intertwining(p));
    rep.merge(verify_intertwining_c(p, opt.max_nu));
    rep.merge(verify_ladder_c(p, opt.max_nu));
    rep.merge(verify_ladder_b(p, opt.max_nu));
    for (Ladder op : {Ladder::b, Ladder::b_dagger, Ladder::c, Ladder::c_dagger}) {
        rep.merge(verify_zero_modes_exact(p, op, opt.max_nu));
    }
    rep.merge(verify_zero_mode_census(p));
    if (opt.numeric) {
        rep.merge(verify_numerics(p, opt));
    }
    return rep;
}

}  // namespace xeop
