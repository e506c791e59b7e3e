#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xeop/fixtures.hpp"
#include "xeop/numerics.hpp"
#include "xeop/operators.hpp"

using namespace xeop;

namespace {

// Plain trapezoid sum; spectrally accurate for Gaussian-decaying integrands.
double trapezoid(const std::function<double(double)>& f, double L, int n) {
    const double h = 2.0 * L / n;
    double s = 0.5 * (f(-L) + f(L));
    for (int j = 1; j < n; ++j) s += f(-L + j * h);
    return s * h;
}

}  // namespace

TEST_CASE("quadrature") {
    const auto gauss = [](double x) { return std::exp(-x * x); };
    const double root_pi = std::sqrt(std::numbers::pi);
    CHECK(trapezoid(gauss, 9.0, 400) == doctest::Approx(root_pi).epsilon(1e-14));
    for (auto scheme : {QuadratureScheme::composite_gauss, QuadratureScheme::adaptive_kronrod}) {
        QuadratureSpec spec;
        spec.scheme = scheme;
        const QuadratureResult r = integrate(gauss, spec);
        CHECK(r.value == doctest::Approx(root_pi).epsilon(1e-13));
        CHECK(r.error_estimate < 1e-10);
    }
    const auto x4 = [](double x) { return std::pow(x, 4) * std::exp(-x * x); };
    CHECK(integrate(x4, {}).value == doctest::Approx(trapezoid(x4, 9.0, 600)).epsilon(1e-13));

    QuadratureSpec bad;
    bad.nodes = 10;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadratureSpec{};
    bad.half_width = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("oscillator norms") {
    const QuasiGaussian psi0{RationalFunction(Polynomial{1}), -1, std::pow(std::numbers::pi, -0.25)};
    CHECK(inner_product(psi0, psi0) == doctest::Approx(1.0).epsilon(1e-10));
    const QuasiGaussian bare{RationalFunction(Polynomial{1}), -1};
    CHECK(norm_of_state(bare) == doctest::Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-12));
    CHECK_THROWS_AS(norm_of_state(QuasiGaussian{RationalFunction(Polynomial{1}), +1}), std::invalid_argument);
    CHECK_THROWS_AS(inner_product(bare, QuasiGaussian{RationalFunction(Polynomial{1}), 0}), std::invalid_argument);
}

TEST_CASE("extended-oscillator states are normalized and orthogonal") {
    const FamilyParams p(2, 3);
    const QuasiGaussian g = wavefunction(p, Which::H2, 0);
    CHECK(inner_product(g, g) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(inner_product(wavefunction(p, Which::H2, -4), wavefunction(p, Which::H2, 1))) < 1e-8);
    CHECK(norm_of_state(wavefunction(p, Which::H2, -3)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(norm_of_state(wavefunction(FamilyParams(2, 5), Which::H2, -6)) == doctest::Approx(1.0).epsilon(1e-8));

    // trapezoid cross-check of one Gram entry
    const QuasiGaussian a = wavefunction(p, Which::H2, 2);
    const QuasiGaussian b = wavefunction(p, Which::H2, -3);
    const auto ab = [&](double x) { return a(x) * b(x); };
    CHECK(inner_product(a, b) == doctest::Approx(trapezoid(ab, 9.0, 2000)).epsilon(1e-10));

    for (const auto& q : {FamilyParams(2, 3), FamilyParams(2, 5)}) {
        const auto gram = gram_matrix(q, 8);
        CHECK(gram.size() == 8);
        CHECK(identity_deviation(gram) < 1e-7);
    }
    CHECK(identity_deviation({{1.0, 0.5}, {0.5, 1.0}}) == doctest::Approx(0.5));
}

TEST_CASE("tridiagonal Sturm count") {
    // diag 2, off -1 (2x2): eigenvalues 1 and 3
    CHECK(tridiagonal_count_below({2.0, 2.0}, -1.0, 0.5) == 0);
    CHECK(tridiagonal_count_below({2.0, 2.0}, -1.0, 2.0) == 1);
    CHECK(tridiagonal_count_below({2.0, 2.0}, -1.0, 3.5) == 2);
    // n x n Laplacian: 2 - 2cos(k pi/(n+1))
    const int n = 20;
    const std::vector<double> diag(n, 2.0);
    for (int k = 1; k <= n; ++k) {
        const double lam = 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1));
        CHECK(tridiagonal_count_below(diag, -1.0, lam - 1e-9) == k - 1);
        CHECK(tridiagonal_count_below(diag, -1.0, lam + 1e-9) == k);
    }
}

TEST_CASE("finite-difference spectra") {
    FdGrid fine{8.0, 4000};
    const auto osc = fd_spectrum(Potential{}, fine, 4);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(osc[static_cast<std::size_t>(n)] - (2 * n + 1)) < 1e-4);

    const FamilyParams p(2, 3);
    const auto v2 = fd_spectrum(potential_v2(p), FdGrid{}, 5);
    const std::vector<double> exact{-1, 1, 7, 9, 11};
    for (std::size_t i = 0; i < exact.size(); ++i) CHECK(std::abs(v2[i] - exact[i]) < 1e-3);

    CHECK(fd_spectrum(potential_v_minus(2), FdGrid{}, 1)[0] == doctest::Approx(-5.0).epsilon(1e-3));

    // second-order convergence: halving h cuts the error by about 4
    const double e1 = std::abs(fd_spectrum(Potential{}, FdGrid{8.0, 500}, 3)[2] - 5.0);
    const double e2 = std::abs(fd_spectrum(Potential{}, FdGrid{8.0, 1000}, 3)[2] - 5.0);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));

    const FdGrid small{8.0, 400};
    CHECK_THROWS_AS(fd_spectrum(Potential{}, small, small.interior() + 1), std::invalid_argument);
    CHECK_THROWS_AS(fd_spectrum(Potential{}, small, 0), std::invalid_argument);
    CHECK_THROWS_AS(FdGrid(8.0, 100).validate(), std::invalid_argument);
    CHECK(small.node(0) == -8.0);
    CHECK(small.node(400) == doctest::Approx(8.0));
}

TEST_CASE("c norms by quadrature") {
    for (const auto& p : {FamilyParams(2, 3), FamilyParams(4, 7)}) {
        const Polynomial q = pha_polys(p).Q.poly;
        for (int nu = p.ell(); nu < p.ell() + 4; ++nu) {
            const double e = 2.0 * nu + p.m1() + p.m2() + 2;
            const double exact = q(e);
            CHECK(std::abs(c_norm_ratio(p, nu) - exact) / exact < 1e-6);
        }
    }
}

TEST_CASE("potential samples") {
    const auto s = sample_potential(Potential{}, 2.0, 5);
    REQUIRE(s.size() == 5);
    CHECK(s.front().first == -2.0);
    CHECK(s[2].first == doctest::Approx(0.0));
    CHECK(s.back().second == doctest::Approx(4.0));
    const auto v = sample_potential(potential_v2(FamilyParams(2, 3)), 5.0, 11);
    // V2(0) = 0 + 2
    CHECK(v[5].second == doctest::Approx(2.0));
}
