#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xeop/families.hpp"
#include "xeop/rational_function.hpp"
#include "xeop/serialize.hpp"
#include "xeop/sturm.hpp"

using namespace xeop;

TEST_CASE("addition cancels") {
    CHECK(Polynomial{1, 1} + Polynomial{-1, 1} == Polynomial{0, 2});
    CHECK((Polynomial{1, 1} - Polynomial{1, 1}).is_zero());
    CHECK((Polynomial{1, 1} - Polynomial{1, 1}).degree() == Polynomial::zero_degree);
}

TEST_CASE("zero is absorbing") {
    std::mt19937 rng(1);
    for (int i = 0; i < 20; ++i) {
        CHECK((oracle::random_poly(rng, 6) * Polynomial{}).is_zero());
    }
}

TEST_CASE("product matches brute-force convolution") {
    const Polynomial a{2, 0, 4};
    const Polynomial b{0, 12, 0, 8};
    const Polynomial ab = a * b;
    CHECK(ab.degree() == 5);
    CHECK(ab == oracle::convolve(a, b));

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = oracle::random_poly(rng, 7);
        const Polynomial q = oracle::random_poly(rng, 7);
        CHECK(p * q == oracle::convolve(p, q));
        if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
        CHECK((p + q).degree() <= std::max(p.degree(), q.degree()));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const Polynomial a = oracle::random_poly(rng, 5);
        const Polynomial b = oracle::random_poly(rng, 5);
        const Polynomial c = oracle::random_poly(rng, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("derivative") {
    CHECK(derivative(Polynomial{7}).is_zero());
    CHECK(derivative(Polynomial::monomial(Rational(1), 5)) == Polynomial::monomial(Rational(5), 4));
    CHECK(derivative(hermite(6)) == Rational(12) * hermite(5));

    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        const Polynomial p = oracle::random_poly(rng, 6);
        const Polynomial q = oracle::random_poly(rng, 6);
        const Rational s(3, 7);
        CHECK(derivative(p * q) == derivative(p) * q + p * derivative(q));
        CHECK(derivative(p + s * q) == derivative(p) + s * derivative(q));
        if (p.degree() >= 1) CHECK(derivative(p).degree() == p.degree() - 1);
    }
}

TEST_CASE("wronskian2") {
    const Polynomial h2 = oracle::hermite_sum(2, +1);
    const Polynomial h3 = oracle::hermite_sum(3, +1);
    CHECK(wronskian2(h2, h3) == Polynomial{24, 0, 0, 0, 32});
    CHECK(wronskian2(h2, h2).is_zero());
    CHECK(wronskian2(Polynomial{1}, h3) == derivative(h3));

    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        const Polynomial p = oracle::random_poly(rng, 5);
        const Polynomial q = oracle::random_poly(rng, 5);
        const Polynomial r = oracle::random_poly(rng, 5);
        CHECK(wronskian2(p, q) == -wronskian2(q, p));
        CHECK(wronskian2(p + r, q) == wronskian2(p, q) + wronskian2(r, q));
        CHECK(wronskian2(p, Rational(5) * q) == Rational(5) * wronskian2(p, q));
    }
}

TEST_CASE("division and gcd") {
    const Polynomial a{-1, 0, 1};
    const auto [q, r] = divmod(a, Polynomial{-1, 1});
    CHECK(q == Polynomial{1, 1});
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divmod(a, Polynomial{}), std::domain_error);
    CHECK(gcd(a, Polynomial{-1, 1}) == Polynomial{-1, 1});
    CHECK(exact_div(a * Polynomial{3, 2}, Polynomial{3, 2}) == a);
}

TEST_CASE("normalization") {
    const RationalFunction f(Polynomial{-1, 0, 1}, Polynomial{-1, 1});
    CHECK(f.num() == Polynomial{1, 1});
    CHECK(f.den() == Polynomial{1});
    CHECK(f.is_polynomial());

    const RationalFunction z(Polynomial{}, Polynomial{3, 0, 1});
    CHECK(z.is_zero());
    CHECK(z.den() == Polynomial{1});

    // 2x/4 = x/2: integer form x over 2
    const RationalFunction h(Polynomial{0, 2}, Polynomial{4});
    CHECK(h.num() == Polynomial{0, 1});
    CHECK(h.den() == Polynomial{2});
    CHECK(h(Rational(3)) == Rational(3, 2));

    CHECK_THROWS_AS(RationalFunction(Polynomial{1}, Polynomial{}), std::domain_error);

    std::mt19937 rng(9);
    for (int i = 0; i < 30; ++i) {
        const Polynomial a = oracle::random_poly(rng, 4);
        Polynomial b = oracle::random_poly(rng, 4);
        if (b.is_zero()) b = Polynomial{1};
        Polynomial g = oracle::random_poly(rng, 3);
        if (g.is_zero()) g = Polynomial{2, 1};
        const RationalFunction once = ratfunc_normalize(a, b);
        CHECK(ratfunc_normalize(once.num(), once.den()) == once);
        CHECK(ratfunc_normalize(a * g, b * g) == once);
        CHECK(sgn(once.den().leading()) > 0);
    }
}

TEST_CASE("rational function arithmetic") {
    const RationalFunction a(Polynomial{1}, Polynomial{0, 1});
    const RationalFunction b(Polynomial{1}, Polynomial{1, 1});
    // 1/x - 1/(x+1) = 1/(x(x+1))
    CHECK(a - b == RationalFunction(Polynomial{1}, Polynomial{0, 1, 1}));
    CHECK(a / a == RationalFunction::constant(Rational(1)));
    CHECK(derivative(a) == RationalFunction(Polynomial{-1}, Polynomial{0, 0, 1}));
    CHECK_THROWS_AS(a(Rational(0)), std::domain_error);
}

TEST_CASE("evaluation") {
    CHECK(Polynomial{1, 0, 1}(Rational(0)) == 1);
    CHECK(oracle::hermite_sum(2, +1)(Rational(1)) == 6);
    CHECK(pseudo_hermite(2)(Rational(1)) == 6);

    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        const Polynomial p = oracle::random_poly(rng, 8);
        Rational x(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
        x.canonicalize();
        CHECK(p(x) == oracle::naive_eval(p, x));
        CHECK(p(x.get_d()) == doctest::Approx(oracle::naive_eval(p, x).get_d()).epsilon(1e-12));
    }
}

TEST_CASE("big integers do not overflow") {
    const Polynomial h = pseudo_hermite(40);
    BigInt two40 = 1;
    for (int k = 0; k < 40; ++k) two40 *= 2;
    CHECK(h.leading() == Rational(two40));
}

TEST_CASE("sturm root counts") {
    CHECK(count_real_roots(Polynomial{-1, 0, 1}) == 2);
    CHECK(count_real_roots(Polynomial{1, 0, 1}) == 0);
    CHECK(count_real_roots(Polynomial{0, -1, 0, 1}) == 3);
    CHECK(SturmChain(Polynomial{0, -1, 0, 1}).count_roots_in(Rational(0), Rational(2)) == 1);
    for (int m = 2; m <= 12; m += 2) CHECK(count_real_roots(pseudo_hermite(m)) == 0);
    for (int m = 1; m <= 11; m += 2) CHECK(count_real_roots(pseudo_hermite(m)) == 1);
    CHECK(count_real_roots(hermite(7)) == 7);
    CHECK_FALSE(has_sign_change(pseudo_hermite(6), 5.0, 1000));
    CHECK(has_sign_change(hermite(3), 5.0, 1000));
}

TEST_CASE("json round trip") {
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
        const Polynomial p = oracle::random_poly(rng, 6);
        const Json j = p;
        CHECK(j.get<Polynomial>() == p);
        Polynomial d = oracle::random_poly(rng, 3);
        if (d.is_zero()) d = Polynomial{1};
        const RationalFunction f(p, d);
        const Json jf = f;
        CHECK(jf.get<RationalFunction>() == f);
    }
    const Json big = pseudo_hermite(30);
    CHECK(big.get<Polynomial>() == pseudo_hermite(30));
    CHECK(Json(Polynomial{0, 2}).dump() == R"([["0","1"],["2","1"]])");
}
