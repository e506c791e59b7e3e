#include "xeop/fixtures.hpp"

#include <stdexcept>

namespace xeop {

namespace {

RationalFunction term(long c, const Polynomial& num, const Polynomial& base, int power) {
    return RationalFunction(Rational(c) * num, pow(base, power));
}

Potential literal(RationalFunction first, RationalFunction second, long constant) {
    return {first - second + RationalFunction::constant(Rational(constant))};
}

std::vector<PotentialFixture> build() {
    std::vector<PotentialFixture> out;
    {
        const Polynomial d{3, 0, 0, 0, 4};
        out.push_back({2, 3,
                       literal(term(32, {0, 0, 1}, d, 1), term(384, {0, 0, 1}, d, 2), 2),
                       "x^2 + 32x^2/(4x^4 + 3) - 384x^2/(4x^4 + 3)^2 + 2"});
    }
    {
        const Polynomial d{5, 0, 10, 0, 20, 0, 8};
        out.push_back({2, 5,
                       literal(term(24, {5, 0, 0, 0, 4}, d, 1), term(160, {5, 0, 20, 0, 28}, d, 2), 4),
                       "x^2 + 24(4x^4 + 5)/(8x^6 + 20x^4 + 10x^2 + 5) - 160(28x^4 + 20x^2 + 5)/"
                       "(8x^6 + 20x^4 + 10x^2 + 5)^2 + 4"});
    }
    {
        const Polynomial d{21, 0, 84, 0, 168, 0, 112, 0, 16};
        out.push_back({2, 7,
                       literal(term(16, {-749, 0, 140, 0, 28, 0, 16}, d, 1),
                               term(896, {273, 0, 1008, 0, 1932, 0, 1072}, d, 2), 6),
                       "x^2 + 16(16x^6 + 28x^4 + 140x^2 - 749)/(16x^8 + 112x^6 + 168x^4 + 84x^2 + 21) - "
                       "896(1072x^6 + 1932x^4 + 1008x^2 + 273)/(16x^8 + 112x^6 + 168x^4 + 84x^2 + 21)^2 + 6"});
    }
    {
        const Polynomial d{45, 0, 0, 0, 120, 0, 64, 0, 16};
        out.push_back({4, 5,
                       literal(term(64, {112, 0, -13, 0, 4, 0, 4}, d, 1),
                               term(1024, {315, 0, 90, 0, 1020, 0, 328}, d, 2), 6),
                       "x^2 + 64(4x^6 + 4x^4 - 13x^2 + 112)/(16x^8 + 64x^6 + 120x^4 + 45) - "
                       "1024(328x^6 + 1020x^4 + 90x^2 + 315)/(16x^8 + 64x^6 + 120x^4 + 45)^2 + 6"});
    }
    {
        const Polynomial d{105, 0, 210, 0, 840, 0, 784, 0, 272, 0, 32};
        out.push_back({4, 7,
                       literal(term(8, {239, 0, 284, 0, 352, 0, 272, 0, 80}, d, 1),
                               term(64, {4515, 0, 40320, 0, 103320, 0, 68992, 0, 13488}, d, 2), 8),
                       "x^2 + 8(80x^8 + 272x^6 + 352x^4 + 284x^2 + 239)/"
                       "(32x^10 + 272x^8 + 784x^6 + 840x^4 + 210x^2 + 105) - "
                       "64(13488x^8 + 68992x^6 + 103320x^4 + 40320x^2 + 4515)/"
                       "(32x^10 + 272x^8 + 784x^6 + 840x^4 + 210x^2 + 105)^2 + 8"});
    }
    return out;
}

BigInt factorial(int n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt pow2(int n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return r;
}

}  // namespace

const std::vector<PotentialFixture>& reference_potentials() {
    static const std::vector<PotentialFixture> fixtures = build();
    return fixtures;
}

std::optional<Potential> reference_potential(const FamilyParams& p, long constant_offset) {
    for (const auto& f : reference_potentials()) {
        if (f.m1 == p.m1() && f.m2 == p.m2()) {
            return f.v.shifted(Rational(constant_offset));
        }
    }
    return std::nullopt;
}

std::vector<FamilyParams> default_grid() {
    return {{2, 3}, {2, 5}, {2, 7}, {4, 5}, {4, 7}};
}

Rational quoted_norm_squared_sqrt_pi(const FamilyParams& p, int nu) {
    const int m1 = p.m1();
    const int m2 = p.m2();
    const int l = p.ell();
    Rational r;
    if (nu == -m2 - 1) {
        r = Rational(pow2(m2 + 1) * factorial(m2) * l);
    } else if (nu == -m1 - 1) {
        r = Rational(pow2(m1 - 1) * factorial(m1), BigInt(l));
    } else if (nu >= 0) {
        r = Rational(BigInt(1), pow2(nu + 2) * (nu + m1 + 1) * (nu + m2 + 1) * factorial(nu));
    } else {
        throw std::invalid_argument("index nu=" + std::to_string(nu) + " is not a bound state of H2 for " +
                                    p.label());
    }
    r.canonicalize();
    return r;
}

}  // namespace xeop
