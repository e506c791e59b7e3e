#ifndef XEOP_STURM_HPP
#define XEOP_STURM_HPP

#include <vector>

#include "xeop/polynomial.hpp"

namespace xeop {

/// Exact Sturm chain p, p', -rem(p, p'), ... over Q.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);

    /// Number of distinct real roots of p.
    int count_real_roots() const;
    /// Number of distinct real roots in the half-open interval (a, b].
    int count_roots_in(const Rational& a, const Rational& b) const;

    const std::vector<Polynomial>& chain() const { return chain_; }

private:
    int sign_changes_at(const Rational& x) const;
    int sign_changes_at_infinity(bool positive) const;

    std::vector<Polynomial> chain_;
};

inline int count_real_roots(const Polynomial& p) { return SturmChain(p).count_real_roots(); }

/// Float cross-check: true if p changes sign on a uniform scan of [-L, L].
bool has_sign_change(const Polynomial& p, double half_width, int samples);

}  // namespace xeop

#endif  // XEOP_STURM_HPP
