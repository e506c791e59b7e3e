#include "xeop/sturm.hpp"

#include <stdexcept>

namespace xeop {

namespace {

int count_changes(const std::vector<int>& signs) {
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    }
    chain_.push_back(p);
    chain_.push_back(derivative(p));
    while (!chain_.back().is_zero()) {
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        // Positive rescaling keeps signs and keeps coefficients small.
        Polynomial r = -divmod(a, b).second;
        if (!r.is_zero()) {
            r = r * (1 / abs(content(r)));
        }
        chain_.push_back(std::move(r));
    }
    chain_.pop_back();
}

int SturmChain::sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        signs.push_back(sgn(q(x)));
    }
    return count_changes(signs);
}

int SturmChain::sign_changes_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        int s = sgn(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_changes(signs);
}

int SturmChain::count_real_roots() const {
    return sign_changes_at_infinity(false) - sign_changes_at_infinity(true);
}

int SturmChain::count_roots_in(const Rational& a, const Rational& b) const {
    if (!(a < b)) {
        throw std::invalid_argument("count_roots_in needs a < b");
    }
    return sign_changes_at(a) - sign_changes_at(b);
}

bool has_sign_change(const Polynomial& p, double half_width, int samples) {
    if (samples < 2) {
        throw std::invalid_argument("has_sign_change needs at least two samples");
    }
    const double h = 2.0 * half_width / (samples - 1);
    double prev = p(-half_width);
    for (int i = 1; i < samples; ++i) {
        const double v = p(-half_width + i * h);
        if ((prev < 0 && v > 0) || (prev > 0 && v < 0) || v == 0.0) {
            return true;
        }
        prev = v;
    }
    return false;
}

}  // namespace xeop
