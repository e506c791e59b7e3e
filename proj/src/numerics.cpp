#include "xeop/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "xeop/operators.hpp"

namespace xeop {

namespace {

constexpr int kPanelOrder = 20;

double composite(const std::function<double(double)>& f, double L, int panels) {
    using boost::math::quadrature::gauss;
    const double w = 2.0 * L / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = -L + i * w;
        sum += gauss<double, kPanelOrder>::integrate(f, a, a + w);
    }
    return sum;
}

void require_decaying(const QuasiGaussian& f) {
    if (f.s != -1) {
        throw std::invalid_argument("inner product needs decaying states (s = -1), got s = " + std::to_string(f.s));
    }
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("quadrature half-width L must be positive");
    }
    if (nodes < 64) {
        throw std::invalid_argument("quadrature needs at least 64 nodes (got " + std::to_string(nodes) + ")");
    }
}

QuadratureResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    spec.validate();
    const double L = spec.half_width;
    if (spec.scheme == QuadratureScheme::adaptive_kronrod) {
        double err = 0.0;
        const double v =
            boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -L, L, 15, 1e-14, &err);
        return {v, err};
    }
    const int panels = std::max(2, (spec.nodes + kPanelOrder - 1) / kPanelOrder);
    const double fine = composite(f, L, panels);
    const double coarse = composite(f, L, panels / 2);
    return {fine, std::abs(fine - coarse)};
}

double inner_product(const QuasiGaussian& f, const QuasiGaussian& g, const QuadratureSpec& spec) {
    require_decaying(f);
    require_decaying(g);
    return integrate([&](double x) { return f(x) * g(x); }, spec).value;
}

double norm_of_state(const QuasiGaussian& f, const QuadratureSpec& spec) {
    return std::sqrt(inner_product(f, f, spec));
}

void FdGrid::validate() const {
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("grid half-width L must be positive");
    }
    if (points < 400) {
        throw std::invalid_argument("finite-difference grid needs M >= 400 (got " + std::to_string(points) + ")");
    }
}

int tridiagonal_count_below(const std::vector<double>& diag, double off, double lambda) {
    const double off2 = off * off;
    int count = 0;
    double d = 1.0;
    for (std::size_t j = 0; j < diag.size(); ++j) {
        d = diag[j] - lambda - (j == 0 ? 0.0 : off2 / d);
        if (d == 0.0) d = -std::numeric_limits<double>::min();
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> fd_spectrum(const std::function<double(double)>& v, const FdGrid& grid, int k) {
    grid.validate();
    const int n = grid.interior();
    if (k < 1 || k > n) {
        throw std::invalid_argument("requested " + std::to_string(k) + " levels but the grid has " +
                                    std::to_string(n) + " interior points");
    }
    const double h = grid.spacing();
    const double off = -1.0 / (h * h);
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        diag[static_cast<std::size_t>(j)] = 2.0 / (h * h) + v(grid.node(j + 1));
    }
    const auto [dmin, dmax] = std::minmax_element(diag.begin(), diag.end());
    const double lower = *dmin - 2.0 * std::abs(off);
    const double upper = *dmax + 2.0 * std::abs(off);

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        double lo = out.empty() ? lower : out.back() - 1e-9;
        double hi = upper;
        for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (tridiagonal_count_below(diag, off, mid) > i) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

std::vector<double> fd_spectrum(const Potential& v, const FdGrid& grid, int k) {
    return fd_spectrum([&v](double x) { return v(x); }, grid, k);
}

std::vector<std::vector<double>> gram_matrix(const FamilyParams& p, int count, const QuadratureSpec& spec) {
    std::vector<QuasiGaussian> states;
    for (const auto& level : spectrum(p, Which::H2, count)) {
        states.push_back(wavefunction(p, Which::H2, level.nu));
    }
    const auto n = states.size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            g[i][j] = g[j][i] = inner_product(states[i], states[j], spec);
        }
    }
    return g;
}

double identity_deviation(const std::vector<std::vector<double>>& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g[i].size(); ++j) {
            worst = std::max(worst, std::abs(g[i][j] - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double c_norm_ratio(const FamilyParams& p, int nu, const QuadratureSpec& spec) {
    const QuasiGaussian psi = wavefunction(p, Which::H2, nu);
    QuasiGaussian cpsi = chain_apply(build_supercharges(p).c(), psi.exact());
    cpsi.scale = psi.scale;
    if (cpsi.is_zero()) return 0.0;
    return inner_product(cpsi, cpsi, spec) / inner_product(psi, psi, spec);
}

std::vector<std::pair<double, double>> sample_potential(const Potential& v, double half_width, int count) {
    if (count < 2) {
        throw std::invalid_argument("sampling needs at least 2 points");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double x = -half_width + 2.0 * half_width * i / (count - 1);
        out.emplace_back(x, v(x));
    }
    return out;
}

}  // namespace xeop
