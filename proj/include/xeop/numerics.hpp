#ifndef XEOP_NUMERICS_HPP
#define XEOP_NUMERICS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "xeop/families.hpp"

namespace xeop {

enum class QuadratureScheme { composite_gauss, adaptive_kronrod };

/// Integration over [-L, L].  All integrands here carry exp(-x^2) times a
/// rational function of polynomial growth at most |x|^40 for the tested
/// grids, so the tail beyond L = 9 is below 1e-35 * 9^40 ~ 1e3 * e^-81,
/// i.e. far under 1e-12.
struct QuadratureSpec {
    double half_width = 9.0;
    int nodes = 1200;  // composite: 20-point Gauss-Legendre panels
    QuadratureScheme scheme = QuadratureScheme::composite_gauss;

    /// Throws std::invalid_argument unless L > 0 and nodes >= 64.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Composite: error estimate = |I(N) - I(N/2)|.  Adaptive: Kronrod estimate.
QuadratureResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

/// Integral of f * g over the real line, scales included.  Both states must
/// decay (s = -1).
double inner_product(const QuasiGaussian& f, const QuasiGaussian& g, const QuadratureSpec& spec = {});
double norm_of_state(const QuasiGaussian& f, const QuadratureSpec& spec = {});

/// Uniform grid on [-L, L] with spacing h = 2L/M; the M - 1 interior points
/// carry the unknowns, Dirichlet conditions at both ends.
struct FdGrid {
    double half_width = 8.0;
    int points = 2000;

    void validate() const;
    double spacing() const { return 2.0 * half_width / points; }
    int interior() const { return points - 1; }
    double node(int j) const { return -half_width + j * spacing(); }
};

/// Lowest k eigenvalues of -d^2/dx^2 + V on the grid (three-point
/// Laplacian), ascending.  Sturm-count bisection on the tridiagonal
/// matrix.  Throws std::invalid_argument if k exceeds the interior count.
std::vector<double> fd_spectrum(const std::function<double(double)>& v, const FdGrid& grid, int k);
std::vector<double> fd_spectrum(const Potential& v, const FdGrid& grid, int k);

/// Number of eigenvalues strictly below lambda of the symmetric
/// tridiagonal matrix (diag, off).
int tridiagonal_count_below(const std::vector<double>& diag, double off, double lambda);

/// Gram matrix of the first `count` normalized H2 eigenstates.
std::vector<std::vector<double>> gram_matrix(const FamilyParams& p, int count, const QuadratureSpec& spec = {});

/// Largest |G_ij - delta_ij|.
double identity_deviation(const std::vector<std::vector<double>>& g);

/// ||c psi_nu||^2 / ||psi_nu||^2 by quadrature, for a normalized H2 state.
double c_norm_ratio(const FamilyParams& p, int nu, const QuadratureSpec& spec = {});

/// Samples (x, V(x)) at `count` equally spaced points of [-L, L].
std::vector<std::pair<double, double>> sample_potential(const Potential& v, double half_width, int count);

}  // namespace xeop

#endif  // XEOP_NUMERICS_HPP
