#pragma once

#include "cfree/rational.hpp"
#include "cfree/series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cfree {

// ---- exact moments of the limit pairs -------------------------------------

/// m_n of the Gaussian limit: sum_k a(n/2, k) (alpha^2)^{n/2-k} (beta^2)^k, zero for odd n.
/// Parameterized by the variances so that irrational alpha, beta with rational squares stay exact.
Rational gaussian_limit_moment(const Rational& alpha_sq, const Rational& beta_sq, int n);
/// The semicircle partner: catalan(n/2) (beta^2)^{n/2}, zero for odd n.
Rational semicircle_moment(const Rational& beta_sq, int n);

/// m_n of the Poisson limit: sum_{k,l} s(n,k,l) alpha^k beta^l.
Rational poisson_limit_moment(const Rational& alpha, const Rational& beta, int n);
/// The free Poisson partner: sum_k t(n,k) beta^k.
Rational free_poisson_moment(const Rational& beta, int n);

// ---- closed-form measures --------------------------------------------------

struct Atom {
    double location;
    double weight;
};

/// Finitely many atoms plus an absolutely continuous part supported on [lo, hi].
struct ClosedFormMeasure {
    std::string family;
    double alpha = 0;
    double beta = 0;
    std::vector<Atom> atoms;
    double lo = 0;
    double hi = 0;
    /// Density at t given also t - lo and hi - t, which callers near the
    /// endpoints can supply without cancellation. Empty for purely atomic laws.
    std::function<double(double, double, double)> density_fn;

    bool has_density() const { return static_cast<bool>(density_fn); }
    /// Zero outside [lo, hi].
    double density(double t) const;
};

/// Throws std::invalid_argument unless alpha > 0 and beta >= 0. beta = 0 gives (delta_{-alpha} + delta_alpha)/2.
ClosedFormMeasure gaussian_limit_measure(double alpha, double beta);
/// Same law from alpha^2 and beta^2, avoiding the rounding of squared square roots.
ClosedFormMeasure gaussian_limit_measure_from_variances(double alpha_sq, double beta_sq);

/// Throws std::invalid_argument unless alpha > 0 and beta > 0.
ClosedFormMeasure poisson_limit_measure(double alpha, double beta);

/// Weight of each Gaussian-law atom: (alpha^2 - 2 beta^2) / (2 (alpha^2 - beta^2)) below the
/// ratio beta^2/alpha^2 = 1/2, else 0. This is the residue of gaussian_cauchy_G at the atom.
double gaussian_atom_weight(double alpha_sq, double beta_sq);
/// The coefficient (alpha^2 - 2 beta^2) / (4 (alpha^2 - beta^2)): half the residue, so a law
/// built from it has total mass below 1. Kept only for comparison.
double gaussian_atom_weight_quarter_form(double alpha_sq, double beta_sq);

/// Poisson-law atoms (possibly zero weight).
double poisson_atom_at_zero(double alpha, double beta);
double poisson_atom_location(double alpha, double beta);
double poisson_atom_weight(double alpha, double beta);

// ---- Cauchy transforms -----------------------------------------------------

/// Require Im z > 0; the square roots are taken so that G(z) ~ 1/z at infinity.
Complex gaussian_cauchy_G(double alpha, double beta, Complex z);
Complex poisson_cauchy_G(double alpha, double beta, Complex z);

/// 1/(z - alpha^2/(z - beta^2/(z - ...))) with `depth` levels.
std::vector<FractionLevel> gaussian_fraction_levels(double alpha, double beta, int depth = kDefaultFractionDepth);
/// 1/(z + (alpha/beta)(1-beta) - (alpha/beta) z/(z + (1-beta) - z/(...))). Requires beta > 0.
std::vector<FractionLevel> poisson_fraction_levels(double alpha, double beta, int depth = kDefaultFractionDepth);

// ---- orthogonal polynomials ------------------------------------------------

/// p_0 = 1, p_1 = x, p_2 = x^2 - alpha^2, p_{n+1} = x p_n - beta^2 p_{n-1}.
/// Row n holds the coefficients of p_n in increasing degree. Requires n_max >= 2.
struct OrthoPolySeq {
    std::vector<std::vector<Rational>> rows;
    int max_degree() const { return static_cast<int>(rows.size()) - 1; }
};

OrthoPolySeq ortho_polys(const Rational& alpha_sq, const Rational& beta_sq, int n_max);
double eval_poly(const std::vector<Rational>& coeffs, double x);

// ---- quadrature ------------------------------------------------------------

inline constexpr int kMaxQuadratureMoment = 12;
inline constexpr double kQuadratureTolerance = 1e-10;

/// sum_i w_i f(x_i) + integral of f * density over the support, using the
/// substitution t = center + radius sin(theta) to absorb square-root endpoints.
/// Throws IntegrationError when the error estimate misses kQuadratureTolerance.
double quadrature_integrate(const ClosedFormMeasure& m, const std::function<double(double)>& f);
/// Throws BoundError for n outside [0, kMaxQuadratureMoment].
double quadrature_moment(const ClosedFormMeasure& m, int n);

// ---- Cauchy tail -----------------------------------------------------------

struct CauchyTailReport {
    double gamma = 0;
    std::vector<double> alphas;
    std::vector<double> sup_distances;
    bool decreasing = false;
};

/// Sup-distance over an evenly spaced grid on [-grid_half_width, grid_half_width]
/// between the Gaussian-law density at (alpha, gamma alpha^2) and gamma/(pi (1 + gamma^2 t^2)).
CauchyTailReport cauchy_tail_limit_check(double gamma, const std::vector<double>& alphas,
                                         double grid_half_width = 5.0, int grid_points = 201);

}  // namespace cfree
