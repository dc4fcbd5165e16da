#include "cfree/limit_laws.hpp"

#include "cfree/errors.hpp"
#include "cfree/partitions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cfree {

namespace {

constexpr double kPi = std::numbers::pi;
// Weights this close to zero come from cancellation at a regime boundary.
constexpr double kWeightSnap = 1e-13;

}  // namespace

Rational gaussian_limit_moment(const Rational& alpha_sq, const Rational& beta_sq, int n) {
    if (n < 0) throw std::invalid_argument("moment index must be non-negative");
    if (n % 2) return 0;
    if (n == 0) return 1;
    const int half = n / 2;
    BlockCounts counts(half);
    Rational total = 0;
    for (int k = 0; k < half; ++k) {
        total += Rational(counts.a(half, k)) * pow(alpha_sq, static_cast<unsigned>(half - k)) *
                 pow(beta_sq, static_cast<unsigned>(k));
    }
    return total;
}

Rational semicircle_moment(const Rational& beta_sq, int n) {
    if (n < 0) throw std::invalid_argument("moment index must be non-negative");
    if (n % 2) return 0;
    return Rational(catalan(n / 2)) * pow(beta_sq, static_cast<unsigned>(n / 2));
}

Rational poisson_limit_moment(const Rational& alpha, const Rational& beta, int n) {
    if (n < 0) throw std::invalid_argument("moment index must be non-negative");
    if (n == 0) return 1;
    BlockCounts counts(n);
    Rational total = 0;
    for (int k = 1; k <= n; ++k)
        for (int l = 0; k + l <= n; ++l) {
            const BigInt s = counts.s(n, k, l);
            if (s != 0) total += Rational(s) * pow(alpha, k) * pow(beta, l);
        }
    return total;
}

Rational free_poisson_moment(const Rational& beta, int n) {
    if (n < 0) throw std::invalid_argument("moment index must be non-negative");
    if (n == 0) return 1;
    BlockCounts counts(n);
    Rational total = 0;
    for (int k = 1; k <= n; ++k) total += Rational(counts.t(n, k)) * pow(beta, k);
    return total;
}

double ClosedFormMeasure::density(double t) const {
    if (!density_fn || t < lo || t > hi) return 0.0;
    return density_fn(t, t - lo, hi - t);
}

double gaussian_atom_weight(double alpha_sq, double beta_sq) {
    if (2 * beta_sq > alpha_sq) return 0.0;
    const double c = 0.5 * (alpha_sq - 2 * beta_sq) / (alpha_sq - beta_sq);
    return c < kWeightSnap ? 0.0 : c;
}

double gaussian_atom_weight_quarter_form(double alpha_sq, double beta_sq) {
    return 0.5 * gaussian_atom_weight(alpha_sq, beta_sq);
}

ClosedFormMeasure gaussian_limit_measure_from_variances(double alpha_sq, double beta_sq) {
    if (!(alpha_sq > 0) || !(beta_sq >= 0)) {
        throw std::invalid_argument("gaussian law needs alpha > 0 and beta >= 0");
    }
    ClosedFormMeasure m;
    m.family = "gaussian";
    m.alpha = std::sqrt(alpha_sq);
    m.beta = std::sqrt(beta_sq);
    if (beta_sq == 0) {
        m.atoms = {{-m.alpha, 0.5}, {m.alpha, 0.5}};
        return m;
    }
    const double c = gaussian_atom_weight(alpha_sq, beta_sq);
    if (c > 0) {
        const double x = alpha_sq / std::sqrt(alpha_sq - beta_sq);
        m.atoms = {{-x, c}, {x, c}};
    }
    const double beta = m.beta;
    m.lo = -2 * beta;
    m.hi = 2 * beta;
    if (alpha_sq > beta_sq) {
        // alpha^4 - (alpha^2 - beta^2) t^2 = d (x0 - t)(x0 + t) with x0 = alpha^2/sqrt(d) >= 2 beta;
        // gap = x0 - 2 beta is formed without cancellation.
        const double d = alpha_sq - beta_sq;
        const double sd = std::sqrt(d);
        const double u = alpha_sq - 2 * beta_sq;
        const double gap = u * u / (sd * (alpha_sq + 2 * beta * sd));
        m.density_fn = [alpha_sq, d, gap](double, double from_lo, double to_hi) {
            if (from_lo <= 0 || to_hi <= 0) return 0.0;
            return alpha_sq * std::sqrt(from_lo * to_hi) / (2 * kPi * d * (gap + to_hi) * (gap + from_lo));
        };
    } else {
        m.density_fn = [alpha_sq, beta_sq](double t, double from_lo, double to_hi) {
            if (from_lo <= 0 || to_hi <= 0) return 0.0;
            return alpha_sq * std::sqrt(from_lo * to_hi) /
                   (2 * kPi * (alpha_sq * alpha_sq - (alpha_sq - beta_sq) * t * t));
        };
    }
    return m;
}

ClosedFormMeasure gaussian_limit_measure(double alpha, double beta) {
    if (!(alpha > 0) || !(beta >= 0)) throw std::invalid_argument("gaussian law needs alpha > 0 and beta >= 0");
    return gaussian_limit_measure_from_variances(alpha * alpha, beta * beta);
}

double poisson_atom_at_zero(double alpha, double beta) {
    if (beta > 1) return 0.0;
    if (alpha == beta) return 1 - beta;
    const double a = (1 - beta) / (1 + alpha - beta);
    return a < kWeightSnap ? 0.0 : a;
}

double poisson_atom_location(double alpha, double beta) { return alpha + alpha / (alpha - beta); }

double poisson_atom_weight(double alpha, double beta) {
    if (alpha == beta) return 0.0;
    const double root = std::sqrt(beta);
    if (!(alpha <= beta - root || beta + root <= alpha)) return 0.0;
    const double z0 = poisson_atom_location(alpha, beta);
    const double b = (beta * z0 - alpha * alpha) / (z0 * (beta - alpha));
    return b < kWeightSnap ? 0.0 : b;
}

ClosedFormMeasure poisson_limit_measure(double alpha, double beta) {
    if (!(alpha > 0) || !(beta > 0)) throw std::invalid_argument("poisson law needs alpha > 0 and beta > 0");
    ClosedFormMeasure m;
    m.family = "poisson";
    m.alpha = alpha;
    m.beta = beta;
    const double root = std::sqrt(beta);
    m.lo = (1 - root) * (1 - root);
    m.hi = (1 + root) * (1 + root);

    if (const double a = poisson_atom_at_zero(alpha, beta); a > 0) m.atoms.push_back({0.0, a});
    if (const double b = poisson_atom_weight(alpha, beta); b > 0)
        m.atoms.push_back({poisson_atom_location(alpha, beta), b});

    // 4 beta - (t - 1 - beta)^2 = (t - lo)(hi - t).
    const double lo = m.lo;
    if (alpha == beta) {
        m.density_fn = [lo](double, double from_lo, double to_hi) {
            if (from_lo <= 0 || to_hi <= 0) return 0.0;
            return std::sqrt(from_lo * to_hi) / (2 * kPi * (lo + from_lo));
        };
    } else {
        m.density_fn = [alpha, beta, lo](double, double from_lo, double to_hi) {
            if (from_lo <= 0 || to_hi <= 0) return 0.0;
            const double t = lo + from_lo;
            return alpha * std::sqrt(from_lo * to_hi) / (kPi * 2 * t * (t * (beta - alpha) + alpha * (1 - beta + alpha)));
        };
    }
    return m;
}

Complex gaussian_cauchy_G(double alpha, double beta, Complex z) {
    if (!(z.imag() > 0)) throw std::domain_error("gaussian_cauchy_G needs Im z > 0");
    const double a2 = alpha * alpha, b2 = beta * beta;
    const Complex root = std::sqrt(z - 2 * beta) * std::sqrt(z + 2 * beta);
    return (z * (0.5 * a2 - b2) + 0.5 * a2 * root) / (z * z * (a2 - b2) - a2 * a2);
}

Complex poisson_cauchy_G(double alpha, double beta, Complex z) {
    if (!(z.imag() > 0)) throw std::domain_error("poisson_cauchy_G needs Im z > 0");
    const double root_beta = std::sqrt(beta);
    const double lo = (1 - root_beta) * (1 - root_beta), hi = (1 + root_beta) * (1 + root_beta);
    const Complex root = std::sqrt(z - lo) * std::sqrt(z - hi);
    return (z * (2 * beta - alpha) + alpha * (1 - beta) - alpha * root) /
           (2.0 * z * (z * (beta - alpha) + alpha * (1 - beta + alpha)));
}

std::vector<FractionLevel> gaussian_fraction_levels(double alpha, double beta, int depth) {
    if (depth < 1) throw std::invalid_argument("fraction depth must be positive");
    std::vector<FractionLevel> levels(depth, FractionLevel{0.0, beta * beta, 0.0});
    levels[0].weight = alpha * alpha;
    return levels;
}

std::vector<FractionLevel> poisson_fraction_levels(double alpha, double beta, int depth) {
    if (depth < 1) throw std::invalid_argument("fraction depth must be positive");
    if (!(beta > 0)) throw std::invalid_argument("poisson fraction needs beta > 0");
    std::vector<FractionLevel> levels(depth, FractionLevel{-(1 - beta), 0.0, 1.0});
    levels[0] = {-(alpha / beta) * (1 - beta), 0.0, alpha / beta};
    return levels;
}

OrthoPolySeq ortho_polys(const Rational& alpha_sq, const Rational& beta_sq, int n_max) {
    if (n_max < 2) throw std::invalid_argument("ortho_polys needs n_max >= 2");
    OrthoPolySeq out;
    out.rows.push_back({1});
    out.rows.push_back({0, 1});
    out.rows.push_back({-alpha_sq, 0, 1});
    for (int n = 2; n < n_max; ++n) {
        const auto& pn = out.rows[n];
        const auto& pm = out.rows[n - 1];
        std::vector<Rational> next(pn.size() + 1, 0);
        for (std::size_t k = 0; k < pn.size(); ++k) next[k + 1] += pn[k];
        for (std::size_t k = 0; k < pm.size(); ++k) next[k] -= beta_sq * pm[k];
        out.rows.push_back(std::move(next));
    }
    return out;
}

double eval_poly(const std::vector<Rational>& coeffs, double x) {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + static_cast<double>(to_long_double(*it));
    return acc;
}

double quadrature_integrate(const ClosedFormMeasure& m, const std::function<double(double)>& f) {
    double total = 0;
    for (const auto& atom : m.atoms) total += atom.weight * f(atom.location);
    if (!m.has_density() || !(m.hi > m.lo)) return total;

    const double center = 0.5 * (m.lo + m.hi);
    const double radius = 0.5 * (m.hi - m.lo);
    auto integrand = [&](double theta) {
        const double sine = std::sin(theta), cosine = std::cos(theta);
        // 1 -/+ sin(theta) rewritten as cos^2/(1 +/- sin) on the side where it cancels.
        const double one_plus = sine >= 0 ? 1 + sine : cosine * cosine / (1 - sine);
        const double one_minus = sine <= 0 ? 1 - sine : cosine * cosine / (1 + sine);
        const double t = center + radius * sine;
        return f(t) * m.density_fn(t, radius * one_plus, radius * one_minus) * radius * cosine;
    };
    double error = 0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, -kPi / 2, kPi / 2, 15, 1e-13, &error);
    if (!std::isfinite(value) || error > kQuadratureTolerance) {
        throw IntegrationError("quadrature did not converge for the " + m.family + " law (error estimate " +
                               std::to_string(error) + ")");
    }
    return total + value;
}

double quadrature_moment(const ClosedFormMeasure& m, int n) {
    if (n < 0 || n > kMaxQuadratureMoment) {
        throw BoundError("quadrature_moment: n must lie in [0, " + std::to_string(kMaxQuadratureMoment) + "]");
    }
    return quadrature_integrate(m, [n](double t) { return std::pow(t, n); });
}

CauchyTailReport cauchy_tail_limit_check(double gamma, const std::vector<double>& alphas, double grid_half_width,
                                         int grid_points) {
    if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");
    if (grid_points < 2) throw std::invalid_argument("grid needs at least two points");
    CauchyTailReport report;
    report.gamma = gamma;
    report.alphas = alphas;
    for (double alpha : alphas) {
        const auto m = gaussian_limit_measure(alpha, gamma * alpha * alpha);
        double sup = 0;
        for (int i = 0; i < grid_points; ++i) {
            const double t = -grid_half_width + 2 * grid_half_width * i / (grid_points - 1);
            const double cauchy = gamma / (kPi * (1 + gamma * gamma * t * t));
            sup = std::max(sup, std::fabs(m.density(t) - cauchy));
        }
        report.sup_distances.push_back(sup);
    }
    report.decreasing = true;
    for (std::size_t i = 1; i < report.sup_distances.size(); ++i)
        if (!(report.sup_distances[i] < report.sup_distances[i - 1])) report.decreasing = false;
    return report;
}

}  // namespace cfree
