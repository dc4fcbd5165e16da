#pragma once

#include "cfree/cumulants.hpp"

#include <complex>
#include <utility>
#include <variant>
#include <vector>

namespace cfree {

/// Power series with exact rational coefficients, truncated after z^order.
/// Every operation keeps the order of its (common) inputs.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, 0) {}
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1, 0) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& value, int order);
    /// The series z, truncated at `order`.
    static TruncatedSeries identity(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// z * f, dropping the coefficient pushed past the order.
    TruncatedSeries times_z() const;
    /// f / z; requires f(0) = 0. The top coefficient becomes 0.
    TruncatedSeries divided_by_z() const;

private:
    std::vector<Rational> c_;
};

/// Throws std::domain_error when f(0) = 0.
TruncatedSeries reciprocal(const TruncatedSeries& f);
/// f(g(z)); throws std::domain_error unless g(0) = 0. Throws OrderMismatch on different orders.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// A = sum r_n(nu) z^n, B = sum m_n(nu) z^n, C = sum R_n z^n, D = sum m_n(mu) z^n.
struct Transforms {
    TruncatedSeries A, B, C, D;
};

Transforms abcd_from_pair(const MeasurePair& pair);

/// A(zB) + 1 - B and C(zB) D - (D - 1) B.
std::pair<TruncatedSeries, TruncatedSeries> check_transform_identities(const Transforms& t);

/// The inversion and Cauchy-transform relations restated for formal series:
///   inversion: B(z / (1 + A)) - (1 + A)
///   cauchy_nu: B (1 - z Ahat(zB)) - 1,  Ahat = A / z
///   cauchy_mu: D (1 - z Chat(zB)) - 1,  Chat = C / z
/// All three vanish for transforms of a genuine pair.
struct InversionResidual {
    TruncatedSeries inversion;
    TruncatedSeries cauchy_nu;
    TruncatedSeries cauchy_mu;
    bool is_zero() const { return inversion.is_zero() && cauchy_nu.is_zero() && cauchy_mu.is_zero(); }
};

InversionResidual check_inversion_identities(const MeasurePair& pair);

using Complex = std::complex<double>;

/// One level of 1/(z - shift - (weight + weight_z z) * next).
struct FractionLevel {
    double shift = 0;
    double weight = 0;
    double weight_z = 0;
};

/// Finite continued fraction with tail 0 below the last level.
/// Throws NumericalDegeneracy when a denominator cancels to rounding noise.
Complex cf_eval(const std::vector<FractionLevel>& levels, Complex z);

inline constexpr int kDefaultFractionDepth = 64;

struct GaussianLaw {
    double alpha;
    double beta;
};
struct PoissonLaw {
    double alpha;
    double beta;
};
/// Truncated asymptotic sum_n m_n / z^{n+1}; a diagnostic only.
struct MomentExpansion {
    std::vector<double> moments;
};
struct FractionExpansion {
    std::vector<FractionLevel> levels;
};

/// Cauchy transform G(z) = integral dmu(t) / (z - t) on the upper half plane.
class CauchyEvaluator {
public:
    using Kind = std::variant<MomentExpansion, GaussianLaw, PoissonLaw, FractionExpansion>;

    explicit CauchyEvaluator(Kind kind) : kind_(std::move(kind)) {}
    static CauchyEvaluator from_moments(const MomentSequence& m);

    /// Throws std::domain_error unless Im z > 0.
    Complex operator()(Complex z) const;
    const Kind& kind() const { return kind_; }

private:
    Kind kind_;
};

/// -(1/pi) Im G(t + i eps). Throws std::invalid_argument unless 1e-8 <= eps <= 1e-2.
double stieltjes_density(const CauchyEvaluator& g, double t, double eps);

inline constexpr double kStieltjesLadder[] = {1e-3, 1e-4, 1e-5};

/// stieltjes_density at each rung of kStieltjesLadder, in order.
std::vector<std::pair<double, double>> stieltjes_ladder(const CauchyEvaluator& g, double t);

}  // namespace cfree
