#include "cfree/series.hpp"

#include "cfree/errors.hpp"
#include "cfree/limit_laws.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cfree {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0);
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (auto& q : c_) q *= s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::times_z() const {
    TruncatedSeries out(order());
    for (int k = 1; k <= order(); ++k) out.c_[k] = c_[k - 1];
    return out;
}

TruncatedSeries TruncatedSeries::divided_by_z() const {
    if (c_[0] != 0) throw std::domain_error("divided_by_z needs a zero constant term");
    TruncatedSeries out(order());
    for (int k = 0; k < order(); ++k) out.c_[k] = c_[k + 1];
    return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
    if (f[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
    const int n = f.order();
    TruncatedSeries g(n);
    g[0] = 1 / f[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += f[j] * g[k - j];
        g[k] = -acc / f[0];
    }
    return g;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g);
    if (g[0] != 0) throw std::domain_error("compose needs an inner series with zero constant term");
    const int n = f.order();
    // Horner in g; truncation keeps every product within the order.
    TruncatedSeries out = TruncatedSeries::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) {
        out = out * g;
        out[0] += f[k];
    }
    return out;
}

Transforms abcd_from_pair(const MeasurePair& pair) {
    const auto r = free_cumulants_from_moments(pair.nu());
    const auto R = cfree_cumulants_from_moments(pair);
    return {TruncatedSeries(r.with_zero()), TruncatedSeries(pair.nu().values()), TruncatedSeries(R.with_zero()),
            TruncatedSeries(pair.mu().values())};
}

std::pair<TruncatedSeries, TruncatedSeries> check_transform_identities(const Transforms& t) {
    const int n = t.B.order();
    const auto one = TruncatedSeries::constant(1, n);
    const auto zB = t.B.times_z();
    auto first = compose(t.A, zB) + one - t.B;
    auto second = compose(t.C, zB) * t.D - (t.D - one) * t.B;
    return {std::move(first), std::move(second)};
}

InversionResidual check_inversion_identities(const MeasurePair& pair) {
    const auto t = abcd_from_pair(pair);
    const int n = t.B.order();
    const auto one = TruncatedSeries::constant(1, n);
    const auto z = TruncatedSeries::identity(n);
    const auto zB = t.B.times_z();

    InversionResidual out;
    const auto one_plus_A = one + t.A;
    out.inversion = compose(t.B, z * reciprocal(one_plus_A)) - one_plus_A;

    // divided_by_z loses the top coefficient of Xhat; the extra factor z keeps
    // it out of every coefficient up to the order.
    out.cauchy_nu = t.B * (one - z * compose(t.A.divided_by_z(), zB)) - one;
    out.cauchy_mu = t.D * (one - z * compose(t.C.divided_by_z(), zB)) - one;
    return out;
}

Complex cf_eval(const std::vector<FractionLevel>& levels, Complex z) {
    if (levels.empty()) throw std::invalid_argument("continued fraction needs at least one level");
    constexpr double kCancellation = 64 * std::numeric_limits<double>::epsilon();
    Complex tail = 0;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        const Complex coupled = (it->weight + it->weight_z * z) * tail;
        const Complex denom = z - it->shift - coupled;
        const double scale = std::abs(z) + std::abs(it->shift) + std::abs(coupled);
        if (!std::isfinite(denom.real()) || !std::isfinite(denom.imag()) || std::abs(denom) <= kCancellation * scale ||
            std::abs(denom) == 0) {
            throw NumericalDegeneracy("continued fraction denominator vanished at z = (" + std::to_string(z.real()) +
                                      ", " + std::to_string(z.imag()) + ")");
        }
        tail = 1.0 / denom;
    }
    return tail;
}

CauchyEvaluator CauchyEvaluator::from_moments(const MomentSequence& m) {
    MomentExpansion e;
    for (const auto& q : m.values()) e.moments.push_back(static_cast<double>(to_long_double(q)));
    return CauchyEvaluator(std::move(e));
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

Complex CauchyEvaluator::operator()(Complex z) const {
    if (!(z.imag() > 0)) throw std::domain_error("Cauchy transform evaluated off the upper half plane");
    return std::visit(Overloaded{
                          [&](const MomentExpansion& e) {
                              Complex acc = 0, inv = 1.0 / z, power = inv;
                              for (double m : e.moments) {
                                  acc += m * power;
                                  power *= inv;
                              }
                              return acc;
                          },
                          [&](const GaussianLaw& g) { return gaussian_cauchy_G(g.alpha, g.beta, z); },
                          [&](const PoissonLaw& p) { return poisson_cauchy_G(p.alpha, p.beta, z); },
                          [&](const FractionExpansion& f) { return cf_eval(f.levels, z); },
                      },
                      kind_);
}

double stieltjes_density(const CauchyEvaluator& g, double t, double eps) {
    if (!(eps >= 1e-8 && eps <= 1e-2)) {
        throw std::invalid_argument("stieltjes eps must lie in [1e-8, 1e-2], got " + std::to_string(eps));
    }
    return -g(Complex(t, eps)).imag() / std::numbers::pi;
}

std::vector<std::pair<double, double>> stieltjes_ladder(const CauchyEvaluator& g, double t) {
    std::vector<std::pair<double, double>> out;
    for (double eps : kStieltjesLadder) out.emplace_back(eps, stieltjes_density(g, t, eps));
    return out;
}

}  // namespace cfree
