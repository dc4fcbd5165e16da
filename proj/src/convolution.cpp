#include "cfree/convolution.hpp"

#include "cfree/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfree {

namespace {

void require_same_order(int a, int b, const char* what) {
    if (a != b) {
        throw OrderMismatch(std::string(what) + ": orders " + std::to_string(a) + " and " + std::to_string(b) +
                            " differ; truncate explicitly");
    }
}

template <class Tag>
CumulantSequence<Tag> sum(const CumulantSequence<Tag>& a, const CumulantSequence<Tag>& b) {
    auto out = CumulantSequence<Tag>::zeros(a.order());
    for (int n = 1; n <= a.order(); ++n) out[n] = a[n] + b[n];
    return out;
}

std::vector<long double> as_long_double(const std::vector<Rational>& v) {
    std::vector<long double> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(to_long_double(q));
    return out;
}

ScaledPair from_exact(MeasurePair pair) {
    ScaledPair out;
    out.mu = as_long_double(pair.mu().values());
    out.nu = as_long_double(pair.nu().values());
    out.exact = std::move(pair);
    return out;
}

}  // namespace

MeasurePair cfree_convolve(const MeasurePair& p1, const MeasurePair& p2) {
    require_same_order(p1.order(), p2.order(), "cfree_convolve");
    auto r = sum(free_cumulants_from_moments(p1.nu()), free_cumulants_from_moments(p2.nu()));
    auto R = sum(cfree_cumulants_from_moments(p1), cfree_cumulants_from_moments(p2));
    auto nu = moments_from_free_cumulants(r);
    return {moments_from_cfree_cumulants(R, nu), nu};
}

MomentSequence free_convolve(const MomentSequence& m1, const MomentSequence& m2) {
    require_same_order(m1.order(), m2.order(), "free_convolve");
    return moments_from_free_cumulants(sum(free_cumulants_from_moments(m1), free_cumulants_from_moments(m2)));
}

MomentSequence boolean_convolve(const MomentSequence& m1, const MomentSequence& m2) {
    require_same_order(m1.order(), m2.order(), "boolean_convolve");
    return moments_from_boolean_cumulants(
        sum(boolean_cumulants_from_moments(m1), boolean_cumulants_from_moments(m2)));
}

std::optional<Rational> Dilation::power(int n) const {
    Rational out = pow(factor, static_cast<unsigned>(n)) * pow(radicand, static_cast<unsigned>(n / 2));
    if (n % 2 == 0) return out;
    if (!is_perfect_square(radicand)) return std::nullopt;
    return Rational(out * exact_sqrt(radicand));
}

long double Dilation::to_long_double() const {
    return cfree::to_long_double(factor) * std::sqrt(cfree::to_long_double(radicand));
}

void ScalingSpec::validate() const {
    if (copies < 1) throw std::invalid_argument("scaling needs at least one copy, got " + std::to_string(copies));
    if (sgn(lambda.radicand) <= 0) throw std::invalid_argument("dilation radicand must be positive");
}

MeasurePair dilate(const MeasurePair& pair, const Rational& lambda) {
    auto scale = [&](const MomentSequence& m) {
        std::vector<Rational> out(m.values());
        for (int n = 1; n <= m.order(); ++n) out[n] *= pow(lambda, static_cast<unsigned>(n));
        return MomentSequence(std::move(out));
    };
    return {scale(pair.mu()), scale(pair.nu())};
}

ScaledPair dilate(const MeasurePair& pair, const Dilation& lambda) {
    return scaled_power(pair, ScalingSpec{1, lambda});
}

ScaledPair scaled_power(const MeasurePair& pair, const ScalingSpec& spec) {
    spec.validate();
    const int order = pair.order();
    const auto r = free_cumulants_from_moments(pair.nu());
    const auto R = cfree_cumulants_from_moments(pair);

    bool exact = true;
    auto r_out = FreeCumulants::zeros(order);
    auto R_out = CFreeCumulants::zeros(order);
    for (int n = 1; n <= order && exact; ++n) {
        if (r[n] == 0 && R[n] == 0) continue;
        auto lp = spec.lambda.power(n);
        if (!lp) {
            exact = false;
            break;
        }
        const Rational factor = *lp * spec.copies;
        r_out[n] = r[n] * factor;
        R_out[n] = R[n] * factor;
    }
    if (exact) {
        auto nu = moments_from_free_cumulants(r_out);
        return from_exact(MeasurePair(moments_from_cfree_cumulants(R_out, nu), nu));
    }

    const long double lambda = spec.lambda.to_long_double();
    std::vector<long double> rf(order + 1, 0.0L), Rf(order + 1, 0.0L);
    long double lp = 1.0L;
    for (int n = 1; n <= order; ++n) {
        lp *= lambda;
        rf[n] = to_long_double(r[n]) * lp * spec.copies;
        Rf[n] = to_long_double(R[n]) * lp * spec.copies;
    }
    ScaledPair out;
    out.nu = detail::moments_from_cumulants<long double>(rf, nullptr);
    out.mu = detail::moments_from_cumulants<long double>(Rf, &out.nu);
    return out;
}

MomentSequence symmetric_two_point(const Rational& variance, int order) {
    if (sgn(variance) < 0) throw std::invalid_argument("variance must be non-negative");
    std::vector<Rational> m(static_cast<std::size_t>(order) + 1, 0);
    for (int n = 0; n <= order; n += 2) m[n] = pow(variance, static_cast<unsigned>(n / 2));
    return MomentSequence(std::move(m));
}

MeasurePair poisson_prelimit_pair(const Rational& alpha, const Rational& beta, int n_copies, int order) {
    if (n_copies < 1) throw std::invalid_argument("poisson prelimit needs N >= 1");
    auto two_atom = [&](const Rational& rate) {
        const Rational p = rate / n_copies;
        if (sgn(p) < 0 || p > 1) {
            throw std::invalid_argument("rate/N must lie in [0,1], got " + to_string(p));
        }
        std::vector<Rational> m(static_cast<std::size_t>(order) + 1, p);
        m[0] = 1;
        return MomentSequence(std::move(m));
    };
    return {two_atom(alpha), two_atom(beta)};
}

}  // namespace cfree
