#pragma once

#include "cfree/cumulants.hpp"

#include <optional>
#include <vector>

namespace cfree {

/// Adds both cumulant families. Throws OrderMismatch on unequal orders.
MeasurePair cfree_convolve(const MeasurePair& p1, const MeasurePair& p2);
MomentSequence free_convolve(const MomentSequence& m1, const MomentSequence& m2);
/// c-free convolution with both second slots pinned to delta_0.
MomentSequence boolean_convolve(const MomentSequence& m1, const MomentSequence& m2);

/// The scalar factor * sqrt(radicand), radicand > 0. Covers 1/sqrt(N) exactly.
struct Dilation {
    Rational factor{1};
    Rational radicand{1};

    static Dilation rational(const Rational& lambda) { return {lambda, 1}; }
    /// n <= 0 yields radicand 0, which validate() rejects.
    static Dilation inverse_sqrt(int n) { return {1, n > 0 ? Rational(1, n) : Rational(0)}; }

    /// lambda^n if it is rational.
    std::optional<Rational> power(int n) const;
    long double to_long_double() const;
};

struct ScalingSpec {
    int copies = 1;
    Dilation lambda;

    /// Throws std::invalid_argument for copies < 1 or a non-positive radicand.
    void validate() const;
    /// N copies dilated by 1/sqrt(N).
    static ScalingSpec central_limit(int n) { return {n, Dilation::inverse_sqrt(n)}; }
    /// N copies, no dilation.
    static ScalingSpec plain(int n) { return {n, Dilation{}}; }
};

/// Result of a dilation by a possibly irrational factor. `exact` is set when
/// every moment is rational; the floating moments are always filled.
struct ScaledPair {
    std::optional<MeasurePair> exact;
    std::vector<long double> mu;
    std::vector<long double> nu;

    bool is_exact() const { return exact.has_value(); }
};

/// Moments scale as m_n -> lambda^n m_n.
MeasurePair dilate(const MeasurePair& pair, const Rational& lambda);
ScaledPair dilate(const MeasurePair& pair, const Dilation& lambda);

/// D_lambda applied to the N-fold c-free convolution power, computed on cumulants
/// as N * lambda^n * c_n. Exact unless some lambda^n is irrational while the
/// matching cumulant is nonzero; then the moments are evaluated in long double.
ScaledPair scaled_power(const MeasurePair& pair, const ScalingSpec& spec);

/// Moments of (delta_{-a} + delta_a)/2 with a^2 = variance.
MomentSequence symmetric_two_point(const Rational& variance, int order);
/// mu_N = (1 - alpha/N) delta_0 + (alpha/N) delta_1 and nu_N likewise with beta.
MeasurePair poisson_prelimit_pair(const Rational& alpha, const Rational& beta, int n_copies, int order);

}  // namespace cfree
