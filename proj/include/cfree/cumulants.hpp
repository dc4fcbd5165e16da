#pragma once

#include "cfree/rational.hpp"

#include <cstddef>
#include <type_traits>
#include <vector>

namespace cfree {

/// Moments m_0..m_N of a normalized state (m_0 = 1), exact.
class MomentSequence {
public:
    /// Throws std::invalid_argument if `moments` has fewer than two entries or m_0 != 1.
    explicit MomentSequence(std::vector<Rational> moments);

    /// Moments of the point mass at `location`.
    static MomentSequence point_mass(const Rational& location, int order);

    int order() const { return static_cast<int>(m_.size()) - 1; }
    const Rational& operator[](int n) const { return m_.at(static_cast<std::size_t>(n)); }
    const std::vector<Rational>& values() const { return m_; }

    /// First `order`+1 moments; throws DegreeOverflow if more are requested than stored.
    MomentSequence truncated(int order) const;

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

private:
    std::vector<Rational> m_;
};

/// Cumulants c_1..c_N. Stored with a zero in slot 0 so c[n] is the n-th cumulant.
template <class Tag>
class CumulantSequence {
public:
    CumulantSequence() = default;
    /// `one_based` holds c_1..c_N.
    explicit CumulantSequence(const std::vector<Rational>& one_based) : c_(one_based.size() + 1) {
        for (std::size_t i = 0; i < one_based.size(); ++i) c_[i + 1] = one_based[i];
    }
    static CumulantSequence zeros(int order) {
        CumulantSequence out;
        out.c_.assign(static_cast<std::size_t>(order) + 1, 0);
        return out;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    Rational& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
    /// Includes the formal zero at index 0.
    const std::vector<Rational>& with_zero() const { return c_; }

    friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;

private:
    std::vector<Rational> c_{Rational(0)};
};

struct FreeTag {};
struct CFreeTag {};

/// Free (non-crossing) cumulants r_n of a single measure.
using FreeCumulants = CumulantSequence<FreeTag>;
/// c-free cumulants R_n of a pair (mu, nu).
using CFreeCumulants = CumulantSequence<CFreeTag>;

/// The state pair (mu, nu); both sequences share one truncation order.
class MeasurePair {
public:
    /// Throws OrderMismatch when the orders differ.
    MeasurePair(MomentSequence mu, MomentSequence nu);

    /// The pair (m, m), i.e. the free case.
    static MeasurePair diagonal(const MomentSequence& m) { return {m, m}; }
    /// The pair (m, delta_0), i.e. the boolean case.
    static MeasurePair boolean(const MomentSequence& m);

    int order() const { return mu_.order(); }
    const MomentSequence& mu() const { return mu_; }
    const MomentSequence& nu() const { return nu_; }

    friend bool operator==(const MeasurePair&, const MeasurePair&) = default;

private:
    MomentSequence mu_;
    MomentSequence nu_;
};

/// m_n = sum_k r_k sum_{l_1+..+l_k = n-k} m_{l_1} ... m_{l_k}
MomentSequence moments_from_free_cumulants(const FreeCumulants& r);
FreeCumulants free_cumulants_from_moments(const MomentSequence& m);

/// m_n(mu) = sum_k R_k sum_{l_1+..+l_k = n-k} m_{l_1}(nu) ... m_{l_{k-1}}(nu) m_{l_k}(mu).
/// Throws OrderMismatch unless R and nu have the same order.
MomentSequence moments_from_cfree_cumulants(const CFreeCumulants& R, const MomentSequence& nu);
CFreeCumulants cfree_cumulants_from_moments(const MeasurePair& pair);

/// c-free cumulants of (m, delta_0).
CFreeCumulants boolean_cumulants_from_moments(const MomentSequence& m);
MomentSequence moments_from_boolean_cumulants(const CFreeCumulants& K);

/// Largest n accepted by partition_sum_moment.
inline constexpr int kMaxPartitionSumSize = 12;

/// Explicit sum over NC(n): inner blocks weighted by r, outer blocks by R.
/// Independent of the recursions above. Throws BoundError when n exceeds
/// kMaxPartitionSumSize or either cumulant order.
Rational partition_sum_moment(const FreeCumulants& r, const CFreeCumulants& R, int n);

namespace detail {

// Shared recursion, templated so the floating fallback in `convolution` can
// reuse it. `cum` has the formal zero at index 0. When `inner` is null the
// sequence being built plays the inner role too (free case).
template <class T>
std::vector<T> moments_from_cumulants(const std::vector<T>& cum, std::type_identity_t<const std::vector<T>*> inner) {
    const std::size_t order = cum.size() - 1;
    std::vector<T> out(order + 1, T(0));
    out[0] = T(1);
    std::vector<T> power, next;
    for (std::size_t n = 1; n <= order; ++n) {
        const std::vector<T>& b = inner ? *inner : out;
        // power holds B^{k-1} truncated to degree n-1.
        power.assign(n, T(0));
        power[0] = T(1);
        T sum(0);
        for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t deg = n - k;
            T coeff(0);
            for (std::size_t j = 0; j <= deg; ++j) coeff += power[j] * out[deg - j];
            sum += cum[k] * coeff;
            if (k == n) break;
            next.assign(n, T(0));
            for (std::size_t i = 0; i < n; ++i) {
                if (power[i] == T(0)) continue;
                for (std::size_t j = 0; i + j < n; ++j) next[i + j] += power[i] * b[j];
            }
            power.swap(next);
        }
        out[n] = sum;
    }
    return out;
}

template <class T>
std::vector<T> cumulants_from_moments(const std::vector<T>& moments, std::type_identity_t<const std::vector<T>*> inner) {
    const std::size_t order = moments.size() - 1;
    std::vector<T> cum(order + 1, T(0));
    const std::vector<T>& b = inner ? *inner : moments;
    std::vector<T> power, next;
    for (std::size_t n = 1; n <= order; ++n) {
        power.assign(n, T(0));
        power[0] = T(1);
        T sum(0);
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t deg = n - k;
            T coeff(0);
            for (std::size_t j = 0; j <= deg; ++j) coeff += power[j] * moments[deg - j];
            sum += cum[k] * coeff;
            next.assign(n, T(0));
            for (std::size_t i = 0; i < n; ++i) {
                if (power[i] == T(0)) continue;
                for (std::size_t j = 0; i + j < n; ++j) next[i + j] += power[i] * b[j];
            }
            power.swap(next);
        }
        cum[n] = moments[n] - sum;
    }
    return cum;
}

}  // namespace detail

}  // namespace cfree
