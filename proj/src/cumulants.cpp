#include "cfree/cumulants.hpp"

#include "cfree/errors.hpp"
#include "cfree/partitions.hpp"

#include <stdexcept>
#include <string>

namespace cfree {

MomentSequence::MomentSequence(std::vector<Rational> moments) : m_(std::move(moments)) {
    if (m_.size() < 2) throw std::invalid_argument("moment sequence needs order >= 1");
    if (m_[0] != 1) throw std::invalid_argument("moment sequence must be normalized (m_0 = 1), got " + to_string(m_[0]));
}

MomentSequence MomentSequence::point_mass(const Rational& location, int order) {
    std::vector<Rational> m(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) m[n] = pow(location, static_cast<unsigned>(n));
    return MomentSequence(std::move(m));
}

MomentSequence MomentSequence::truncated(int order) const {
    if (order > this->order()) {
        throw DegreeOverflow("cannot extend a moment sequence of order " + std::to_string(this->order()) + " to " +
                             std::to_string(order));
    }
    return MomentSequence(std::vector<Rational>(m_.begin(), m_.begin() + order + 1));
}

MeasurePair::MeasurePair(MomentSequence mu, MomentSequence nu) : mu_(std::move(mu)), nu_(std::move(nu)) {
    if (mu_.order() != nu_.order()) {
        throw OrderMismatch("measure pair orders differ: " + std::to_string(mu_.order()) + " vs " +
                            std::to_string(nu_.order()));
    }
}

MeasurePair MeasurePair::boolean(const MomentSequence& m) {
    return {m, MomentSequence::point_mass(0, m.order())};
}

namespace {

template <class Tag>
CumulantSequence<Tag> from_with_zero(const std::vector<Rational>& c) {
    return CumulantSequence<Tag>(std::vector<Rational>(c.begin() + 1, c.end()));
}

}  // namespace

MomentSequence moments_from_free_cumulants(const FreeCumulants& r) {
    if (r.order() < 1) throw std::invalid_argument("cumulant sequence needs order >= 1");
    return MomentSequence(detail::moments_from_cumulants(r.with_zero(), nullptr));
}

FreeCumulants free_cumulants_from_moments(const MomentSequence& m) {
    return from_with_zero<FreeTag>(detail::cumulants_from_moments(m.values(), nullptr));
}

MomentSequence moments_from_cfree_cumulants(const CFreeCumulants& R, const MomentSequence& nu) {
    if (R.order() != nu.order()) {
        throw OrderMismatch("c-free cumulants of order " + std::to_string(R.order()) + " with nu of order " +
                            std::to_string(nu.order()));
    }
    return MomentSequence(detail::moments_from_cumulants(R.with_zero(), &nu.values()));
}

CFreeCumulants cfree_cumulants_from_moments(const MeasurePair& pair) {
    return from_with_zero<CFreeTag>(detail::cumulants_from_moments(pair.mu().values(), &pair.nu().values()));
}

CFreeCumulants boolean_cumulants_from_moments(const MomentSequence& m) {
    return cfree_cumulants_from_moments(MeasurePair::boolean(m));
}

MomentSequence moments_from_boolean_cumulants(const CFreeCumulants& K) {
    return moments_from_cfree_cumulants(K, MomentSequence::point_mass(0, K.order()));
}

Rational partition_sum_moment(const FreeCumulants& r, const CFreeCumulants& R, int n) {
    if (n < 1 || n > kMaxPartitionSumSize) {
        throw BoundError("partition_sum_moment: n must lie in [1, " + std::to_string(kMaxPartitionSumSize) + "], got " +
                         std::to_string(n));
    }
    if (n > r.order() || n > R.order()) throw BoundError("partition_sum_moment: n exceeds the cumulant order");

    Rational total = 0;
    for_each_nc(n, [&](const Partition& p) {
        const auto cls = classify(p);
        std::vector<int> sizes(p.block_count(), 0);
        for (auto l : p.labels()) ++sizes[l];
        Rational term = 1;
        for (int b = 0; b < p.block_count(); ++b) term *= cls.inner[b] ? r[sizes[b]] : R[sizes[b]];
        total += term;
    });
    return total;
}

}  // namespace cfree
