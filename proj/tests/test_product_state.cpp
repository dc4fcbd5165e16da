#include "doctest.h"

#include "support.hpp"

#include "cfree/errors.hpp"
#include "cfree/product_state.hpp"

using namespace cfree;
using testing_support::RationalSource;

namespace {

MomentSequence random_moments(RationalSource& src, int order, bool centered = false) {
    std::vector<Rational> m{1};
    for (int i = 1; i <= order; ++i) m.push_back(centered && i == 1 ? Rational(0) : src.next());
    return MomentSequence(m);
}

StateFamily random_family(RationalSource& src, int order) {
    return {MeasurePair(random_moments(src, order), random_moments(src, order)),
            MeasurePair(random_moments(src, order), random_moments(src, order))};
}

// A psi-centered polynomial in X_index of the given degree (constant term adjusted).
Factor centered_factor(RationalSource& src, ProductStateEvaluator& ev, int index, int degree) {
    Factor f{index, src.many(degree + 1)};
    if (f.coeffs.back() == 0) f.coeffs.back() = 1;
    f.coeffs[0] -= ev.psi_single(f);
    return f;
}

// Alternating product of centered factors starting in algebra `first`.
FactorWord elementary(RationalSource& src, ProductStateEvaluator& ev, int first, int length) {
    FactorWord w;
    for (int j = 0; j < length; ++j) w.push_back(centered_factor(src, ev, (first + j - 1) % 2 + 1, 1));
    return w;
}

FactorWord concat(FactorWord a, const FactorWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("single-algebra words and the unit") {
    RationalSource src(31);
    auto fam = random_family(src, 6);
    CHECK(eval_phi(Word{}, fam) == 1);
    CHECK(eval_psi(Word{}, fam) == 1);
    for (int k = 1; k <= 6; ++k) {
        CHECK(eval_phi(Word({{1, k}}), fam) == fam.pair1.mu()[k]);
        CHECK(eval_phi(Word({{2, k}}), fam) == fam.pair2.mu()[k]);
        CHECK(eval_psi(Word({{1, k}}), fam) == fam.pair1.nu()[k]);
    }
}

TEST_CASE("two and three letter words") {
    RationalSource src(32);
    auto fam = random_family(src, 4);
    const auto& mu1 = fam.pair1.mu();
    const auto& mu2 = fam.pair2.mu();
    CHECK(eval_phi(Word({{1, 1}, {2, 1}}), fam) == mu1[1] * mu2[1]);

    StateFamily c(MeasurePair(random_moments(src, 4, true), random_moments(src, 4, true)),
                  MeasurePair(random_moments(src, 4), random_moments(src, 4)));
    // With X_1 centered under both states, reducing around the middle letter
    // leaves only psi_2(X_2) phi(X_1^2).
    CHECK(eval_phi(Word({{1, 1}, {2, 1}, {1, 1}}), c) == c.pair2.nu()[1] * c.pair1.mu()[2]);
    CHECK(eval_psi(Word({{1, 1}, {2, 1}, {1, 1}}), c) == c.pair2.nu()[1] * c.pair1.nu()[2]);
}

TEST_CASE("factorization for elementary words starting in different algebras") {
    RationalSource src(33);
    for (int trial = 0; trial < 30; ++trial) {
        auto fam = random_family(src, 6);
        ProductStateEvaluator ev(fam);
        const int first = src.uniform_int(1, 2);
        const int len1 = src.uniform_int(1, 3), len2 = src.uniform_int(1, 3);
        auto y1 = elementary(src, ev, first, len1);
        auto y2 = elementary(src, ev, 3 - first, len2);
        auto y1s = adjoint(y1);
        CHECK(ev.phi(concat(y1s, y2)) == ev.phi(y1s) * ev.phi(y2));
    }
}

TEST_CASE("reduction around a middle element") {
    RationalSource src(34);
    for (int trial = 0; trial < 30; ++trial) {
        auto fam = random_family(src, 6);
        ProductStateEvaluator ev(fam);
        const int i = src.uniform_int(1, 2);
        const int other = 3 - i;
        auto y1 = elementary(src, ev, other, src.uniform_int(0, 2));
        auto y2 = elementary(src, ev, other, src.uniform_int(0, 2));
        Factor a{i, src.many(src.uniform_int(2, 3))};
        auto y1s = adjoint(y1);
        auto lhs = ev.phi(concat(concat(y1s, {a}), y2));
        Rational rhs = ev.psi_single(a) * ev.phi(concat(y1s, y2)) - ev.psi_single(a) * ev.phi(y1s) * ev.phi(y2) +
                   ev.phi_single(a) * ev.phi(y1s) * ev.phi(y2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("psi is phi on the diagonal family") {
    RationalSource src(35);
    auto fam = random_family(src, 6);
    StateFamily diag(MeasurePair::diagonal(fam.pair1.nu()), MeasurePair::diagonal(fam.pair2.nu()));
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<int> idx;
        for (int j = 0; j < 6; ++j) idx.push_back((mask >> j & 1) + 1);
        auto w = Word::from_indices(idx);
        CHECK(eval_psi(w, fam) == eval_phi(w, diag));
    }
}

TEST_CASE("word sums in low degree") {
    RationalSource src(36);
    auto fam = random_family(src, 3);
    const auto& a = fam.pair1.mu();
    const auto& b = fam.pair2.mu();
    CHECK(sum_moments_via_words(fam.pair1, fam.pair2, 1) == a[1] + b[1]);
    CHECK(sum_moments_via_words(fam.pair1, fam.pair2, 2) == a[2] + b[2] + 2 * a[1] * b[1]);
}

TEST_CASE("errors") {
    RationalSource src(37);
    auto fam = random_family(src, 3);
    CHECK_THROWS_AS(eval_phi(Word({{1, 2}, {2, 2}}), fam), DegreeOverflow);
    CHECK_THROWS_AS(Word({{1, 1}, {1, 2}}), ShapeError);
    CHECK_THROWS_AS(Word({{3, 1}}), ShapeError);
    CHECK_THROWS_AS(sum_moments_via_words(fam.pair1, fam.pair2, 4), BoundError);
    CHECK_THROWS_AS(sum_moments_via_words(fam.pair1, fam.pair2, 0), BoundError);
}
