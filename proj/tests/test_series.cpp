#include "doctest.h"

#include "support.hpp"

#include "cfree/convolution.hpp"
#include "cfree/errors.hpp"
#include "cfree/limit_laws.hpp"
#include "cfree/partitions.hpp"
#include "cfree/series.hpp"

#include <cmath>
#include <numbers>

using namespace cfree;
using testing_support::RationalSource;

namespace {

MeasurePair random_pair(RationalSource& src, int order) {
    // Built from cumulants so that both components are arbitrary rationals.
    FreeCumulants r(src.many(order));
    CFreeCumulants R(src.many(order));
    auto nu = moments_from_free_cumulants(r);
    return {moments_from_cfree_cumulants(R, nu), nu};
}

TruncatedSeries series(std::vector<Rational> c) { return TruncatedSeries(std::move(c)); }

}  // namespace

TEST_CASE("series arithmetic") {
    CHECK(series({1, 1, 0, 0}) * series({1, -1, 0, 0}) == series({1, 0, -1, 0}));
    auto geo = reciprocal(series({1, -1, 0, 0, 0, 0}));
    CHECK(geo == series({1, 1, 1, 1, 1, 1}));
    auto even = compose(geo, series({0, 0, 1, 0, 0, 0}));
    CHECK(even == series({1, 0, 1, 0, 1, 0}));
    CHECK_THROWS_AS(reciprocal(series({0, 1})), std::domain_error);
    CHECK_THROWS_AS(compose(geo, TruncatedSeries::constant(1, 5)), std::domain_error);
    CHECK_THROWS_AS(series({1, 2}) + series({1, 2, 3}), OrderMismatch);
    CHECK(series({0, 3, 4}).divided_by_z() == series({3, 4, 0}));
    CHECK(series({1, 3, 4}).times_z() == series({0, 1, 3}));
}

TEST_CASE("transforms of simple pairs") {
    const int N = 10;
    auto delta = MomentSequence::point_mass(0, N);
    auto t = abcd_from_pair(MeasurePair(delta, delta));
    CHECK(t.A.is_zero());
    CHECK(t.C.is_zero());
    CHECK(t.B == TruncatedSeries::constant(1, N));
    CHECK(t.D == TruncatedSeries::constant(1, N));
    auto [r1, r2] = check_transform_identities(t);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());

    // Semicircle pair: A = C = beta^2 z^2 and beta^2 z^2 B^2 = B - 1.
    const Rational b2(2, 3);
    std::vector<Rational> m(N + 1);
    for (int n = 0; n <= N; ++n) m[n] = semicircle_moment(b2, n);
    MomentSequence sc(m);
    auto ts = abcd_from_pair(MeasurePair::diagonal(sc));
    auto z2 = TruncatedSeries(N);
    z2[2] = b2;
    CHECK(ts.A == z2);
    CHECK(ts.C == z2);
    CHECK(z2 * ts.B * ts.B == ts.B - TruncatedSeries::constant(1, N));

    // Poisson-limit cumulants r_n = beta for every n: A = beta z / (1 - z).
    const Rational beta(5, 2);
    std::vector<Rational> fp(N + 1);
    for (int n = 0; n <= N; ++n) fp[n] = free_poisson_moment(beta, n);
    auto tp = abcd_from_pair(MeasurePair::diagonal(MomentSequence(fp)));
    for (int n = 1; n <= N; ++n) CHECK(tp.A[n] == beta);
}

TEST_CASE("transform identities vanish for random pairs") {
    RationalSource src(41);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_pair(src, 12);
        auto [r1, r2] = check_transform_identities(abcd_from_pair(p));
        CHECK(r1.is_zero());
        CHECK(r2.is_zero());
        CHECK(check_inversion_identities(p).is_zero());
    }
    // A perturbed D breaks the second identity.
    auto p = random_pair(src, 8);
    auto t = abcd_from_pair(p);
    t.D[5] += 1;
    CHECK_FALSE(check_transform_identities(t).second.is_zero());
}

TEST_CASE("boolean pairs: D (1 - C) = 1") {
    RationalSource src(42);
    std::vector<Rational> m{1};
    for (int i = 0; i < 9; ++i) m.push_back(src.next());
    auto pair = MeasurePair::boolean(MomentSequence(m));
    auto t = abcd_from_pair(pair);
    CHECK(t.D * (TruncatedSeries::constant(1, 9) - t.C) == TruncatedSeries::constant(1, 9));
    CHECK(check_inversion_identities(pair).is_zero());
}

TEST_CASE("transforms are additive under c-free convolution") {
    RationalSource src(43);
    for (int trial = 0; trial < 5; ++trial) {
        auto p1 = random_pair(src, 9), p2 = random_pair(src, 9);
        auto t = abcd_from_pair(cfree_convolve(p1, p2));
        auto t1 = abcd_from_pair(p1), t2 = abcd_from_pair(p2);
        CHECK(t.A == t1.A + t2.A);
        CHECK(t.C == t1.C + t2.C);
    }
}

TEST_CASE("continued fractions") {
    CHECK(std::abs(cf_eval({FractionLevel{0, 0, 0}}, Complex(2, 0)) - Complex(0.5, 0)) < 1e-15);
    CHECK_THROWS_AS(cf_eval({FractionLevel{2, 0, 0}}, Complex(2, 0)), NumericalDegeneracy);

    const Complex z1(0, 3);
    CHECK(std::abs(cf_eval(gaussian_fraction_levels(1, 1, 60), z1) - gaussian_cauchy_G(1, 1, z1)) < 1e-10);
    const Complex z2(2, 1);
    CHECK(std::abs(cf_eval(poisson_fraction_levels(1, 1), z2) - poisson_cauchy_G(1, 1, z2)) < 1e-10);
}

TEST_CASE("continued fraction depth convergence away from the axis") {
    // Tail-zero truncation converges geometrically in |z|; at |Im z| = 0.5 the
    // semicircle fraction still moves by ~1e-9 between depths 40 and 80, so
    // the 1e-12 bound is checked from |Im z| >= 2.
    for (double im : {2.0, 3.0}) {
        for (double re : {-3.0, -1.0, 0.0, 1.5, 4.0}) {
            const Complex z(re, im);
            for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0}}) {
                const auto g40 = cf_eval(gaussian_fraction_levels(a, b, 40), z);
                const auto g80 = cf_eval(gaussian_fraction_levels(a, b, 80), z);
                CHECK(std::abs(g40 - g80) < 1e-12);
                const auto p40 = cf_eval(poisson_fraction_levels(a, b, 40), z);
                const auto p80 = cf_eval(poisson_fraction_levels(a, b, 80), z);
                CHECK(std::abs(p40 - p80) < 1e-12);
            }
        }
    }
}

TEST_CASE("Cauchy evaluators") {
    CauchyEvaluator semi(GaussianLaw{1, 1});
    const double pi = std::numbers::pi;
    CHECK(std::fabs(stieltjes_density(semi, 0, 1e-6) - 1 / pi) < 1e-5);
    CHECK(std::fabs(stieltjes_density(semi, 3.5, 1e-6)) < 1e-5);

    CauchyEvaluator fp(PoissonLaw{1, 1});
    CHECK(std::fabs(stieltjes_density(fp, 1, 1e-6) - std::sqrt(3.0) / (2 * pi)) < 1e-5);

    auto ladder = stieltjes_ladder(semi, 0.5);
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0].first == 1e-3);
    CHECK_THROWS_AS(stieltjes_density(semi, 0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(semi(Complex(1, 0)), std::domain_error);

    // The moment expansion agrees with the closed form far from the support.
    std::vector<Rational> m(21);
    for (int n = 0; n <= 20; ++n) m[n] = semicircle_moment(1, n);
    auto asym = CauchyEvaluator::from_moments(MomentSequence(m));
    const Complex far(0, 20);
    CHECK(std::abs(asym(far) - semi(far)) < 1e-12);

    CauchyEvaluator frac(FractionExpansion{gaussian_fraction_levels(2, 1)});
    CHECK(std::abs(frac(Complex(1, 2)) - CauchyEvaluator(GaussianLaw{2, 1})(Complex(1, 2))) < 1e-10);
}
