#include "cfree/verify.hpp"

#include "cfree/convolution.hpp"
#include "cfree/cumulants.hpp"
#include "cfree/limit_laws.hpp"
#include "cfree/partitions.hpp"
#include "cfree/product_state.hpp"
#include "cfree/series.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cfree {

namespace {

class Recorder {
public:
    explicit Recorder(std::string group) : group_(std::move(group)) {}

    void exact(const std::string& name, const std::function<bool(std::string&)>& check) {
        CheckResult r;
        r.group = group_;
        r.name = name;
        try {
            r.passed = check(r.detail);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

    // check returns the worst deviation.
    void numeric(const std::string& name, double tolerance, const std::function<double()>& check) {
        CheckResult r;
        r.group = group_;
        r.name = name;
        r.tolerance = tolerance;
        try {
            const double worst = check();
            r.measured = worst;
            r.passed = worst <= tolerance;
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string group_;
    std::vector<CheckResult> out_;
};

class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}
    Rational next() {
        Rational q(std::uniform_int_distribution<int>(-6, 6)(rng_), std::uniform_int_distribution<int>(1, 5)(rng_));
        q.canonicalize();
        return q;
    }
    std::vector<Rational> many(int n) {
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) v.push_back(next());
        return v;
    }
    MeasurePair pair(int order) {
        auto nu = moments_from_free_cumulants(FreeCumulants(many(order)));
        return {moments_from_cfree_cumulants(CFreeCumulants(many(order)), nu), nu};
    }

private:
    std::mt19937_64 rng_;
};

double as_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

std::vector<CheckResult> check_partitions() {
    Recorder rec("partitions");
    rec.exact("nc_counts_catalan", [](std::string& why) {
        for (int n = 1; n <= 10; ++n) {
            if (BigInt(enumerate_nc(n).size()) != catalan(n) || BigInt(enumerate_nc2(2 * n).size()) != catalan(n)) {
                why = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });
    BlockCounts counts(10);
    rec.exact("a_table_vs_enumeration", [&](std::string& why) {
        for (int n = 1; n <= 10; ++n) {
            std::map<int, BigInt> by_inner;
            for (const auto& p : enumerate_nc2(2 * n)) ++by_inner[classify(p).counts.inner_count];
            for (int k = 0; k <= n; ++k) {
                if (counts.a(n, k) != by_inner[k]) {
                    why = "a(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    return false;
                }
            }
        }
        return true;
    });
    rec.exact("a_table_boundaries", [&](std::string& why) {
        for (int n = 2; n <= 10; ++n) {
            if (counts.a(n, 0) != 1 || counts.a(n, n - 1) != catalan(n - 1) || counts.a(n, n - 2) != catalan(n - 1)) {
                why = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });
    rec.exact("t_table_vs_kreweras_and_enumeration", [&](std::string& why) {
        for (int n = 1; n <= 9; ++n) {
            std::map<int, BigInt> by_blocks;
            for (const auto& p : enumerate_nc(n)) ++by_blocks[p.block_count()];
            for (int k = 1; k <= n; ++k) {
                if (counts.t(n, k) != kreweras(n, k) || counts.t(n, k) != by_blocks[k]) {
                    why = "t(" + std::to_string(n) + "," + std::to_string(k) + ")";
                    return false;
                }
            }
        }
        return true;
    });
    rec.exact("s_table_vs_enumeration_and_identities", [&](std::string& why) {
        for (int n = 1; n <= 9; ++n) {
            std::map<std::pair<int, int>, BigInt> census;
            for (const auto& p : enumerate_nc(n)) {
                auto c = classify(p).counts;
                ++census[{c.outer_count, c.inner_count}];
            }
            for (int k = 0; k <= n; ++k) {
                for (int l = 0; l <= n; ++l) {
                    if (counts.s(n, k, l) != census[{k, l}]) {
                        why = "s(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
                        return false;
                    }
                }
            }
            for (int l = 0; n >= 2 && l <= n - 1; ++l) {
                if (counts.s(n, 1, l) != counts.t(n - 1, l + 1)) {
                    why = "single outer block, n = " + std::to_string(n);
                    return false;
                }
            }
            for (int k = 0; k + 1 <= n; ++k) {
                for (int l = 0; l <= n; ++l) {
                    BigInt rhs = 0;
                    for (int r = 1; r <= n; ++r)
                        for (int j = 0; j <= l; ++j) rhs += counts.s(r, 1, j) * counts.s(n - r, k, l - j);
                    if (counts.s(n, k + 1, l) != rhs) {
                        why = "outer-block split, n = " + std::to_string(n);
                        return false;
                    }
                }
            }
        }
        return true;
    });
    return rec.take();
}

std::vector<CheckResult> check_cumulants() {
    Recorder rec("cumulants");
    rec.exact("roundtrips_order_12", [](std::string& why) {
        RandomRationals src(101);
        for (int trial = 0; trial < 50; ++trial) {
            auto p = src.pair(12);
            if (moments_from_free_cumulants(free_cumulants_from_moments(p.nu())) != p.nu() ||
                moments_from_cfree_cumulants(cfree_cumulants_from_moments(p), p.nu()) != p.mu() ||
                moments_from_boolean_cumulants(boolean_cumulants_from_moments(p.mu())) != p.mu()) {
                why = "trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    });
    rec.exact("recursion_vs_partition_sum", [](std::string& why) {
        RandomRationals src(102);
        for (int trial = 0; trial < 5; ++trial) {
            FreeCumulants r(src.many(8));
            CFreeCumulants R(src.many(8));
            auto mu = moments_from_cfree_cumulants(R, moments_from_free_cumulants(r));
            for (int n = 1; n <= 8; ++n) {
                if (partition_sum_moment(r, R, n) != mu[n]) {
                    why = "n = " + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });
    rec.exact("third_moment_expression", [](std::string& why) {
        RandomRationals src(103);
        for (int trial = 0; trial < 20; ++trial) {
            FreeCumulants r(src.many(3));
            CFreeCumulants R(src.many(3));
            auto mu = moments_from_cfree_cumulants(R, moments_from_free_cumulants(r));
            Rational expected = R[3] + 2 * R[2] * R[1] + R[1] * R[1] * R[1] + R[2] * r[1];
            if (mu[3] != expected) {
                why = "trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    });
    return rec.take();
}

std::vector<CheckResult> check_oracle() {
    Recorder rec("oracle");
    rec.exact("cfree_convolve_vs_word_sums", [](std::string& why) {
        RandomRationals src(201);
        for (int trial = 0; trial < 6; ++trial) {
            auto p1 = src.pair(8), p2 = src.pair(8);
            auto conv = cfree_convolve(p1, p2);
            for (int n = 1; n <= 8; ++n) {
                if (sum_moments_via_words(p1, p2, n) != conv.mu()[n]) {
                    why = "trial " + std::to_string(trial) + ", n = " + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });
    rec.exact("free_convolve_vs_word_sums", [](std::string& why) {
        RandomRationals src(202);
        for (int trial = 0; trial < 4; ++trial) {
            auto m1 = src.pair(8).nu(), m2 = src.pair(8).nu();
            auto conv = free_convolve(m1, m2);
            for (int n = 1; n <= 8; ++n) {
                if (sum_moments_via_words(MeasurePair::diagonal(m1), MeasurePair::diagonal(m2), n) != conv[n]) {
                    why = "trial " + std::to_string(trial) + ", n = " + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });
    return rec.take();
}

std::vector<Complex> upper_half_plane_points() {
    std::vector<Complex> zs;
    for (double im : {1.5, 3.0})
        for (int re = -2; re <= 7; ++re) zs.emplace_back(re, im);
    return zs;
}

std::vector<CheckResult> check_series() {
    Recorder rec("series");
    rec.exact("transform_identities_order_12", [](std::string& why) {
        RandomRationals src(301);
        for (int trial = 0; trial < 20; ++trial) {
            auto p = src.pair(12);
            auto [r1, r2] = check_transform_identities(abcd_from_pair(p));
            if (!r1.is_zero() || !r2.is_zero() || !check_inversion_identities(p).is_zero()) {
                why = "trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    });
    rec.numeric("fraction_vs_closed_form", 1e-10, [] {
        double worst = 0;
        for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0}, std::pair{1.0, 2.0}}) {
            for (auto z : upper_half_plane_points()) {
                worst = std::max(worst, std::abs(cf_eval(gaussian_fraction_levels(a, b), z) - gaussian_cauchy_G(a, b, z)));
            }
        }
        for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{3.0, 1.0}, std::pair{1.0, 3.0}}) {
            for (auto z : upper_half_plane_points()) {
                worst = std::max(worst, std::abs(cf_eval(poisson_fraction_levels(a, b), z) - poisson_cauchy_G(a, b, z)));
            }
        }
        return worst;
    });
    rec.numeric("stieltjes_inversion", 1e-2, [] {
        double worst = 0;
        for (const auto& m : {gaussian_limit_measure(1, 1), gaussian_limit_measure(2, 1), poisson_limit_measure(1, 1),
                              poisson_limit_measure(3, 1)}) {
            CauchyEvaluator g = m.family == "gaussian" ? CauchyEvaluator(GaussianLaw{m.alpha, m.beta})
                                                       : CauchyEvaluator(PoissonLaw{m.alpha, m.beta});
            const double inset = 0.05 * (m.hi - m.lo);
            for (int i = 0; i < 50; ++i) {
                const double t = m.lo + inset + (m.hi - m.lo - 2 * inset) * i / 49.0;
                worst = std::max(worst, std::fabs(stieltjes_density(g, t, 1e-4) - m.density(t)));
            }
        }
        return worst;
    });
    return rec.take();
}

std::vector<CheckResult> check_laws() {
    Recorder rec("laws");
    const std::vector<std::pair<double, double>> gaussian_variances{{1, 1}, {4, 1}, {2, 1}, {1, 4}};
    rec.numeric("gaussian_moments", 1e-7, [&] {
        double worst = 0;
        for (auto [a2, b2] : gaussian_variances) {
            auto m = gaussian_limit_measure_from_variances(a2, b2);
            for (int n = 1; n <= 8; ++n) {
                const double exact = as_double(gaussian_limit_moment(Rational(a2), Rational(b2), n));
                worst = std::max(worst, std::fabs(quadrature_moment(m, n) - exact));
            }
        }
        return worst;
    });
    rec.numeric("gaussian_mass", 1e-8, [&] {
        double worst = 0;
        for (auto [a2, b2] : gaussian_variances)
            worst = std::max(worst, std::fabs(quadrature_moment(gaussian_limit_measure_from_variances(a2, b2), 0) - 1));
        return worst;
    });
    rec.exact("gaussian_atom_region", [](std::string& why) {
        for (double ratio : {0.05, 0.25, 0.45, 0.5, 0.55, 1.0, 3.0}) {
            if ((ratio < 0.5) == gaussian_limit_measure_from_variances(1, ratio).atoms.empty()) {
                why = "beta^2/alpha^2 = " + std::to_string(ratio);
                return false;
            }
        }
        return true;
    });
    const std::vector<std::pair<Rational, Rational>> poisson_params{
        {1, 1}, {Rational(1, 2), Rational(1, 2)}, {3, 1}, {1, 3}};
    rec.numeric("poisson_moments", 1e-7, [&] {
        double worst = 0;
        for (const auto& [a, b] : poisson_params) {
            auto m = poisson_limit_measure(as_double(a), as_double(b));
            for (int n = 1; n <= 6; ++n)
                worst = std::max(worst, std::fabs(quadrature_moment(m, n) - as_double(poisson_limit_moment(a, b, n))));
        }
        return worst;
    });
    rec.numeric("poisson_mass", 1e-8, [&] {
        double worst = 0;
        for (const auto& [a, b] : poisson_params)
            worst = std::max(worst, std::fabs(quadrature_moment(poisson_limit_measure(as_double(a), as_double(b)), 0) - 1));
        return worst;
    });
    rec.numeric("poisson_atom_3_1", 1e-9, [] {
        auto m = poisson_limit_measure(3, 1);
        if (m.atoms.size() != 1) throw std::runtime_error("expected one atom");
        return std::max(std::fabs(m.atoms[0].location - 4.5), std::fabs(m.atoms[0].weight - 0.5));
    });
    rec.numeric("orthogonality", 1e-7, [] {
        double worst = 0;
        for (auto [a2, b2] : {std::pair{1, 1}, std::pair{4, 1}}) {
            auto polys = ortho_polys(a2, b2, 5);
            auto m = gaussian_limit_measure_from_variances(a2, b2);
            for (int i = 0; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j)
                    worst = std::max(worst, std::fabs(quadrature_integrate(m, [&](double x) {
                                         return eval_poly(polys.rows[i], x) * eval_poly(polys.rows[j], x);
                                     })));
        }
        return worst;
    });
    return rec.take();
}

// Largest ratio err(2N)/err(N) over n <= 6, skipping moments that are exact at both sizes.
template <class Prelimit, class Limit>
double convergence_ratio(Prelimit prelimit, Limit limit, int n_small) {
    double worst = 0;
    auto small = prelimit(n_small), large = prelimit(2 * n_small);
    for (int n = 1; n <= 6; ++n) {
        for (int side = 0; side < 2; ++side) {
            const auto& s = side == 0 ? small.mu() : small.nu();
            const auto& l = side == 0 ? large.mu() : large.nu();
            Rational e_small = abs(s[n] - limit(side, n));
            Rational e_large = abs(l[n] - limit(side, n));
            if (e_small == 0 && e_large == 0) continue;
            if (e_small == 0) return INFINITY;
            Rational ratio = e_large / e_small;
            worst = std::max(worst, as_double(ratio));
        }
    }
    return worst;
}

std::vector<CheckResult> check_limits() {
    Recorder rec("limits");
    rec.numeric("central_limit_convergence_ratio", 0.6, [] {
        double worst = 0;
        for (auto [a2, b2] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(2), Rational(1)}}) {
            MeasurePair base(symmetric_two_point(a2, 6), symmetric_two_point(b2, 6));
            auto prelimit = [&](int n) { return *scaled_power(base, ScalingSpec::central_limit(n)).exact; };
            auto limit = [&](int side, int n) {
                return side == 0 ? gaussian_limit_moment(a2, b2, n) : semicircle_moment(b2, n);
            };
            worst = std::max(worst, convergence_ratio(prelimit, limit, 64));
        }
        return worst;
    });
    rec.numeric("poisson_limit_convergence_ratio", 0.6, [] {
        double worst = 0;
        for (auto [a, b] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(2), Rational(1, 2)}}) {
            auto prelimit = [&](int n) {
                return *scaled_power(poisson_prelimit_pair(a, b, n, 6), ScalingSpec::plain(n)).exact;
            };
            auto limit = [&](int side, int n) {
                return side == 0 ? poisson_limit_moment(a, b, n) : free_poisson_moment(b, n);
            };
            worst = std::max(worst, convergence_ratio(prelimit, limit, 64));
        }
        return worst;
    });
    rec.exact("cauchy_tail_decreasing", [](std::string& why) {
        auto report = cauchy_tail_limit_check(1, {2, 4, 8});
        std::ostringstream s;
        for (double d : report.sup_distances) s << d << ' ';
        why = "sup distances " + s.str();
        return report.decreasing;
    });
    return rec.take();
}

}  // namespace

std::vector<CheckResult> run_verify(std::string_view selector) {
    using Group = std::vector<CheckResult> (*)();
    const std::pair<std::string_view, Group> groups[] = {
        {"partitions", check_partitions}, {"cumulants", check_cumulants}, {"oracle", check_oracle},
        {"series", check_series},         {"laws", check_laws},           {"limits", check_limits},
    };
    std::vector<CheckResult> out;
    bool matched = false;
    for (const auto& [name, run] : groups) {
        if (selector != "all" && selector != name) continue;
        matched = true;
        auto part = run();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    if (!matched) throw std::invalid_argument("unknown verify group '" + std::string(selector) + "'");
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string verify_report_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json j;
    j["passed"] = all_passed(results);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json c;
        c["group"] = r.group;
        c["name"] = r.name;
        c["passed"] = r.passed;
        c["measured"] = r.measured ? nlohmann::ordered_json(*r.measured) : nlohmann::ordered_json();
        c["tolerance"] = r.tolerance ? nlohmann::ordered_json(*r.tolerance) : nlohmann::ordered_json();
        c["detail"] = r.detail;
        j["checks"].push_back(std::move(c));
    }
    return j.dump(2);
}

std::string verify_report_text(const std::vector<CheckResult>& results) {
    std::ostringstream s;
    for (const auto& r : results) {
        s << (r.passed ? "PASS " : "FAIL ") << r.group << '/' << r.name;
        if (r.measured) s << "  measured=" << *r.measured << " tol=" << *r.tolerance;
        if (!r.detail.empty() && !r.passed) s << "  (" << r.detail << ')';
        s << '\n';
    }
    return s.str();
}

}  // namespace cfree
