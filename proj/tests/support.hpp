#pragma once

// Shared helpers for the test binaries: a seeded random rational source and
// a small multivariate polynomial ring used to run the generic recursions
// symbolically.

#include "cfree/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using cfree::Rational;

class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

    // Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
    Rational next(int num_bound = 5, int den_bound = 4) {
        std::uniform_int_distribution<int> num(-num_bound, num_bound);
        std::uniform_int_distribution<int> den(1, den_bound);
        Rational q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    std::vector<Rational> many(int count, int num_bound = 5, int den_bound = 4) {
        std::vector<Rational> out;
        for (int i = 0; i < count; ++i) out.push_back(next(num_bound, den_bound));
        return out;
    }

    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

// Polynomial with rational coefficients; monomials are exponent vectors.
class Poly {
public:
    using Monomial = std::vector<int>;

    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}
    Poly(const Rational& c) {
        if (c != 0) terms_[{}] = c;
    }
    static Poly var(int index) {
        Poly p;
        Monomial m(index + 1, 0);
        m[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        out += b;
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b * Poly(-1); }
    Poly& operator+=(const Poly& b) {
        for (const auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& b) { return *this += b * Poly(-1); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(std::max(ma.size(), mb.size()), 0);
                for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
                for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    std::size_t term_count() const { return terms_.size(); }

private:
    void add_term(Monomial m, const Rational& c) {
        while (!m.empty() && m.back() == 0) m.pop_back();
        Rational& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    std::map<Monomial, Rational> terms_;
};

}  // namespace testing_support
