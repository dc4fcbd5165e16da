#include "cfree/product_state.hpp"

#include "cfree/errors.hpp"

#include <algorithm>
#include <string>

namespace cfree {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto& l = letters_[i];
        if (l.index != 1 && l.index != 2) throw ShapeError("word letter index must be 1 or 2");
        if (l.exponent < 1) throw ShapeError("word exponents must be positive");
        if (i > 0 && letters_[i - 1].index == l.index) throw ShapeError("adjacent word letters share an index");
    }
}

Word Word::from_indices(const std::vector<int>& indices) {
    std::vector<Letter> letters;
    for (int i : indices) {
        if (!letters.empty() && letters.back().index == i)
            ++letters.back().exponent;
        else
            letters.push_back({i, 1});
    }
    return Word(std::move(letters));
}

int Word::degree() const {
    int d = 0;
    for (const auto& l : letters_) d += l.exponent;
    return d;
}

Factor Factor::monomial(int index, int exponent) {
    Factor f{index, std::vector<Rational>(static_cast<std::size_t>(exponent) + 1, 0)};
    f.coeffs.back() = 1;
    return f;
}

FactorWord to_factors(const Word& w) {
    FactorWord out;
    for (const auto& l : w.letters()) out.push_back(Factor::monomial(l.index, l.exponent));
    return out;
}

FactorWord adjoint(const FactorWord& w) { return FactorWord(w.rbegin(), w.rend()); }

StateFamily::StateFamily(MeasurePair p1, MeasurePair p2) : pair1(std::move(p1)), pair2(std::move(p2)) {
    if (pair1.order() != pair2.order()) throw OrderMismatch("state family pairs have different orders");
}

namespace {

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Rational integrate(const MomentSequence& m, const Factor& f) {
    if (f.degree() > m.order()) {
        throw DegreeOverflow("factor of degree " + std::to_string(f.degree()) + " exceeds moment order " +
                             std::to_string(m.order()));
    }
    Rational total = 0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k)
        if (f.coeffs[k] != 0) total += f.coeffs[k] * m[static_cast<int>(k)];
    return total;
}

// Pulls out constant factors and multiplies neighbours from the same algebra.
// The returned word alternates and has no constant factors.
std::pair<Rational, FactorWord> normalize(const FactorWord& w) {
    Rational scalar = 1;
    FactorWord out;
    for (Factor f : w) {
        while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
        if (f.coeffs.empty()) return {Rational(0), {}};
        if (f.coeffs.size() == 1) {
            scalar *= f.coeffs[0];
            continue;
        }
        if (!out.empty() && out.back().index == f.index)
            out.back().coeffs = multiply(out.back().coeffs, f.coeffs);
        else
            out.push_back(std::move(f));
    }
    return {scalar, std::move(out)};
}

}  // namespace

ProductStateEvaluator::ProductStateEvaluator(StateFamily family) : family_(std::move(family)) {}

Rational ProductStateEvaluator::phi_single(const Factor& f) const {
    return integrate(family_.pair(f.index).mu(), f);
}

Rational ProductStateEvaluator::psi_single(const Factor& f) const {
    return integrate(family_.pair(f.index).nu(), f);
}

Rational ProductStateEvaluator::phi(const FactorWord& w) {
    int total_degree = 0;
    for (const auto& f : w) total_degree += std::max(f.degree(), 0);
    if (total_degree > family_.order()) {
        throw DegreeOverflow("word of total degree " + std::to_string(total_degree) + " exceeds moment order " +
                             std::to_string(family_.order()));
    }
    auto [scalar, word] = normalize(w);
    if (scalar == 0) return 0;
    if (word.empty()) return scalar;
    return scalar * evaluate(word);
}

Rational ProductStateEvaluator::evaluate(const FactorWord& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    const std::size_t n = w.size();
    std::vector<Rational> shift(n);
    FactorWord centered = w;
    Rational base = 1;
    for (std::size_t j = 0; j < n; ++j) {
        shift[j] = psi_single(w[j]);
        centered[j].coeffs[0] -= shift[j];
        base *= phi_single(w[j]) - shift[j];
    }

    // Each factor is its centered part plus its psi-value. With every factor
    // centered the word is alternating and phi factorizes (the base term);
    // every other choice has fewer factors after merging.
    Rational total = base;
    const std::size_t full = (std::size_t{1} << n) - 1;
    FactorWord sub;
    for (std::size_t mask = 0; mask < full; ++mask) {
        Rational coeff = 1;
        sub.clear();
        for (std::size_t j = 0; j < n && coeff != 0; ++j) {
            if (mask >> j & 1)
                sub.push_back(centered[j]);
            else
                coeff *= shift[j];
        }
        if (coeff == 0) continue;
        total += coeff * phi(sub);
    }
    memo_.emplace(w, total);
    return total;
}

Rational eval_phi(const Word& w, const StateFamily& family) {
    ProductStateEvaluator ev(family);
    return ev.phi(w);
}

Rational eval_psi(const Word& w, const StateFamily& family) {
    StateFamily free_family(MeasurePair::diagonal(family.pair1.nu()), MeasurePair::diagonal(family.pair2.nu()));
    ProductStateEvaluator ev(std::move(free_family));
    return ev.phi(w);
}

Rational sum_moments_via_words(const MeasurePair& p1, const MeasurePair& p2, int n) {
    if (n < 1 || n > kMaxWordSumDegree) {
        throw BoundError("sum_moments_via_words: n must lie in [1, " + std::to_string(kMaxWordSumDegree) +
                         "], got " + std::to_string(n));
    }
    if (n > p1.order()) throw BoundError("sum_moments_via_words: n exceeds the moment order");

    ProductStateEvaluator ev(StateFamily(p1, p2));
    Rational total = 0;
    std::vector<int> indices(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        for (int j = 0; j < n; ++j) indices[j] = (mask >> j & 1) ? 2 : 1;
        total += ev.phi(Word::from_indices(indices));
    }
    return total;
}

}  // namespace cfree
