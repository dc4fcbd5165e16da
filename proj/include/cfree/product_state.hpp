#pragma once

// Direct evaluation of the c-free product state on words in two variables.
// Deliberately shares nothing with the cumulant recursions: it is the
// reference the convolution code is checked against.

#include "cfree/cumulants.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cfree {

struct Letter {
    int index = 1;     // 1 or 2
    int exponent = 1;  // >= 1
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// X_{i_1}^{k_1} ... X_{i_n}^{k_n} with adjacent indices distinct. Empty = unit.
class Word {
public:
    Word() = default;
    /// Throws ShapeError on a bad index, a non-positive exponent or equal adjacent indices.
    explicit Word(std::vector<Letter> letters);

    /// Builds a word from a sequence of variable indices, merging repeats: {1,1,2} -> X_1^2 X_2.
    static Word from_indices(const std::vector<int>& indices);

    const std::vector<Letter>& letters() const { return letters_; }
    int degree() const;

private:
    std::vector<Letter> letters_;
};

/// A polynomial in one variable X_index, coefficients in increasing degree.
struct Factor {
    int index = 1;
    std::vector<Rational> coeffs;

    static Factor monomial(int index, int exponent);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor& a, const Factor& b) {
        if (a.index != b.index) return a.index <=> b.index;
        if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() <=> b.coeffs.size();
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            int c = cmp(a.coeffs[i], b.coeffs[i]);
            if (c != 0) return c <=> 0;
        }
        return std::strong_ordering::equal;
    }
};

/// Product of polynomial factors; adjacent factors may share an index.
using FactorWord = std::vector<Factor>;

FactorWord to_factors(const Word& w);
/// The adjoint for real coefficients: factor order reversed.
FactorWord adjoint(const FactorWord& w);

/// (mu_1, nu_1) and (mu_2, nu_2); the common order bounds evaluable degree.
struct StateFamily {
    MeasurePair pair1;
    MeasurePair pair2;

    /// Throws OrderMismatch when the two pairs have different orders.
    StateFamily(MeasurePair p1, MeasurePair p2);
    int order() const { return pair1.order(); }
    const MeasurePair& pair(int index) const { return index == 1 ? pair1 : pair2; }
};

/// Evaluates phi = (mu_1,nu_1)*(mu_2,nu_2) by repeated centering with respect to
/// psi. Memoizes on normalized factor words; an instance is not thread-safe.
class ProductStateEvaluator {
public:
    explicit ProductStateEvaluator(StateFamily family);

    /// Throws DegreeOverflow if any merged factor exceeds the family order.
    Rational phi(const FactorWord& w);
    Rational phi(const Word& w) { return phi(to_factors(w)); }

    /// The restriction phi_i = mu_i and psi_i = nu_i to a single factor.
    Rational phi_single(const Factor& f) const;
    Rational psi_single(const Factor& f) const;

    std::size_t memo_size() const { return memo_.size(); }

private:
    Rational evaluate(const FactorWord& w);

    StateFamily family_;
    std::map<FactorWord, Rational> memo_;
};

Rational eval_phi(const Word& w, const StateFamily& family);
/// The free product of nu_1, nu_2: eval_phi with each mu_i replaced by nu_i.
Rational eval_psi(const Word& w, const StateFamily& family);

/// Largest n accepted by sum_moments_via_words.
inline constexpr int kMaxWordSumDegree = 10;

/// phi((X_1 + X_2)^n) as a sum over all 2^n index words.
/// Throws BoundError for n outside [1, kMaxWordSumDegree] or above the order.
Rational sum_moments_via_words(const MeasurePair& p1, const MeasurePair& p2, int n);

}  // namespace cfree
