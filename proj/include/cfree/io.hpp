#pragma once

#include "cfree/cumulants.hpp"
#include "cfree/limit_laws.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfree {

/// Shortest decimal that reads back to the same double.
std::string format_real(double x);

// Text maps with rationals as "p/q" strings:
//   {"order":N,"moments":["1","1/2",...]}      m_0 .. m_N
//   {"order":N,"cumulants":["r_1",...,"r_N"]}  indexed from 1
std::string to_json(const MomentSequence& m);
std::string to_json(const std::vector<Rational>& cumulants_one_based);
template <class Tag>
std::string to_json(const CumulantSequence<Tag>& c) {
    return to_json(std::vector<Rational>(c.with_zero().begin() + 1, c.with_zero().end()));
}

/// Throws std::invalid_argument on malformed input or a length that disagrees with "order".
MomentSequence moments_from_json(std::string_view text);
std::vector<Rational> cumulants_from_json(std::string_view text);

/// Comma-separated rationals, e.g. "1,0,1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

inline constexpr int kMaxGridPoints = 1'000'000;

struct GridSpec {
    double lo = 0;
    double hi = 0;
    int points = 0;

    /// Parses "lo:hi:points". Throws std::invalid_argument unless lo < hi and
    /// 2 <= points <= kMaxGridPoints.
    static GridSpec parse(std::string_view text);
    /// Evenly spaced, endpoints included.
    std::vector<double> nodes() const;
};

using DensityGrid = std::vector<std::pair<double, double>>;

DensityGrid closed_form_grid(const ClosedFormMeasure& m, const GridSpec& grid);
/// -(1/pi) Im G(t + i eps) at each node.
DensityGrid inversion_grid(const CauchyEvaluator& g, const GridSpec& grid, double eps);

/// Header "t,density", LF endings.
void write_density_csv(std::ostream& out, const DensityGrid& grid);
/// {"family":...,"alpha":...,"beta":...,"atoms":[{"location":x,"weight":w},...]}
std::string atoms_json(const ClosedFormMeasure& m);

}  // namespace cfree
