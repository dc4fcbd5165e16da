#include "cfree/io.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cfree {

namespace {

using nlohmann::ordered_json;

std::vector<Rational> rational_array(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.contains("order"))
        throw std::invalid_argument(std::string("expected an object with \"order\" and \"") + key + "\"");
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
    std::vector<Rational> out;
    for (const auto& v : arr) {
        if (v.is_string()) out.push_back(parse_rational(v.get<std::string>()));
        else if (v.is_number_integer()) out.emplace_back(v.get<long>());
        else throw std::invalid_argument("entries must be \"p/q\" strings or integers");
    }
    return out;
}

ordered_json parse_object(std::string_view text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(e.what());
    }
}

double parse_double(std::string_view text) {
    double v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size())
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return v;
}

}  // namespace

std::string format_real(double x) {
    if (x == 0) return "0";  // also folds -0
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc()) throw std::runtime_error("to_chars failed");
    return std::string(buf.data(), end);
}

std::string to_json(const MomentSequence& m) {
    ordered_json j;
    j["order"] = m.order();
    j["moments"] = ordered_json::array();
    for (const auto& q : m.values()) j["moments"].push_back(to_string(q));
    return j.dump();
}

std::string to_json(const std::vector<Rational>& cumulants_one_based) {
    ordered_json j;
    j["order"] = cumulants_one_based.size();
    j["cumulants"] = ordered_json::array();
    for (const auto& q : cumulants_one_based) j["cumulants"].push_back(to_string(q));
    return j.dump();
}

MomentSequence moments_from_json(std::string_view text) {
    auto j = parse_object(text);
    auto values = rational_array(j, "moments");
    if (j.at("order").get<long>() + 1 != static_cast<long>(values.size()))
        throw std::invalid_argument("\"moments\" must hold order + 1 entries");
    return MomentSequence(std::move(values));
}

std::vector<Rational> cumulants_from_json(std::string_view text) {
    auto j = parse_object(text);
    auto values = rational_array(j, "cumulants");
    if (j.at("order").get<long>() != static_cast<long>(values.size()))
        throw std::invalid_argument("\"cumulants\" must hold order entries");
    return values;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_rational(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

GridSpec GridSpec::parse(std::string_view text) {
    auto c1 = text.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw std::invalid_argument("grid must be lo:hi:points");
    GridSpec g;
    g.lo = parse_double(text.substr(0, c1));
    g.hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    auto count = text.substr(c2 + 1);
    auto [end, ec] = std::from_chars(count.data(), count.data() + count.size(), g.points);
    if (ec != std::errc() || end != count.data() + count.size())
        throw std::invalid_argument("grid point count must be an integer");
    if (!(g.lo < g.hi) || !std::isfinite(g.lo) || !std::isfinite(g.hi))
        throw std::invalid_argument("grid needs finite lo < hi");
    if (g.points < 2 || g.points > kMaxGridPoints)
        throw std::invalid_argument("grid needs between 2 and 1000000 points");
    return g;
}

std::vector<double> GridSpec::nodes() const {
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) out[i] = lo + i * step;
    out.back() = hi;
    return out;
}

DensityGrid closed_form_grid(const ClosedFormMeasure& m, const GridSpec& grid) {
    DensityGrid out;
    out.reserve(static_cast<std::size_t>(grid.points));
    for (double t : grid.nodes()) out.emplace_back(t, m.density(t));
    return out;
}

DensityGrid inversion_grid(const CauchyEvaluator& g, const GridSpec& grid, double eps) {
    DensityGrid out;
    out.reserve(static_cast<std::size_t>(grid.points));
    for (double t : grid.nodes()) out.emplace_back(t, stieltjes_density(g, t, eps));
    return out;
}

void write_density_csv(std::ostream& out, const DensityGrid& grid) {
    out << "t,density\n";
    for (const auto& [t, d] : grid) out << format_real(t) << ',' << format_real(d) << '\n';
}

std::string atoms_json(const ClosedFormMeasure& m) {
    // Numbers go in as preformatted text so the bytes do not depend on the json dumper.
    std::string s = "{\"family\":\"" + m.family + "\",\"alpha\":" + format_real(m.alpha) +
                    ",\"beta\":" + format_real(m.beta) + ",\"atoms\":[";
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
        if (i) s += ',';
        s += "{\"location\":" + format_real(m.atoms[i].location) + ",\"weight\":" + format_real(m.atoms[i].weight) + "}";
    }
    return s + "]}";
}

}  // namespace cfree
