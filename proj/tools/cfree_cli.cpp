#include "cfree/convolution.hpp"
#include "cfree/cumulants.hpp"
#include "cfree/io.hpp"
#include "cfree/limit_laws.hpp"
#include "cfree/partitions.hpp"
#include "cfree/series.hpp"
#include "cfree/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace cfree;
using nlohmann::ordered_json;

namespace {

struct Options {
    std::string format;  // empty: the subcommand's default
    std::string out;

    // nc
    std::string nc_action = "count";
    int n = 4;
    bool pairings = false;

    // cumulants / convolve / transforms
    std::string kind = "free";
    std::string direction = "to";
    std::string mu, nu, mu2, nu2, cumulants;

    // limit laws
    std::string family = "gaussian";
    std::string alpha = "1", beta = "1";
    int copies = 64;
    int order = 6;
    std::string grid = "-2.5:2.5:401";
    std::string method = "closed";
    double eps = 1e-4;
    int depth = kDefaultFractionDepth;

    std::string group = "all";
};

ordered_json rational_array(const std::vector<Rational>& v, std::size_t from = 0) {
    auto j = ordered_json::array();
    for (std::size_t i = from; i < v.size(); ++i) j.push_back(to_string(v[i]));
    return j;
}

ordered_json moments_json(const MomentSequence& m) { return ordered_json::parse(to_json(m)); }

ordered_json cumulants_json(const std::vector<Rational>& with_zero) {
    return ordered_json::parse(to_json(std::vector<Rational>(with_zero.begin() + 1, with_zero.end())));
}

MomentSequence moments_arg(const std::string& text, const char* flag) {
    if (text.empty()) throw CLI::ValidationError(flag, "required");
    return MomentSequence(parse_rational_list(text));
}

// Text that names an existing file is read as JSON; anything else is a comma list.
MomentSequence moments_input(const std::string& text, const char* flag) {
    if (!text.empty() && std::filesystem::is_regular_file(text)) {
        std::ifstream in(text);
        std::stringstream buf;
        buf << in.rdbuf();
        return moments_from_json(buf.str());
    }
    return moments_arg(text, flag);
}

std::vector<Rational> cumulants_input(const std::string& text) {
    if (text.empty()) throw CLI::ValidationError("--cumulants", "required");
    if (std::filesystem::is_regular_file(text)) {
        std::ifstream in(text);
        std::stringstream buf;
        buf << in.rdbuf();
        return cumulants_from_json(buf.str());
    }
    return parse_rational_list(text);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

int run_nc(const Options& o) {
    if (o.nc_action == "count") {
        BigInt count = o.pairings ? BigInt(enumerate_nc2(2 * o.n).size()) : BigInt(enumerate_nc(o.n).size());
        ordered_json j{{"n", o.n}, {"pairings", o.pairings}, {"count", to_string(count)}};
        emit(o.format == "csv" ? "n,count\n" + std::to_string(o.n) + "," + to_string(count) + "\n" : dump(j), o.out);
        return 0;
    }
    if (o.nc_action == "enum") {
        auto parts = o.pairings ? enumerate_nc2(2 * o.n) : enumerate_nc(o.n);
        std::ostringstream s;
        if (o.format == "csv") {
            s << "index,blocks,outer,inner\n";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                auto c = classify(parts[i]).counts;
                s << i << ",\"";
                for (const auto& b : parts[i].blocks()) {
                    s << '{';
                    for (std::size_t k = 0; k < b.size(); ++k) s << (k ? " " : "") << b[k];
                    s << '}';
                }
                s << "\"," << c.outer_count << ',' << c.inner_count << '\n';
            }
            emit(s.str(), o.out);
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& p : parts) {
                auto c = classify(p).counts;
                arr.push_back({{"blocks", p.blocks()}, {"outer", c.outer_count}, {"inner", c.inner_count}});
            }
            emit(dump({{"n", o.n}, {"pairings", o.pairings}, {"partitions", arr}}), o.out);
        }
        return 0;
    }
    // stats: a(n,k) for pairings of 2n points, otherwise t(n,k) and s(n,k,l).
    BlockCounts counts(o.n);
    ordered_json j{{"n", o.n}};
    std::ostringstream csv;
    if (o.pairings) {
        csv << "k,a\n";
        ordered_json a = ordered_json::array();
        for (int k = 0; k <= o.n; ++k) {
            a.push_back(to_string(counts.a(o.n, k)));
            csv << k << ',' << to_string(counts.a(o.n, k)) << '\n';
        }
        j["a"] = a;
    } else {
        csv << "k,l,s\n";
        ordered_json t = ordered_json::array(), s = ordered_json::array();
        for (int k = 1; k <= o.n; ++k) t.push_back(to_string(counts.t(o.n, k)));
        for (int k = 0; k <= o.n; ++k) {
            for (int l = 0; l <= o.n; ++l) {
                if (counts.s(o.n, k, l) == 0) continue;
                s.push_back({{"outer", k}, {"inner", l}, {"count", to_string(counts.s(o.n, k, l))}});
                csv << k << ',' << l << ',' << to_string(counts.s(o.n, k, l)) << '\n';
            }
        }
        j["t"] = t;
        j["s"] = s;
    }
    emit(o.format == "csv" ? csv.str() : dump(j), o.out);
    return 0;
}

int run_cumulants(const Options& o) {
    if (o.direction == "to") {
        auto mu = moments_input(o.mu, "--mu");
        std::vector<Rational> c;
        if (o.kind == "free") c = free_cumulants_from_moments(mu).with_zero();
        else if (o.kind == "boolean") c = boolean_cumulants_from_moments(mu).with_zero();
        else c = cfree_cumulants_from_moments(MeasurePair(mu, moments_input(o.nu, "--nu"))).with_zero();
        emit(dump(cumulants_json(c)), o.out);
        return 0;
    }
    auto c = cumulants_input(o.cumulants);
    MomentSequence m = [&] {
        if (o.kind == "free") return moments_from_free_cumulants(FreeCumulants(c));
        if (o.kind == "boolean") return moments_from_boolean_cumulants(CFreeCumulants(c));
        return moments_from_cfree_cumulants(CFreeCumulants(c), moments_input(o.nu, "--nu"));
    }();
    emit(dump(moments_json(m)), o.out);
    return 0;
}

int run_convolve(const Options& o) {
    auto mu1 = moments_input(o.mu, "--mu"), mu2 = moments_input(o.mu2, "--mu2");
    if (o.kind == "free") {
        emit(dump(moments_json(free_convolve(mu1, mu2))), o.out);
    } else if (o.kind == "boolean") {
        emit(dump(moments_json(boolean_convolve(mu1, mu2))), o.out);
    } else {
        auto p = cfree_convolve(MeasurePair(mu1, moments_input(o.nu, "--nu")),
                                MeasurePair(mu2, moments_input(o.nu2, "--nu2")));
        emit(dump({{"mu", moments_json(p.mu())}, {"nu", moments_json(p.nu())}}), o.out);
    }
    return 0;
}

ordered_json scaled_json(const ScaledPair& s) {
    if (s.exact) return {{"exact", true}, {"mu", moments_json(s.exact->mu())}, {"nu", moments_json(s.exact->nu())}};
    auto reals = [](const std::vector<long double>& v) {
        auto j = ordered_json::array();
        for (long double x : v) j.push_back(format_real(static_cast<double>(x)));
        return j;
    };
    return {{"exact", false}, {"mu", reals(s.mu)}, {"nu", reals(s.nu)}};
}

ordered_json limit_json(const std::vector<Rational>& mu, const std::vector<Rational>& nu) {
    return {{"mu", {{"order", mu.size() - 1}, {"moments", rational_array(mu)}}},
            {"nu", {{"order", nu.size() - 1}, {"moments", rational_array(nu)}}}};
}

// --alpha and --beta are the standard deviations; rational squares keep the moments exact.
int run_clt(const Options& o) {
    const Rational a = parse_rational(o.alpha), b = parse_rational(o.beta);
    const Rational a2 = a * a, b2 = b * b;
    MeasurePair base(symmetric_two_point(a2, o.order), symmetric_two_point(b2, o.order));
    auto pre = scaled_power(base, ScalingSpec::central_limit(o.copies));
    std::vector<Rational> mu(o.order + 1), nu(o.order + 1);
    for (int n = 0; n <= o.order; ++n) {
        mu[n] = gaussian_limit_moment(a2, b2, n);
        nu[n] = semicircle_moment(b2, n);
    }
    emit(dump({{"copies", o.copies}, {"prelimit", scaled_json(pre)}, {"limit", limit_json(mu, nu)}}), o.out);
    return 0;
}

int run_poisson_limit(const Options& o) {
    const Rational a = parse_rational(o.alpha), b = parse_rational(o.beta);
    auto pre = scaled_power(poisson_prelimit_pair(a, b, o.copies, o.order), ScalingSpec::plain(o.copies));
    std::vector<Rational> mu(o.order + 1), nu(o.order + 1);
    for (int n = 0; n <= o.order; ++n) {
        mu[n] = n == 0 ? Rational(1) : poisson_limit_moment(a, b, n);
        nu[n] = n == 0 ? Rational(1) : free_poisson_moment(b, n);
    }
    emit(dump({{"copies", o.copies}, {"prelimit", scaled_json(pre)}, {"limit", limit_json(mu, nu)}}), o.out);
    return 0;
}

std::filesystem::path sidecar_path(const std::string& out) {
    std::filesystem::path p(out);
    return p.replace_extension(".atoms.json");
}

int run_density(const Options& o) {
    const double alpha = std::stod(o.alpha), beta = std::stod(o.beta);
    const auto grid = GridSpec::parse(o.grid);
    const bool gaussian = o.family == "gaussian";
    auto measure = gaussian ? gaussian_limit_measure(alpha, beta) : poisson_limit_measure(alpha, beta);

    DensityGrid values;
    if (o.method == "closed") {
        values = closed_form_grid(measure, grid);
    } else {
        auto levels = gaussian ? gaussian_fraction_levels(alpha, beta, o.depth)
                               : poisson_fraction_levels(alpha, beta, o.depth);
        values = inversion_grid(CauchyEvaluator(FractionExpansion{std::move(levels)}), grid, o.eps);
    }

    if (o.format == "json") {
        std::string s = "{\"grid\":[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ',';
            s += "[" + format_real(values[i].first) + "," + format_real(values[i].second) + "]";
        }
        s += "],\"measure\":" + atoms_json(measure) + "}\n";
        emit(s, o.out);
        return 0;
    }
    std::ostringstream csv;
    write_density_csv(csv, values);
    emit(csv.str(), o.out);
    const std::string atoms = atoms_json(measure) + "\n";
    if (o.out.empty()) std::cerr << atoms;
    else emit(atoms, sidecar_path(o.out).string());
    return 0;
}

int run_transforms(const Options& o) {
    auto mu = moments_input(o.mu, "--mu");
    auto nu = o.nu.empty() ? mu : moments_input(o.nu, "--nu");
    MeasurePair pair(mu, nu);
    auto t = abcd_from_pair(pair);
    auto [r1, r2] = check_transform_identities(t);
    ordered_json j{{"order", pair.order()},
                   {"A", rational_array(t.A.coefficients())},
                   {"B", rational_array(t.B.coefficients())},
                   {"C", rational_array(t.C.coefficients())},
                   {"D", rational_array(t.D.coefficients())},
                   {"identities_hold", r1.is_zero() && r2.is_zero() && check_inversion_identities(pair).is_zero()}};
    emit(dump(j), o.out);
    return 0;
}

int run_verify_cmd(const Options& o) {
    auto results = run_verify(o.group);
    emit(o.format == "json" ? verify_report_json(results) + "\n" : verify_report_text(results), o.out);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-free probability workbench"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub, const std::string& def, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "Output format (default " + def + ")")->check(CLI::IsMember(allowed));
        sub->add_option("--out", o.out, "Write to this path instead of stdout");
    };

    auto* nc = app.add_subcommand("nc", "Non-crossing partitions: count, enum or stats");
    nc->add_option("action", o.nc_action)->check(CLI::IsMember({"count", "enum", "stats"}))->capture_default_str();
    nc->add_option("-n,--n", o.n, "Ground set size, or number of pairs with --pairings")
        ->check(CLI::Range(1, kMaxNcSize))
        ->capture_default_str();
    nc->add_flag("--pairings", o.pairings, "Pair partitions of 2n points");
    add_format(nc, "json", {"json", "csv"});

    auto* cum = app.add_subcommand("cumulants", "Convert between moments and cumulants");
    cum->add_option("direction", o.direction, "'to' cumulants or 'from' cumulants")
        ->check(CLI::IsMember({"to", "from"}))
        ->capture_default_str();
    cum->add_option("--kind", o.kind)->check(CLI::IsMember({"free", "cfree", "boolean"}))->capture_default_str();
    cum->add_option("--mu", o.mu, "Moments m_0..m_N as p/q list or JSON file");
    cum->add_option("--nu", o.nu, "Second-component moments (cfree only)");
    cum->add_option("--cumulants", o.cumulants, "Cumulants c_1..c_N as p/q list or JSON file");
    add_format(cum, "json", {"json"});

    auto* conv = app.add_subcommand("convolve", "Convolve two moment sequences or pairs");
    conv->add_option("--kind", o.kind)->check(CLI::IsMember({"free", "cfree", "boolean"}))->capture_default_str();
    conv->add_option("--mu", o.mu, "First measure (mu_1)");
    conv->add_option("--nu", o.nu, "nu_1 (cfree only)");
    conv->add_option("--mu2", o.mu2, "Second measure (mu_2)");
    conv->add_option("--nu2", o.nu2, "nu_2 (cfree only)");
    add_format(conv, "json", {"json"});

    auto* clt = app.add_subcommand("clt", "Central-limit prelimit and limit moments");
    auto* pois = app.add_subcommand("poisson-limit", "Poisson prelimit and limit moments");
    for (auto* sub : {clt, pois}) {
        sub->add_option("--alpha", o.alpha, "Rational parameter")->capture_default_str();
        sub->add_option("--beta", o.beta, "Rational parameter")->capture_default_str();
        sub->add_option("--copies,-N", o.copies)->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--order", o.order)->check(CLI::Range(1, 24))->capture_default_str();
        add_format(sub, "json", {"json"});
    }

    auto* dens = app.add_subcommand("density", "Density grid and atom sidecar of a limit law");
    dens->add_option("--family", o.family)->check(CLI::IsMember({"gaussian", "poisson"}))->capture_default_str();
    dens->add_option("--alpha", o.alpha)->capture_default_str();
    dens->add_option("--beta", o.beta)->capture_default_str();
    dens->add_option("--grid", o.grid, "lo:hi:points")->capture_default_str();
    dens->add_option("--method", o.method)->check(CLI::IsMember({"closed", "inversion"}))->capture_default_str();
    dens->add_option("--eps", o.eps, "Inversion offset")->capture_default_str();
    dens->add_option("--depth", o.depth, "Continued fraction depth")->check(CLI::Range(1, 100000))->capture_default_str();
    add_format(dens, "csv", {"csv", "json"});

    auto* tr = app.add_subcommand("transforms", "A, B, C, D series of a pair and the identity check");
    tr->add_option("--mu", o.mu, "Moments of mu");
    tr->add_option("--nu", o.nu, "Moments of nu (defaults to mu)");
    add_format(tr, "json", {"json"});

    auto* ver = app.add_subcommand("verify", "Run the self-check suite");
    ver->add_option("group", o.group)
        ->check(CLI::IsMember({"all", "partitions", "cumulants", "oracle", "series", "laws", "limits"}))
        ->capture_default_str();
    add_format(ver, "text", {"text", "json"});

    CLI11_PARSE(app, argc, argv);
    if (o.format.empty()) o.format = dens->parsed() ? "csv" : ver->parsed() ? "text" : "json";

    try {
        if (nc->parsed()) return run_nc(o);
        if (cum->parsed()) return run_cumulants(o);
        if (conv->parsed()) return run_convolve(o);
        if (clt->parsed()) return run_clt(o);
        if (pois->parsed()) return run_poisson_limit(o);
        if (dens->parsed()) return run_density(o);
        if (tr->parsed()) return run_transforms(o);
        if (ver->parsed()) return run_verify_cmd(o);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
