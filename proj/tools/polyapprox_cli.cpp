// Command-line front end: estimate structure totals from small exact counts,
// dump the counts themselves, or run the p(1) engine on a coefficient file.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyapprox/approximator.hpp"
#include "polyapprox/counting.hpp"
#include "polyapprox/errors.hpp"
#include "polyapprox/graph.hpp"
#include "polyapprox/prefix.hpp"

namespace pa = polyapprox;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string kind;
    std::string file;
    double eps = 1e-2;
    double delta = 0.5;
    std::size_t K = 0;
    bool exact_check = false;
    bool average = false;
    bool json = false;
    std::string precision = "default";
};

pa::StructureKind kind_from_string(const std::string& s) {
    if (s == "matchings") {
        return pa::StructureKind::Matchings;
    }
    if (s == "independent") {
        return pa::StructureKind::IndependentSets;
    }
    if (s == "unbranched") {
        return pa::StructureKind::Unbranched;
    }
    throw pa::Error("unknown kind `" + s + "`");
}

pa::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw pa::Error("cannot open " + path);
    }
    return pa::parse_graph(in);
}

pa::PolynomialPrefix load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw pa::Error("cannot open " + path);
    }
    return pa::parse_coefficients(in);
}

double log_of_bigint(const pa::BigInt& n) {
    boost::multiprecision::cpp_bin_float_50 f(n);
    return log(f).convert_to<double>();
}

// 15-significant-digit decimal, synthesized from the log-space value so that
// totals beyond the native float range still print.
std::string decimal_from_log(const pa::ComplexD& log_value) {
    const double re = log_value.real();
    const double im = log_value.imag();
    const double pi = 3.14159265358979323846;
    double phase = std::remainder(im, 2.0 * pi);
    const char* sign = "";
    if (std::abs(std::abs(phase) - pi) < 1e-9) {
        sign = "-";
        phase = 0.0;
    }
    if (std::abs(phase) > 1e-9) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "exp(%.15g%+.15gi)", re, im);
        return buf;
    }
    const double log10v = re / std::log(10.0);
    double e = std::floor(log10v);
    double mant = std::pow(10.0, log10v - e);
    if (mant >= 9.999999999999995) {
        mant /= 10.0;
        e += 1.0;
    }
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%s%.14fe%+03ld", sign, mant, static_cast<long>(e));
    return buf;
}

ordered_json plan_json(const pa::RootRegion& region, std::size_t n, std::size_t m,
                       double tail_bound) {
    const pa::PlanParams pp = region.kind == pa::RegionKind::RealRooted
                                  ? pa::real_rooted_params(region.delta)
                                  : pa::stable_params(region.delta);
    const std::size_t factor = region.kind == pa::RegionKind::RealRooted ? 4 : 2;
    const std::size_t N = std::max<std::size_t>(factor * n, 1);
    ordered_json j;
    j["delta"] = region.delta;
    j["rho"] = pp.rho;
    j["xi"] = pp.xi;
    j["beta"] = pp.beta;
    j["m"] = m;
    j["degree_bound"] = N;
    j["tail_bound"] = tail_bound;
    return j;
}

void emit(const ordered_json& report, const Options& opt) {
    if (opt.json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            std::cout << key << ":\n";
            for (const auto& [k2, v2] : value.items()) {
                std::cout << "  " << k2 << ": "
                          << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << "\n";
            }
        } else {
            std::cout << key << ": "
                      << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

template <class C>
int run_estimate(const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const pa::StructureKind kind = kind_from_string(opt.kind);
    const pa::Graph g = load_graph(opt.file);
    const pa::RootRegion region = pa::delta_for(kind, g);
    const std::size_t n = pa::polynomial_degree(g, kind);
    const std::size_t m = pa::required_k(g, kind, opt.eps);
    const std::size_t K = std::min(m, n);
    const pa::CountVector counts = pa::structure_counts(g, kind, K);
    const pa::PolynomialPrefix prefix = pa::counting_prefix(counts, n);
    const auto est = pa::approximate_p1<C>(prefix, region, opt.eps);
    const pa::ComplexD log_value = pa::to_complexd(est.log_value);

    ordered_json report;
    report["command"] = "estimate";
    report["input"] = {{"file", opt.file}, {"kind", opt.kind}, {"eps", opt.eps}};
    report["plan"] = plan_json(region, n, est.order_used, pa::to_double(est.tail_bound));
    report["counts_used"] = K;
    report["log_estimate"] = {{"re", log_value.real()}, {"im", log_value.imag()}};
    report["estimate"] = decimal_from_log(log_value);
    if (opt.exact_check) {
        const pa::BigInt exact = pa::exact_total(g, kind);
        const double observed = std::abs(log_value.real() - log_of_bigint(exact));
        report["oracle"] = {{"exact", exact.str()}, {"observed_error", observed}};
    }
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(report, opt);
    return 0;
}

int run_counts(const Options& opt) {
    const pa::StructureKind kind = kind_from_string(opt.kind);
    const pa::Graph g = load_graph(opt.file);
    const pa::CountVector counts = pa::structure_counts(g, kind, opt.K);
    if (opt.json) {
        ordered_json report;
        report["command"] = "counts";
        report["input"] = {{"file", opt.file}, {"kind", opt.kind}, {"K", opt.K}};
        ordered_json arr = ordered_json::array();
        for (const auto& c : counts.counts) {
            arr.push_back(c.str());
        }
        report["counts"] = arr;
        std::cout << report.dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < counts.counts.size(); ++k) {
            std::cout << (k ? " " : "") << counts.counts[k].str();
        }
        std::cout << "\n";
    }
    return 0;
}

template <class C>
int run_poly(const Options& opt, const std::string& mode) {
    const auto t0 = std::chrono::steady_clock::now();
    const pa::PolynomialPrefix prefix = load_coefficients(opt.file);
    const pa::RootRegion region = mode == "real-rooted" ? pa::RootRegion::real_rooted(opt.delta)
                                                        : pa::RootRegion::stable(opt.delta);
    const auto est = pa::approximate_p1<C>(prefix, region, opt.eps);
    const pa::ComplexD log_value = pa::to_complexd(est.log_value);

    ordered_json report;
    report["command"] = "poly";
    report["input"] = {{"file", opt.file}, {"mode", mode}, {"delta", opt.delta},
                       {"eps", opt.eps}};
    report["plan"] =
        plan_json(region, prefix.degree, est.order_used, pa::to_double(est.tail_bound));
    report["counts_used"] = prefix.known_order();
    report["log_estimate"] = {{"re", log_value.real()}, {"im", log_value.imag()}};
    report["estimate"] = decimal_from_log(log_value);
    if (opt.average) {
        const pa::ComplexD ratio =
            pa::to_complexd(pa::approximate_derivative_ratio<C>(prefix, region, opt.eps));
        report["average"] = {{"re", ratio.real()}, {"im", ratio.imag()}};
    }
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(report, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate structure totals and p(1) from low-order exact coefficients"};
    app.require_subcommand(1);
    Options opt;
    std::string mode;

    auto* estimate = app.add_subcommand("estimate", "Estimate a structure total of a graph");
    estimate->add_option("kind", opt.kind, "matchings|independent|unbranched")->required();
    estimate->add_option("graph", opt.file, "graph file")->required();
    estimate->add_option("--eps", opt.eps, "relative error target in (0,1)");
    estimate->add_flag("--exact-check", opt.exact_check, "also run the brute-force oracle");
    estimate->add_flag("--json", opt.json, "emit a JSON report");
    estimate->add_option("--precision", opt.precision, "default|high");

    auto* counts = app.add_subcommand("counts", "Exact structure counts up to size K");
    counts->add_option("kind", opt.kind, "matchings|independent|unbranched")->required();
    counts->add_option("graph", opt.file, "graph file")->required();
    counts->add_option("K", opt.K, "maximum structure size")->required();
    counts->add_flag("--json", opt.json, "emit a JSON report");

    auto* poly = app.add_subcommand("poly", "Approximate p(1) from a coefficient file");
    poly->add_option("mode", mode, "real-rooted|stable")->required();
    poly->add_option("coeffs", opt.file, "coefficient file")->required();
    poly->add_option("--delta", opt.delta, "root-region parameter in (0,1)")->required();
    poly->add_option("--eps", opt.eps, "relative error target in (0,1)");
    poly->add_flag("--average", opt.average, "also report p'(1)/p(1)");
    poly->add_flag("--json", opt.json, "emit a JSON report");
    poly->add_option("--precision", opt.precision, "default|high");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool high = opt.precision == "high";
        if (estimate->parsed()) {
            return high ? run_estimate<pa::ComplexQ>(opt) : run_estimate<pa::ComplexD>(opt);
        }
        if (counts->parsed()) {
            return run_counts(opt);
        }
        if (mode != "real-rooted" && mode != "stable") {
            throw pa::Error("unknown mode `" + mode + "`");
        }
        return high ? run_poly<pa::ComplexQ>(opt, mode) : run_poly<pa::ComplexD>(opt, mode);
    } catch (const pa::NotClawFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pa::InsufficientCoefficients& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
