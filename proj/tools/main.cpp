#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sendov/asymptotic.hpp"
#include "sendov/certify.hpp"
#include "sendov/config_io.hpp"
#include "sendov/report.hpp"
#include "sendov/search.hpp"

namespace {

using namespace sendov;
namespace rep = sendov::report;

void print_out(const std::string& s) {
    std::cout << s;
    if (s.empty() || s.back() != '\n') std::cout << '\n';
}

Complex parse_complex_flag(const std::string& s) {
    try {
        std::size_t used = 0;
        const auto comma = s.find(',');
        if (comma == std::string::npos) {
            const double re = std::stod(s, &used);
            if (used != s.size()) throw ValidationError("trailing characters");
            return Complex(re, 0.0);
        }
        const std::string re_part = s.substr(0, comma);
        const std::string im_part = s.substr(comma + 1);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) throw ValidationError("trailing characters");
        const double im = std::stod(im_part, &used);
        if (used != im_part.size()) throw ValidationError("trailing characters");
        return Complex(re, im);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("cannot parse complex value \"" + s + "\" (expected re,im)");
    }
}

rep::Value complex_array(std::span<const Complex> zs) {
    rep::Value arr = rep::Value::array();
    for (const Complex z : zs) arr.push(rep::Value::complex_pair(z));
    return arr;
}

struct CommonOpts {
    std::string input;
    std::string format = "json";
};

int run_check(const CommonOpts& common, double tol) {
    const FactoredPolynomial fp = io::parse_factored(io::load_json_file(common.input));
    const FactoredPolynomial canon = canonicalize(fp);
    const CriticalSet cs = critical_set(canon);
    const SendovWitness wit = sendov_witness(canon);
    const bool gl = gauss_lucas_check(canon, cs.free, 1e-7);
    const bool within_unit = wit.distance <= 1.0 + tol;

    if (common.format == "csv") {
        rep::Csv csv({"index", "re", "im", "dist_to_a"});
        for (std::size_t i = 0; i < cs.free.size(); ++i) {
            csv.row({rep::Csv::integer(static_cast<long long>(i)),
                     rep::Csv::num(cs.free[i].real()), rep::Csv::num(cs.free[i].imag()),
                     rep::Csv::num(std::abs(canon.a() - cs.free[i]))});
        }
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("check"));
        v.set("config", io::factored_value(canon));
        v.set("free_critical_points", complex_array(cs.free));
        v.set("witness", rep::Value::complex_pair(wit.witness));
        v.set("margin", rep::Value::number(wit.distance));
        v.set("within_unit", rep::Value::boolean(within_unit));
        v.set("gauss_lucas", rep::Value::boolean(gl));
        print_out(v.dump());
    }
    return within_unit ? 0 : 1;
}

int run_lemma(const CommonOpts& common, const std::string& a_s, const std::string& b_s,
              int kmul, int rmul, double tol) {
    const Complex a = parse_complex_flag(a_s);
    const Complex b = parse_complex_flag(b_s);
    const Complex zeta = lemma_critical_point(a, b, kmul, rmul);
    const double dist = lemma_distance(a, b, kmul, rmul);
    const bool hyp = std::abs(a) <= 1.0 + kUnitDiskSlack &&
                     std::abs(b) <= 1.0 + kUnitDiskSlack && std::abs(a - b) > 1.0;
    const bool within_unit = dist <= 1.0 + tol;
    const bool eq2 = static_cast<double>(kmul) * (std::abs(a - b) - 1.0) >
                     static_cast<double>(rmul);
    // The stated "iff k <= r" fails exactly here: k > r yet the critical
    // point still lands inside the unit disk around a.
    const bool discrepancy = hyp && kmul > rmul && within_unit;

    if (common.format == "csv") {
        rep::Csv csv({"re_zeta", "im_zeta", "distance", "within_unit", "k_le_r", "eq2_holds",
                      "hypotheses_met", "iff_discrepancy"});
        csv.row({rep::Csv::num(zeta.real()), rep::Csv::num(zeta.imag()), rep::Csv::num(dist),
                 rep::Csv::boolean(within_unit), rep::Csv::boolean(kmul <= rmul),
                 rep::Csv::boolean(eq2), rep::Csv::boolean(hyp),
                 rep::Csv::boolean(discrepancy)});
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("lemma"));
        v.set("a", rep::Value::complex_pair(a));
        v.set("b", rep::Value::complex_pair(b));
        v.set("kmul", rep::Value::integer(kmul));
        v.set("rmul", rep::Value::integer(rmul));
        v.set("zeta", rep::Value::complex_pair(zeta));
        v.set("distance", rep::Value::number(dist));
        v.set("within_unit", rep::Value::boolean(within_unit));
        v.set("k_le_r", rep::Value::boolean(kmul <= rmul));
        v.set("eq2_holds", rep::Value::boolean(eq2));
        v.set("hypotheses_met", rep::Value::boolean(hyp));
        v.set("iff_discrepancy", rep::Value::boolean(discrepancy));
        print_out(v.dump());
    }
    return (hyp && within_unit) ? 0 : 1;
}

int run_thm1(const CommonOpts& common, double tol) {
    const FactoredPolynomial fp = io::parse_factored(io::load_json_file(common.input));
    const DiskCertificate cert = thm1_disk(fp);
    const FactoredPolynomial canon = canonicalize(fp);

    if (common.format == "csv") {
        rep::Csv csv({"center", "radius", "re_witness", "im_witness", "slack", "valid"});
        csv.row({rep::Csv::num(cert.center.real()), rep::Csv::num(cert.radius),
                 rep::Csv::num(cert.witness.real()), rep::Csv::num(cert.witness.imag()),
                 rep::Csv::num(cert.slack), rep::Csv::boolean(cert.valid(tol))});
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("thm1"));
        v.set("config", io::factored_value(canon));
        v.set("center", rep::Value::number(cert.center.real()));
        v.set("radius", rep::Value::number(cert.radius));
        v.set("witness", rep::Value::complex_pair(cert.witness));
        v.set("slack", rep::Value::number(cert.slack));
        v.set("valid", rep::Value::boolean(cert.valid(tol)));
        print_out(v.dump());
    }
    return cert.valid(tol) ? 0 : 1;
}

int run_identity(const CommonOpts& common, double tol) {
    const FactoredPolynomial fp = io::parse_factored(io::load_json_file(common.input));
    const double residual = thm1_identity_residual(fp);
    const FactoredPolynomial canon = canonicalize(fp);
    const std::vector<Complex> ws = free_critical_points(canon);
    Complex lhs(0.0, 0.0);
    for (const Complex w : ws) lhs += 1.0 / (Complex(1.0, 0.0) - w);
    Complex rhs(0.0, 0.0);
    for (const auto& pr : canon.others()) {
        rhs += (static_cast<double>(pr.mult) + canon.n()) / (Complex(1.0, 0.0) - pr.z);
    }
    rhs /= static_cast<double>(canon.n());
    const bool ok = residual < tol;

    if (common.format == "csv") {
        rep::Csv csv({"re_lhs", "im_lhs", "re_rhs", "im_rhs", "residual", "ok"});
        csv.row({rep::Csv::num(lhs.real()), rep::Csv::num(lhs.imag()),
                 rep::Csv::num(rhs.real()), rep::Csv::num(rhs.imag()),
                 rep::Csv::num(residual), rep::Csv::boolean(ok)});
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("identity"));
        v.set("config", io::factored_value(canon));
        v.set("lhs", rep::Value::complex_pair(lhs));
        v.set("rhs", rep::Value::complex_pair(rhs));
        v.set("residual", rep::Value::number(residual));
        v.set("tol", rep::Value::number(tol));
        v.set("ok", rep::Value::boolean(ok));
        print_out(v.dump());
    }
    return ok ? 0 : 1;
}

int run_corollary1(const CommonOpts& common, double tol) {
    const FactoredPolynomial fp = io::parse_factored(io::load_json_file(common.input));
    const DiskCertificate cert = corollary1_witness(fp);
    const FactoredPolynomial canon = canonicalize(fp);
    const double halfplane = (1.0 / (Complex(1.0, 0.0) - cert.witness)).real();

    if (common.format == "csv") {
        rep::Csv csv({"center", "radius", "re_witness", "im_witness", "slack",
                      "halfplane_value", "valid"});
        csv.row({rep::Csv::num(cert.center.real()), rep::Csv::num(cert.radius),
                 rep::Csv::num(cert.witness.real()), rep::Csv::num(cert.witness.imag()),
                 rep::Csv::num(cert.slack), rep::Csv::num(halfplane),
                 rep::Csv::boolean(cert.valid(tol))});
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("corollary1"));
        v.set("config", io::factored_value(canon));
        v.set("center", rep::Value::number(cert.center.real()));
        v.set("radius", rep::Value::number(cert.radius));
        v.set("witness", rep::Value::complex_pair(cert.witness));
        v.set("slack", rep::Value::number(cert.slack));
        v.set("halfplane_value", rep::Value::number(halfplane));
        v.set("valid", rep::Value::boolean(cert.valid(tol)));
        print_out(v.dump());
    }
    return cert.valid(tol) ? 0 : 1;
}

int run_a0(const CommonOpts& common, int k, long long n, long long m, double tol) {
    const double a0 = solve_a0(k, n, m, tol);
    if (common.format == "csv") {
        rep::Csv csv({"k", "n", "m", "a0"});
        csv.row({rep::Csv::integer(k), rep::Csv::integer(n), rep::Csv::integer(m),
                 rep::Csv::num(a0)});
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("a0"));
        v.set("k", rep::Value::integer(k));
        v.set("n", rep::Value::integer(n));
        v.set("m", rep::Value::integer(m));
        v.set("tol", rep::Value::number(tol));
        v.set("a0", rep::Value::number(a0));
        print_out(v.dump());
    }
    return 0;
}

int run_thm2(const CommonOpts& common) {
    const FactoredPolynomial fp = io::parse_factored(io::load_json_file(common.input));
    const Thm2Report r = thm2_certificate(fp);
    const FactoredPolynomial canon = canonicalize(fp);
    const char* mode = r.certified ? "certified" : "advisory";

    if (common.format == "csv") {
        rep::Csv csv({"a", "a0", "mode", "bound", "re_witness", "im_witness", "witness_abs",
                      "distance", "within_bound", "within_unit", "valid"});
        csv.row({rep::Csv::num(r.a), rep::Csv::num(r.a0), mode, rep::Csv::num(r.bound),
                 rep::Csv::num(r.witness.real()), rep::Csv::num(r.witness.imag()),
                 rep::Csv::num(r.witness_abs), rep::Csv::num(r.distance),
                 rep::Csv::boolean(r.within_bound), rep::Csv::boolean(r.within_unit),
                 rep::Csv::boolean(r.valid())});
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("thm2"));
        v.set("config", io::factored_value(canon));
        v.set("a", rep::Value::number(r.a));
        v.set("a0", rep::Value::number(r.a0));
        v.set("mode", rep::Value::str(mode));
        v.set("bound", rep::Value::number(r.bound));
        v.set("witness", rep::Value::complex_pair(r.witness));
        v.set("witness_abs", rep::Value::number(r.witness_abs));
        v.set("distance", rep::Value::number(r.distance));
        v.set("triangle_bound", rep::Value::number(r.triangle_bound));
        v.set("within_bound", rep::Value::boolean(r.within_bound));
        v.set("within_unit", rep::Value::boolean(r.within_unit));
        v.set("valid", rep::Value::boolean(r.valid()));
        print_out(v.dump());
    }
    return (r.certified && r.valid()) ? 0 : 1;
}

int run_thm3(const CommonOpts& common, double rho, long long n_max, int window) {
    const AsymptoticConfig cfg = io::parse_asymptotic(io::load_json_file(common.input));
    N0Options opts;
    opts.rho = rho;
    opts.n_max = n_max;
    opts.stability_window = window;
    const N0Result r = find_n0(cfg, opts);

    if (common.format == "csv") {
        rep::Csv csv({"n", "re_zeta", "im_zeta", "dist_to_zstar", "dist_to_a"});
        for (const auto& t : r.trace) {
            csv.row({rep::Csv::integer(t.n), rep::Csv::num(t.zeta.real()),
                     rep::Csv::num(t.zeta.imag()), rep::Csv::num(t.dist_to_zstar),
                     rep::Csv::num(t.dist_to_a)});
        }
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("thm3"));
        v.set("config", io::asymptotic_value(cfg));
        v.set("zstar", rep::Value::complex_pair(r.zstar));
        v.set("margin", rep::Value::number(r.margin));
        v.set("rho", rep::Value::number(r.rho));
        v.set("n0", rep::Value::integer(r.n0));
        rep::Value trace = rep::Value::array();
        for (const auto& t : r.trace) {
            rep::Value e = rep::Value::object();
            e.set("n", rep::Value::integer(t.n));
            e.set("zeta", rep::Value::complex_pair(t.zeta));
            e.set("dist_to_zstar", rep::Value::number(t.dist_to_zstar));
            e.set("dist_to_a", rep::Value::number(t.dist_to_a));
            trace.push(std::move(e));
        }
        v.set("trace", std::move(trace));
        print_out(v.dump());
    }
    return 0;
}

int run_search(const CommonOpts& common, long long seed_flag, bool seed_given, int restarts,
               int iters, int threads) {
    SearchSpace space = io::parse_space(io::load_json_file(common.input));
    if (seed_given) space.seed = static_cast<std::uint64_t>(seed_flag);
    if (const char* env = std::getenv("SENDOV_LAB_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            throw ValidationError("SENDOV_LAB_SEED must be an unsigned integer");
        }
        space.seed = v;
    }
    SearchOptions opt;
    opt.restarts = restarts;
    opt.iters = iters;
    opt.threads = threads;
    const SearchReport r = maximize_margin(space, opt);
    const bool applicable = corollary1_applicable(space);
    const bool contradiction = applicable && r.best_margin > 1.0 + 1e-6;

    if (common.format == "csv") {
        rep::Csv csv({"evaluations", "margin"});
        for (const auto& [evals, mg] : r.history) {
            csv.row({rep::Csv::integer(evals), rep::Csv::num(mg)});
        }
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("search"));
        v.set("space", io::space_value(space));
        v.set("restarts", rep::Value::integer(restarts));
        v.set("iters", rep::Value::integer(iters));
        v.set("best_config", io::factored_value(r.best_config));
        v.set("best_margin", rep::Value::number(r.best_margin));
        v.set("evaluations", rep::Value::integer(r.evaluations));
        rep::Value hist = rep::Value::array();
        for (const auto& [evals, mg] : r.history) {
            rep::Value e = rep::Value::array();
            e.push(rep::Value::integer(evals));
            e.push(rep::Value::number(mg));
            hist.push(std::move(e));
        }
        v.set("history", std::move(hist));
        v.set("corollary1_applicable", rep::Value::boolean(applicable));
        v.set("corollary1_contradiction", rep::Value::boolean(contradiction));
        print_out(v.dump());
    }
    return contradiction ? 1 : 0;
}

int run_gauss_lucas(const CommonOpts& common, double tol) {
    const FactoredPolynomial fp = io::parse_factored(io::load_json_file(common.input));
    const FactoredPolynomial canon = canonicalize(fp);
    const std::vector<Complex> pts = free_critical_points(canon);
    std::vector<Complex> vertices;
    vertices.push_back(canon.a());
    for (const auto& pr : canon.others()) vertices.push_back(pr.z);
    const std::vector<Complex> hull = convex_hull(std::move(vertices));
    std::vector<double> dists;
    dists.reserve(pts.size());
    bool inside = true;
    for (const Complex p : pts) {
        const double d = distance_to_hull(hull, p);
        dists.push_back(d);
        inside = inside && d <= tol;
    }

    if (common.format == "csv") {
        rep::Csv csv({"index", "re", "im", "distance", "inside"});
        for (std::size_t i = 0; i < pts.size(); ++i) {
            csv.row({rep::Csv::integer(static_cast<long long>(i)),
                     rep::Csv::num(pts[i].real()), rep::Csv::num(pts[i].imag()),
                     rep::Csv::num(dists[i]), rep::Csv::boolean(dists[i] <= tol)});
        }
        print_out(csv.str());
    } else {
        rep::Value v = rep::Value::object();
        v.set("command", rep::Value::str("gauss-lucas"));
        v.set("config", io::factored_value(canon));
        v.set("tol", rep::Value::number(tol));
        v.set("points", complex_array(pts));
        rep::Value darr = rep::Value::array();
        for (double d : dists) darr.push(rep::Value::number(d));
        v.set("distances", std::move(darr));
        v.set("inside", rep::Value::boolean(inside));
        print_out(v.dump());
    }
    return inside ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sendov-lab: numerical certificates for critical points of factored polynomials"};
    app.require_subcommand(1);

    std::function<int()> action;

    // check
    {
        auto* cmd = app.add_subcommand("check", "validate a configuration and report its margin");
        auto common = std::make_shared<CommonOpts>();
        auto tol = std::make_shared<double>(kCertTol);
        cmd->add_option("--input", common->input, "configuration JSON file")->required();
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", *tol, "margin slack tolerance");
        cmd->callback([&action, common, tol] {
            action = [common, tol] { return run_check(*common, *tol); };
        });
    }
    // lemma
    {
        auto* cmd = app.add_subcommand("lemma", "two-root closed form (z-a)^k (z-b)^r");
        auto common = std::make_shared<CommonOpts>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto kmul = std::make_shared<int>(1);
        auto rmul = std::make_shared<int>(1);
        auto tol = std::make_shared<double>(kCertTol);
        cmd->add_option("--a", *a, "distinguished root, re,im")->required();
        cmd->add_option("--b", *b, "other root, re,im")->required();
        cmd->add_option("--kmul", *kmul, "multiplicity of a")->required();
        cmd->add_option("--rmul", *rmul, "multiplicity of b")->required();
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", *tol, "unit-distance slack tolerance");
        cmd->callback([&action, common, a, b, kmul, rmul, tol] {
            action = [common, a, b, kmul, rmul, tol] {
                return run_lemma(*common, *a, *b, *kmul, *rmul, *tol);
            };
        });
    }
    // thm1
    {
        auto* cmd = app.add_subcommand("thm1", "containment disk for a = 1 configurations");
        auto common = std::make_shared<CommonOpts>();
        auto tol = std::make_shared<double>(kCertTol);
        cmd->add_option("--input", common->input, "configuration JSON file")->required();
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", *tol, "certificate slack tolerance");
        cmd->callback([&action, common, tol] {
            action = [common, tol] { return run_thm1(*common, *tol); };
        });
    }
    // identity
    {
        auto* cmd = app.add_subcommand("identity", "sum identity residual for a = 1");
        auto common = std::make_shared<CommonOpts>();
        auto tol = std::make_shared<double>(1e-8);
        cmd->add_option("--input", common->input, "configuration JSON file")->required();
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", *tol, "residual threshold");
        cmd->callback([&action, common, tol] {
            action = [common, tol] { return run_identity(*common, *tol); };
        });
    }
    // corollary1
    {
        auto* cmd = app.add_subcommand("corollary1", "|zeta - 1/2| <= 1/2 certificate");
        auto common = std::make_shared<CommonOpts>();
        auto tol = std::make_shared<double>(kCertTol);
        cmd->add_option("--input", common->input, "configuration JSON file")->required();
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", *tol, "certificate slack tolerance");
        cmd->callback([&action, common, tol] {
            action = [common, tol] { return run_corollary1(*common, *tol); };
        });
    }
    // a0
    {
        auto* cmd = app.add_subcommand("a0", "root of phi(a) = (1-a)^k - (a(m-n)+n)/m");
        auto common = std::make_shared<CommonOpts>();
        auto k = std::make_shared<int>(1);
        auto n = std::make_shared<long long>(1);
        auto m = std::make_shared<long long>(2);
        auto tol = std::make_shared<double>(1e-12);
        cmd->add_option("--k", *k, "number of other roots")->required();
        cmd->add_option("--n", *n, "multiplicity of a")->required();
        cmd->add_option("--m", *m, "total degree")->required();
        cmd->add_option("--tol", *tol, "bisection width");
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->callback([&action, common, k, n, m, tol] {
            action = [common, k, n, m, tol] { return run_a0(*common, *k, *n, *m, *tol); };
        });
    }
    // thm2
    {
        auto* cmd = app.add_subcommand("thm2", "small-a certificate via the product bound");
        auto common = std::make_shared<CommonOpts>();
        cmd->add_option("--input", common->input, "configuration JSON file")->required();
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->callback([&action, common] {
            action = [common] { return run_thm2(*common); };
        });
    }
    // thm3
    {
        auto* cmd = app.add_subcommand("thm3", "asymptotic family: verify (iv) and locate n0");
        auto common = std::make_shared<CommonOpts>();
        auto rho = std::make_shared<double>(-1.0);
        auto n_max = std::make_shared<long long>(10000);
        auto window = std::make_shared<int>(10);
        cmd->add_option("--input", common->input, "asymptotic configuration JSON file")->required();
        cmd->add_option("--rho", *rho, "target disk radius (default: margin/2)");
        cmd->add_option("--n-max", *n_max, "scan limit");
        cmd->add_option("--window", *window, "consecutive hits required");
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->callback([&action, common, rho, n_max, window] {
            action = [common, rho, n_max, window] {
                return run_thm3(*common, *rho, *n_max, *window);
            };
        });
    }
    // search
    {
        auto* cmd = app.add_subcommand("search", "maximize the margin over a configuration space");
        auto common = std::make_shared<CommonOpts>();
        auto seed = std::make_shared<long long>(0);
        auto restarts = std::make_shared<int>(32);
        auto iters = std::make_shared<int>(400);
        auto threads = std::make_shared<int>(0);
        auto* seed_opt = cmd->add_option("--seed", *seed, "override the space seed");
        cmd->add_option("--input", common->input, "search space JSON file")->required();
        cmd->add_option("--restarts", *restarts, "random restarts");
        cmd->add_option("--iters", *iters, "Nelder-Mead iterations per restart");
        cmd->add_option("--threads", *threads, "worker threads (0 = hardware)");
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->callback([&action, common, seed, seed_opt, restarts, iters, threads] {
            const bool seed_given = seed_opt->count() > 0;
            action = [common, seed, seed_given, restarts, iters, threads] {
                return run_search(*common, *seed, seed_given, *restarts, *iters, *threads);
            };
        });
    }
    // gauss-lucas
    {
        auto* cmd = app.add_subcommand("gauss-lucas",
                                       "check free critical points against the root hull");
        auto common = std::make_shared<CommonOpts>();
        auto tol = std::make_shared<double>(1e-7);
        cmd->add_option("--input", common->input, "configuration JSON file")->required();
        cmd->add_option("--tol", *tol, "hull distance tolerance");
        cmd->add_option("--format", common->format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->callback([&action, common, tol] {
            action = [common, tol] { return run_gauss_lucas(*common, *tol); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NotLocatedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
