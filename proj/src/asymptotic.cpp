#include "sendov/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sendov {

namespace {

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

std::vector<Complex> mul_linear(std::vector<Complex> c, Complex root) {
    c.push_back(Complex(0.0, 0.0));
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        c[i] = c[i - 1] - root * c[i];
    }
    c[0] = -root * c[0];
    return c;
}

std::vector<Complex> monic_normalized(std::vector<Complex> c) {
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;
    c.back() = Complex(1.0, 0.0);
    return c;
}

}  // namespace

long long RemainderRule::eval(long long n) const {
    switch (kind) {
        case Kind::Const:
            return c;
        case Kind::Mod:
            return (c * n) % d;
        case Kind::Log:
            return static_cast<long long>(std::floor(coef * std::log(static_cast<double>(n))));
        case Kind::Table:
            for (const auto& [key, value] : table) {
                if (key == n) return value;
            }
            return 0;
    }
    return 0;
}

RemainderRule RemainderRule::constant(long long value) {
    if (value < 0) throw ValidationError("constant remainder rule needs a value >= 0");
    RemainderRule r;
    r.kind = Kind::Const;
    r.c = value;
    return r;
}

RemainderRule RemainderRule::cycle(long long c, long long d) {
    if (c < 0 || d < 1) throw ValidationError("mod remainder rule needs c >= 0 and d >= 1");
    RemainderRule r;
    r.kind = Kind::Mod;
    r.c = c;
    r.d = d;
    return r;
}

RemainderRule RemainderRule::log_rule(double coef) {
    if (!(coef >= 0.0)) throw ValidationError("log remainder rule needs coef >= 0");
    RemainderRule r;
    r.kind = Kind::Log;
    r.coef = coef;
    return r;
}

RemainderRule RemainderRule::table_rule(std::vector<std::pair<long long, long long>> entries) {
    for (const auto& [n, value] : entries) {
        if (n < 2 || value < 0) {
            throw ValidationError("table remainder rule needs n >= 2 and values >= 0");
        }
    }
    RemainderRule r;
    r.kind = Kind::Table;
    r.table = std::move(entries);
    return r;
}

AsymptoticConfig::AsymptoticConfig(Complex a, std::vector<AsymptoticEntry> entries,
                                   ProbeOptions probe)
    : a_(a), entries_(std::move(entries)), probe_(probe) {
    if (entries_.empty()) {
        throw ValidationError("asymptotic config needs at least one entry (k >= 1)");
    }
    if (probe_.n_probe < 2 || probe_.n_hi <= probe_.n_probe) {
        throw ValidationError("probe range must satisfy 2 <= n_probe < n_hi");
    }
    if (std::abs(a_) > 1.0 + kUnitDiskSlack) {
        throw ValidationError("asymptotic config requires |a| <= 1");
    }
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (entries_[j].r < 0) {
            throw ValidationError("r_" + std::to_string(j + 1) + " must be >= 0");
        }
        sum_r_ += entries_[j].r;
        if (std::abs(entries_[j].z) > 1.0 + kUnitDiskSlack) {
            throw ValidationError("asymptotic config requires |z_j| <= 1");
        }
        if (std::abs(entries_[j].z - a_) < kDistinctTol) {
            throw ValidationError("z_" + std::to_string(j + 1) + " coincides with a");
        }
        for (std::size_t i = j + 1; i < entries_.size(); ++i) {
            if (std::abs(entries_[j].z - entries_[i].z) < kDistinctTol) {
                throw ValidationError("z_" + std::to_string(j + 1) + " and z_" +
                                      std::to_string(i + 1) + " are not distinct");
            }
        }
    }
    if (sum_r_ < 1) {
        throw ValidationError("hypothesis (ii) violated: r_j >= 1 is required for some j");
    }

    // 0 <= s_j(n) <= n-1 and r_j + s_j(n) >= 1 must hold from min_valid_n on.
    long long last_bad = 1;
    for (long long n = 2; n <= probe_.n_hi; ++n) {
        for (const auto& e : entries_) {
            const long long s = e.s.eval(n);
            if (s < 0 || s > n - 1 || e.r + s < 1) {
                last_bad = n;
                break;
            }
        }
    }
    min_valid_n_ = std::max<long long>(2, last_bad + 1);
    if (min_valid_n_ > probe_.n_probe) {
        throw ValidationError(
            "hypotheses (i)/(ii) fail at n = " + std::to_string(last_bad) +
            ", beyond the probe start n_probe = " + std::to_string(probe_.n_probe));
    }

    // Empirical hypothesis (iii): the remainder fraction stays small.
    for (long long n = probe_.n_probe; n <= probe_.n_hi; ++n) {
        for (std::size_t j = 0; j < entries_.size(); ++j) {
            const long long s = entries_[j].s.eval(n);
            if (static_cast<double>(s) > probe_.ratio_cap * static_cast<double>(n)) {
                throw ValidationError("hypothesis (iii) violated empirically: s_" +
                                      std::to_string(j + 1) + "(" + std::to_string(n) + ")/" +
                                      std::to_string(n) + " exceeds " +
                                      std::to_string(probe_.ratio_cap));
            }
        }
    }

    // The limit polynomial presumes a fixed Y; require Y(n) constant over the
    // upper half of the probe range.
    stable_y_ = Y(probe_.n_hi);
    const long long stable_from = std::max(min_valid_n_, probe_.n_hi / 2);
    for (long long n = stable_from; n < probe_.n_hi; ++n) {
        if (Y(n) != stable_y_) {
            throw ValidationError(
                "index set Y(n) = {j : s_j(n) >= 1} oscillates near n = " + std::to_string(n) +
                "; the limit polynomial needs an eventually constant Y");
        }
    }
}

std::vector<int> AsymptoticConfig::X() const {
    std::vector<int> x;
    for (int j = 0; j < k(); ++j) {
        if (entries_[static_cast<std::size_t>(j)].r >= 1) x.push_back(j);
    }
    return x;
}

std::vector<int> AsymptoticConfig::Y(long long n) const {
    std::vector<int> y;
    for (int j = 0; j < k(); ++j) {
        if (entries_[static_cast<std::size_t>(j)].s.eval(n) >= 1) y.push_back(j);
    }
    return y;
}

FactoredPolynomial AsymptoticConfig::assemble(long long n) const {
    if (n < min_valid_n_) {
        throw ValidationError("n = " + std::to_string(n) + " is below min_valid_n = " +
                              std::to_string(min_valid_n_));
    }
    std::vector<PrescribedRoot> roots;
    roots.reserve(entries_.size());
    for (const auto& e : entries_) {
        const long long mult = static_cast<long long>(e.r) * n + e.s.eval(n);
        roots.push_back({e.z, static_cast<int>(mult)});
    }
    return FactoredPolynomial(a_, static_cast<int>(n), std::move(roots));
}

FactoredPolynomial build_P(const AsymptoticConfig& cfg) {
    std::vector<PrescribedRoot> roots;
    for (const auto& e : cfg.entries()) {
        if (e.r >= 1) roots.push_back({e.z, e.r});
    }
    if (roots.empty()) {
        throw HypothesisError("hypothesis (ii) violated: X is empty");
    }
    return FactoredPolynomial(cfg.a(), 1, std::move(roots));
}

HypothesisIVResult check_hypothesis_iv(const AsymptoticConfig& cfg, const SolveOptions& opt) {
    const FactoredPolynomial P = build_P(cfg);

    HypothesisIVResult out;
    out.candidates = free_critical_points(P, opt);
    for (const auto& pr : P.others()) {
        if (pr.mult >= 2) out.candidates.push_back(pr.z);
    }
    std::sort(out.candidates.begin(), out.candidates.end(), lex_less);

    out.margin = -std::numeric_limits<double>::infinity();
    for (const Complex zeta : out.candidates) {
        if (std::abs(zeta) > 1.0 + kCertTol) continue;
        const double dist = std::abs(cfg.a() - zeta);
        if (!(dist < 1.0 - kCertTol)) continue;
        const double margin = 1.0 - dist;
        if (margin > out.margin) {
            out.margin = margin;
            out.zeta = zeta;
            out.satisfied = true;
        }
    }
    if (!out.satisfied) out.margin = 0.0;
    return out;
}

CoefficientPolynomial build_fn(const AsymptoticConfig& cfg, long long n) {
    const CoefficientPolynomial q = deflated_derivative(cfg.assemble(n));
    return CoefficientPolynomial(monic_normalized(q.coeffs()));
}

CoefficientPolynomial build_fn_displayed(const AsymptoticConfig& cfg, long long n,
                                         const SolveOptions& opt) {
    if (n < cfg.min_valid_n()) {
        throw ValidationError("n = " + std::to_string(n) + " is below min_valid_n = " +
                              std::to_string(cfg.min_valid_n()));
    }
    const FactoredPolynomial P = build_P(cfg);
    const std::vector<Complex> zetas = free_critical_points(P, opt);
    const std::vector<int> x = cfg.X();
    const std::vector<int> y = cfg.Y(n);
    const auto& entries = cfg.entries();
    auto in = [](const std::vector<int>& set, int j) {
        return std::find(set.begin(), set.end(), j) != set.end();
    };

    // prod_i (z - zeta_i) * prod_{j in Y\X} (z - z_j)
    std::vector<Complex> first = {Complex(1.0, 0.0)};
    for (const Complex zeta : zetas) first = mul_linear(std::move(first), zeta);
    for (int j : y) {
        if (!in(x, j)) first = mul_linear(std::move(first), entries[static_cast<std::size_t>(j)].z);
    }

    // (z-a) * (sum_{j in Y} s_j(n) prod_{i in Y\{j}} (z - z_i)) * prod_{X\Y} (z - z_j)
    std::vector<Complex> sum = {Complex(0.0, 0.0)};
    for (int j : y) {
        std::vector<Complex> term = {
            Complex(static_cast<double>(cfg.s_at(j, n)), 0.0)};
        for (int i : y) {
            if (i != j) term = mul_linear(std::move(term), entries[static_cast<std::size_t>(i)].z);
        }
        if (term.size() > sum.size()) sum.resize(term.size(), Complex(0.0, 0.0));
        for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
    }
    std::vector<Complex> second = mul_linear(std::move(sum), cfg.a());
    for (int j : x) {
        if (!in(y, j)) second = mul_linear(std::move(second), entries[static_cast<std::size_t>(j)].z);
    }
    const double scale = static_cast<double>(n) * (1.0 + static_cast<double>(cfg.sum_r()));
    for (auto& v : second) v /= scale;

    if (second.size() > first.size()) first.resize(second.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < second.size(); ++i) first[i] += second[i];
    return CoefficientPolynomial(monic_normalized(std::move(first)));
}

CoefficientPolynomial build_f(const AsymptoticConfig& cfg, const SolveOptions& opt) {
    const FactoredPolynomial P = build_P(cfg);
    std::vector<Complex> roots = free_critical_points(P, opt);
    const std::vector<int> x = cfg.X();
    for (int j : cfg.stable_Y()) {
        if (std::find(x.begin(), x.end(), j) == x.end()) {
            roots.push_back(cfg.entries()[static_cast<std::size_t>(j)].z);
        }
    }
    return from_roots(roots);
}

N0Result find_n0(const AsymptoticConfig& cfg, const N0Options& opt) {
    const HypothesisIVResult iv = check_hypothesis_iv(cfg, opt.solve);
    if (!iv.satisfied) {
        throw HypothesisError(
            "hypothesis (iv) fails: P' has no root with |zeta| <= 1 and |a - zeta| < 1; "
            "refusing to scan for n0");
    }
    const double rho = opt.rho > 0.0 ? opt.rho : 0.5 * iv.margin;
    if (!(rho < iv.margin)) {
        throw HypothesisError("rho = " + std::to_string(rho) +
                              " must be smaller than the hypothesis-(iv) margin " +
                              std::to_string(iv.margin));
    }
    if (opt.stability_window < 1) {
        throw ValidationError("stability window must be >= 1");
    }

    N0Result out;
    out.zstar = iv.zeta;
    out.margin = iv.margin;
    out.rho = rho;

    const long long n_start = std::max<long long>(2, cfg.min_valid_n());
    long long run_start = -1;
    double best_seen = std::numeric_limits<double>::infinity();
    long long best_n = n_start;
    for (long long n = n_start; n <= opt.n_max; ++n) {
        const CoefficientPolynomial fn = build_fn(cfg, n);
        const RootResult rr = all_roots(fn, opt.solve);
        if (!rr.converged) {
            throw ConvergenceError("root solve for f_n did not converge at n = " +
                                   std::to_string(n));
        }
        Complex closest = rr.roots.front();
        double dist = std::abs(closest - iv.zeta);
        for (const Complex w : rr.roots) {
            const double d = std::abs(w - iv.zeta);
            if (d < dist || (d == dist && lex_less(w, closest))) {
                dist = d;
                closest = w;
            }
        }
        out.trace.push_back({n, closest, dist, std::abs(cfg.a() - closest)});
        if (dist < best_seen) {
            best_seen = dist;
            best_n = n;
        }
        if (dist < rho) {
            if (run_start < 0) run_start = n;
            if (n - run_start + 1 >= opt.stability_window) {
                out.n0 = run_start;
                return out;
            }
        } else {
            run_start = -1;
        }
    }
    throw NotLocatedError("n0 not located within n_max = " + std::to_string(opt.n_max) +
                          " (rho = " + std::to_string(rho) + ", closest approach " +
                          std::to_string(best_seen) + " at n = " + std::to_string(best_n) + ")");
}

}  // namespace sendov
