#include "sendov/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

namespace sendov {

namespace {

constexpr double kReject = -1e9;     // unconstructible sample
constexpr double kSoftSep = 1e-3;    // penalty ramps in below this separation
constexpr double kPenaltyRate = 10.0;

double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

Complex sample_disk(std::mt19937_64& g) {
    const double r = std::sqrt(uniform01(g));
    const double th = 2.0 * std::numbers::pi * uniform01(g);
    return Complex(r * std::cos(th), r * std::sin(th));
}

struct Decoded {
    Complex a;
    std::vector<Complex> zs;
    double min_sep = 0.0;
};

// Map raw parameters into the feasible region: a clamped to [0,1], every z_j
// radially clamped to the closed unit disk (so boundary extremals stay
// reachable).
Decoded decode(const SearchSpace& space, const std::vector<double>& p) {
    Decoded d;
    std::size_t at = 0;
    if (space.a_free) {
        d.a = Complex(std::clamp(p[at++], 0.0, 1.0), 0.0);
    } else {
        d.a = Complex(space.a_fixed, 0.0);
    }
    d.zs.reserve(static_cast<std::size_t>(space.k));
    for (int j = 0; j < space.k; ++j) {
        Complex z(p[at], p[at + 1]);
        at += 2;
        const double r = std::abs(z);
        if (r > 1.0) z /= r;
        d.zs.push_back(z);
    }
    d.min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d.zs.size(); ++j) {
        d.min_sep = std::min(d.min_sep, std::abs(d.zs[j] - d.a));
        for (std::size_t i = j + 1; i < d.zs.size(); ++i) {
            d.min_sep = std::min(d.min_sep, std::abs(d.zs[j] - d.zs[i]));
        }
    }
    return d;
}

FactoredPolynomial build(const SearchSpace& space, const Decoded& d) {
    std::vector<PrescribedRoot> roots;
    roots.reserve(d.zs.size());
    for (int j = 0; j < space.k; ++j) {
        roots.push_back({d.zs[static_cast<std::size_t>(j)],
                         space.multiplicities[static_cast<std::size_t>(j)]});
    }
    const bool unit = std::abs(d.a) <= 1.0 + kUnitDiskSlack;
    return FactoredPolynomial(d.a, space.n, std::move(roots), unit);
}

struct Sample {
    double objective = kReject;  // margin minus coincidence penalty
    double raw_margin = 0.0;
    bool constructible = false;
};

struct RestartOutcome {
    std::vector<double> best_params;
    Sample best;
    long long evaluations = 0;
};

class Objective {
  public:
    Objective(const SearchSpace& space, const SolveOptions& solve)
        : space_(space), solve_(solve) {}

    Sample operator()(const std::vector<double>& p) {
        ++evals_;
        const Decoded d = decode(space_, p);
        Sample s;
        if (d.min_sep < kDistinctTol) {
            return s;  // rejected: construction would fail
        }
        const FactoredPolynomial fp = build(space_, d);
        s.raw_margin = sendov_witness(fp, solve_).distance;
        s.objective = s.raw_margin - kPenaltyRate * std::max(0.0, kSoftSep - d.min_sep);
        s.constructible = true;
        return s;
    }

    long long evals() const { return evals_; }

  private:
    const SearchSpace& space_;
    SolveOptions solve_;
    long long evals_ = 0;
};

RestartOutcome run_restart(const SearchSpace& space, const SearchOptions& opt, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(space.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(space.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 g(seq);
    Objective obj(space, SolveOptions{});

    const std::size_t dim = static_cast<std::size_t>(2 * space.k + (space.a_free ? 1 : 0));

    // Initial sample; resample a few times if the draw is degenerate.
    std::vector<double> x0(dim);
    Sample s0;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::size_t at = 0;
        if (space.a_free) x0[at++] = uniform01(g);
        for (int j = 0; j < space.k; ++j) {
            const Complex z = sample_disk(g);
            x0[at++] = z.real();
            x0[at++] = z.imag();
        }
        s0 = obj(x0);
        if (s0.constructible) break;
    }

    RestartOutcome out;
    out.best_params = x0;
    out.best = s0;
    auto consider = [&](const std::vector<double>& p, const Sample& s) {
        if (s.objective > out.best.objective) {
            out.best = s;
            out.best_params = p;
        }
    };

    if (opt.iters > 0 && s0.constructible) {
        // Nelder-Mead on the negated objective; standard coefficients.
        const double alpha = 1.0, gamma = 2.0, beta = 0.5, sigma = 0.5;
        const std::size_t nv = dim + 1;
        std::vector<std::vector<double>> xs(nv, x0);
        std::vector<double> fv(nv);
        fv[0] = -s0.objective;
        for (std::size_t i = 1; i < nv; ++i) {
            xs[i][i - 1] += 0.2;
            const Sample s = obj(xs[i]);
            consider(xs[i], s);
            fv[i] = -s.objective;
        }
        std::vector<std::size_t> order(nv);
        for (int it = 0; it < opt.iters; ++it) {
            for (std::size_t i = 0; i < nv; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            const std::size_t lo = order[0], hi = order[nv - 1], nh = order[nv - 2];
            if (std::abs(fv[hi] - fv[lo]) < 1e-13) break;

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t i = 0; i < nv; ++i) {
                if (i == hi) continue;
                for (std::size_t dgr = 0; dgr < dim; ++dgr) centroid[dgr] += xs[i][dgr];
            }
            for (double& v : centroid) v /= static_cast<double>(dim);

            std::vector<double> xr(dim);
            for (std::size_t dgr = 0; dgr < dim; ++dgr) {
                xr[dgr] = centroid[dgr] + alpha * (centroid[dgr] - xs[hi][dgr]);
            }
            const Sample sr = obj(xr);
            consider(xr, sr);
            const double fr = -sr.objective;

            if (fr < fv[lo]) {
                std::vector<double> xe(dim);
                for (std::size_t dgr = 0; dgr < dim; ++dgr) {
                    xe[dgr] = centroid[dgr] + gamma * (xr[dgr] - centroid[dgr]);
                }
                const Sample se = obj(xe);
                consider(xe, se);
                if (-se.objective < fr) {
                    xs[hi] = xe;
                    fv[hi] = -se.objective;
                } else {
                    xs[hi] = xr;
                    fv[hi] = fr;
                }
            } else if (fr < fv[nh]) {
                xs[hi] = xr;
                fv[hi] = fr;
            } else {
                std::vector<double> xc(dim);
                for (std::size_t dgr = 0; dgr < dim; ++dgr) {
                    xc[dgr] = centroid[dgr] + beta * (xs[hi][dgr] - centroid[dgr]);
                }
                const Sample sc = obj(xc);
                consider(xc, sc);
                if (-sc.objective < fv[hi]) {
                    xs[hi] = xc;
                    fv[hi] = -sc.objective;
                } else {
                    for (std::size_t i = 0; i < nv; ++i) {
                        if (i == lo) continue;
                        for (std::size_t dgr = 0; dgr < dim; ++dgr) {
                            xs[i][dgr] = xs[lo][dgr] + sigma * (xs[i][dgr] - xs[lo][dgr]);
                        }
                        const Sample s = obj(xs[i]);
                        consider(xs[i], s);
                        fv[i] = -s.objective;
                    }
                }
            }
        }
    }
    out.evaluations = obj.evals();
    return out;
}

}  // namespace

double margin(const FactoredPolynomial& fp, const SolveOptions& opt) {
    return sendov_witness(fp, opt).distance;
}

bool corollary1_applicable(const SearchSpace& space) {
    if (space.a_free || space.a_fixed != 1.0 || space.n < 2) return false;
    long long sum = 0;
    for (int nj : space.multiplicities) sum += nj;
    return sum >= static_cast<long long>(space.k) * space.n;
}

SearchReport maximize_margin(const SearchSpace& space, const SearchOptions& opt) {
    if (space.k < 1 || space.n < 1 ||
        space.multiplicities.size() != static_cast<std::size_t>(space.k)) {
        throw ValidationError("search space needs k >= 1, n >= 1 and k multiplicities");
    }
    for (int nj : space.multiplicities) {
        if (nj < 1) throw ValidationError("search space multiplicities must be >= 1");
    }
    if (opt.restarts < 1) throw ValidationError("search needs at least one restart");

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opt.restarts));
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const int threads = std::min<int>(opt.threads > 0 ? opt.threads : static_cast<int>(hw),
                                      opt.restarts);
    if (threads <= 1) {
        for (int r = 0; r < opt.restarts; ++r) {
            outcomes[static_cast<std::size_t>(r)] = run_restart(space, opt, r);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (int r = t; r < opt.restarts; r += threads) {
                    outcomes[static_cast<std::size_t>(r)] = run_restart(space, opt, r);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction in restart order.
    long long total_evals = 0;
    const RestartOutcome* best = nullptr;
    std::vector<std::pair<long long, double>> history;
    for (const auto& oc : outcomes) {
        total_evals += oc.evaluations;
        if (!oc.best.constructible) continue;
        if (best == nullptr || oc.best.objective > best->best.objective) {
            best = &oc;
            history.emplace_back(total_evals, oc.best.raw_margin);
        }
    }
    if (best == nullptr) {
        throw ConvergenceError("search produced no constructible configuration");
    }

    const Decoded d = decode(space, best->best_params);
    SearchReport report{build(space, d), best->best.raw_margin, total_evals,
                        std::move(history)};
    return report;
}

}  // namespace sendov
