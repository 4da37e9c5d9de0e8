#pragma once

#include <utility>
#include <vector>

#include "sendov/certify.hpp"

namespace sendov {

/// The remainder multiplicity s_j(n) as a small expression over n:
/// a constant, (c*n) mod d, floor(c*ln n), or an explicit table (0 outside
/// the tabulated range).
struct RemainderRule {
    enum class Kind { Const, Mod, Log, Table };

    Kind kind = Kind::Const;
    long long c = 0;      // Const value / Mod multiplier
    long long d = 1;      // Mod modulus
    double coef = 0.0;    // Log coefficient
    std::vector<std::pair<long long, long long>> table;

    long long eval(long long n) const;

    static RemainderRule constant(long long value);
    static RemainderRule cycle(long long c, long long d);  // (c*n) mod d
    static RemainderRule log_rule(double coef);            // floor(coef * ln n)
    static RemainderRule table_rule(std::vector<std::pair<long long, long long>> entries);
};

struct AsymptoticEntry {
    Complex z;
    int r = 0;           // n_j = r_j * n + s_j(n)
    RemainderRule s;
};

/// Validation range for the empirical hypothesis checks.
struct ProbeOptions {
    long long n_probe = 64;   // s_j(n)/n <= ratio_cap is enforced from here on
    long long n_hi = 4096;    // end of the scanned range
    double ratio_cap = 0.1;
};

/// A family p_n(z) = (z-a)^n prod_j (z-z_j)^{r_j n + s_j(n)}.  Construction
/// validates, over [2, n_hi]:
///   - 0 <= s_j(n) <= n-1 and r_j + s_j(n) >= 1 from some n on (min_valid_n,
///     which must be <= n_probe);
///   - s_j(n)/n <= ratio_cap for all n >= n_probe;
///   - r_j >= 1 for at least one j;
///   - the index set Y(n) = {j : s_j(n) >= 1} is constant over the upper half
///     of the range (configurations with oscillating membership are rejected,
///     since the limit polynomial presumes a fixed Y).
class AsymptoticConfig {
  public:
    AsymptoticConfig(Complex a, std::vector<AsymptoticEntry> entries,
                     ProbeOptions probe = {});

    Complex a() const { return a_; }
    const std::vector<AsymptoticEntry>& entries() const { return entries_; }
    int k() const { return static_cast<int>(entries_.size()); }
    const ProbeOptions& probe() const { return probe_; }

    long long s_at(int j, long long n) const { return entries_[static_cast<std::size_t>(j)].s.eval(n); }
    long long sum_r() const { return sum_r_; }
    long long min_valid_n() const { return min_valid_n_; }

    std::vector<int> X() const;               // {j : r_j >= 1}
    std::vector<int> Y(long long n) const;    // {j : s_j(n) >= 1}
    const std::vector<int>& stable_Y() const { return stable_y_; }

    /// The full configuration at degree parameter n (n >= min_valid_n).
    FactoredPolynomial assemble(long long n) const;

  private:
    Complex a_;
    std::vector<AsymptoticEntry> entries_;
    ProbeOptions probe_;
    long long sum_r_ = 0;
    long long min_valid_n_ = 2;
    std::vector<int> stable_y_;
};

/// P(z) = (z-a) prod_{j in X} (z-z_j)^{r_j}.
FactoredPolynomial build_P(const AsymptoticConfig& cfg);

struct HypothesisIVResult {
    bool satisfied = false;
    Complex zeta;                     // witness with maximal margin
    double margin = 0.0;              // 1 - |a - zeta|
    std::vector<Complex> candidates;  // all roots of P' that were considered
};

/// Roots of P' restricted to |zeta| <= 1 and |a - zeta| < 1 (strictly, with
/// the certification slack).  Failure is a value, not an error.
HypothesisIVResult check_hypothesis_iv(const AsymptoticConfig& cfg,
                                       const SolveOptions& opt = {});

/// The monic degree-k polynomial f_n whose roots are the free critical
/// points zeta(j,n) of the assembled configuration at n.  Derived through
/// the deflated derivative of the full factored form, which never expands
/// the degree-m polynomial.
CoefficientPolynomial build_fn(const AsymptoticConfig& cfg, long long n);

/// Same polynomial assembled from its displayed closed form
///
///   prod_i (z - zeta_i) prod_{j in Y\X} (z - z_j)
///     + (z-a)/(n(1+sum r)) (sum_j s_j(n) prod_{i in Y\{j}} (z - z_i))
///       prod_{j in X\Y} (z - z_j),
///
/// normalized monic; the zeta_i are the free critical points of P.  Kept as
/// an independent cross-check of build_fn.
CoefficientPolynomial build_fn_displayed(const AsymptoticConfig& cfg, long long n,
                                         const SolveOptions& opt = {});

/// The limit polynomial prod_i (z - zeta_i) prod_{j in Y\X} (z - z_j) with
/// Y the stable index set.
CoefficientPolynomial build_f(const AsymptoticConfig& cfg, const SolveOptions& opt = {});

struct TraceEntry {
    long long n = 0;
    Complex zeta;            // root of f_n closest to the hypothesis-(iv) witness
    double dist_to_zstar = 0.0;
    double dist_to_a = 0.0;  // the triangle-inequality check |a - zeta| < 1
};

struct N0Result {
    long long n0 = 0;
    Complex zstar;
    double margin = 0.0;
    double rho = 0.0;
    std::vector<TraceEntry> trace;  // every scanned n up to n0 + window - 1
};

struct N0Options {
    double rho = -1.0;          // <= 0 means auto: margin / 2
    long long n_max = 10000;
    int stability_window = 10;  // consecutive n values that must hit D(zstar, rho)
    SolveOptions solve{};
};

/// Smallest n such that a root of f_n lands in D(zstar, rho) for
/// stability_window consecutive values of n.  Refuses to run when hypothesis
/// (iv) fails or rho >= margin; throws NotLocatedError past n_max.
N0Result find_n0(const AsymptoticConfig& cfg, const N0Options& opt = {});

}  // namespace sendov
