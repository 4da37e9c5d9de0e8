#include "sendov/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sendov {

namespace {

void require_closed_unit_disk(const FactoredPolynomial& fp, const char* what) {
    if (std::abs(fp.a()) > 1.0 + kUnitDiskSlack) {
        throw HypothesisError(std::string(what) + ": requires |a| <= 1");
    }
    for (const auto& pr : fp.others()) {
        if (std::abs(pr.z) > 1.0 + kUnitDiskSlack) {
            throw HypothesisError(std::string(what) + ": requires all |z_j| <= 1");
        }
    }
}

// Canonicalize and insist the distinguished root is 1.
FactoredPolynomial gate_a_equals_one(const FactoredPolynomial& fp, const char* what) {
    FactoredPolynomial c = canonicalize(fp);
    if (std::abs(c.a() - Complex(1.0, 0.0)) > kCertTol) {
        throw HypothesisError(std::string(what) +
                              ": requires a = 1 (after canonicalization)");
    }
    require_closed_unit_disk(c, what);
    return c;
}

}  // namespace

SendovWitness sendov_witness(const FactoredPolynomial& fp, const SolveOptions& opt) {
    std::vector<Complex> candidates;
    for (const auto& pr : fp.others()) {
        if (pr.mult >= 2) candidates.push_back(pr.z);  // critical with multiplicity n_j - 1
    }
    const std::vector<Complex> ws = free_critical_points(fp, opt);
    candidates.insert(candidates.end(), ws.begin(), ws.end());

    SendovWitness best{fp.a(), candidates.front(), std::abs(fp.a() - candidates.front())};
    for (const Complex c : candidates) {
        const double d = std::abs(fp.a() - c);
        if (d < best.distance) {
            best.witness = c;
            best.distance = d;
        }
    }
    return best;
}

Complex lemma_critical_point(Complex a, Complex b, int k_mul, int r_mul) {
    if (k_mul < 1 || r_mul < 1) {
        throw ValidationError("lemma multiplicities must be >= 1");
    }
    if (std::abs(a - b) < kDistinctTol) {
        throw ValidationError("degenerate input: a = b");
    }
    const double k = static_cast<double>(k_mul);
    const double r = static_cast<double>(r_mul);
    return (r * a + k * b) / (k + r);
}

double lemma_distance(Complex a, Complex b, int k_mul, int r_mul) {
    if (k_mul < 1 || r_mul < 1) {
        throw ValidationError("lemma multiplicities must be >= 1");
    }
    if (std::abs(a - b) < kDistinctTol) {
        throw ValidationError("degenerate input: a = b");
    }
    const double k = static_cast<double>(k_mul);
    const double r = static_cast<double>(r_mul);
    return k * std::abs(a - b) / (k + r);
}

bool lemma_predicate(Complex a, Complex b, int k_mul, int r_mul) {
    if (k_mul < 1 || r_mul < 1) {
        throw ValidationError("lemma multiplicities must be >= 1");
    }
    if (std::abs(a) > 1.0 + kUnitDiskSlack || std::abs(b) > 1.0 + kUnitDiskSlack ||
        !(std::abs(a - b) > 1.0)) {
        throw HypothesisError("lemma hypotheses not met: need |a| <= 1, |b| <= 1, |a-b| > 1");
    }
    const double k = static_cast<double>(k_mul);
    const double r = static_cast<double>(r_mul);
    return k * std::abs(a - b) <= k + r;
}

DiskCertificate thm1_disk(const FactoredPolynomial& fp, const SolveOptions& opt) {
    const FactoredPolynomial c = gate_a_equals_one(fp, "theorem hypotheses not met");
    const double m = static_cast<double>(c.m());
    const double n = static_cast<double>(c.n());
    const double k = static_cast<double>(c.k());
    const double denom = m + (k - 1.0) * n;

    DiskCertificate cert;
    cert.center = Complex((m - n) / denom, 0.0);
    cert.radius = k * n / denom;

    const std::vector<Complex> ws = free_critical_points(c, opt);
    double best = -std::numeric_limits<double>::infinity();
    for (const Complex w : ws) {
        const double v = (1.0 / (Complex(1.0, 0.0) - w)).real();
        if (v > best) {
            best = v;
            cert.witness = w;
        }
    }
    cert.slack = cert.radius - std::abs(cert.witness - cert.center);
    return cert;
}

double thm1_identity_residual(const FactoredPolynomial& fp, const SolveOptions& opt) {
    const FactoredPolynomial c = gate_a_equals_one(fp, "theorem hypotheses not met");
    const std::vector<Complex> ws = free_critical_points(c, opt);
    Complex lhs(0.0, 0.0);
    for (const Complex w : ws) lhs += 1.0 / (Complex(1.0, 0.0) - w);
    Complex rhs(0.0, 0.0);
    const double n = static_cast<double>(c.n());
    for (const auto& pr : c.others()) {
        rhs += (static_cast<double>(pr.mult) + n) / (Complex(1.0, 0.0) - pr.z);
    }
    rhs /= n;
    return std::abs(lhs - rhs);
}

HalfplaneWitness thm1_halfplane_witness(const FactoredPolynomial& fp, const SolveOptions& opt) {
    const FactoredPolynomial c = gate_a_equals_one(fp, "theorem hypotheses not met");
    const std::vector<Complex> ws = free_critical_points(c, opt);
    HalfplaneWitness hw;
    hw.value = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ws.size(); ++j) {
        const double v = (1.0 / (Complex(1.0, 0.0) - ws[j])).real();
        if (v > hw.value) {
            hw.value = v;
            hw.index = static_cast<int>(j);
        }
    }
    const double m = static_cast<double>(c.m());
    const double n = static_cast<double>(c.n());
    const double k = static_cast<double>(c.k());
    hw.threshold = (m + (k - 1.0) * n) / (2.0 * k * n);
    return hw;
}

DiskCertificate corollary1_witness(const FactoredPolynomial& fp, const SolveOptions& opt) {
    const FactoredPolynomial c = gate_a_equals_one(fp, "corollary hypotheses not met");
    if (c.n() < 2) {
        throw HypothesisError("corollary hypotheses not met: requires n >= 2");
    }
    const long long sum_nj = c.m() - c.n();
    if (sum_nj < static_cast<long long>(c.k()) * c.n()) {
        throw HypothesisError("corollary hypotheses not met: requires sum n_j >= k*n");
    }

    DiskCertificate cert;
    cert.center = Complex(0.5, 0.0);
    cert.radius = 0.5;
    const std::vector<Complex> ws = free_critical_points(c, opt);
    double best = -std::numeric_limits<double>::infinity();
    for (const Complex w : ws) {
        const double slack = cert.radius - std::abs(w - cert.center);
        if (slack > best) {  // ties keep the lexicographically first point
            best = slack;
            cert.witness = w;
        }
    }
    cert.slack = best;
    return cert;
}

double phi(double a, int k, long long n, long long m) {
    if (k < 1 || n < 1 || m <= n) {
        throw ValidationError("phi requires k >= 1 and m > n >= 1");
    }
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    return std::pow(1.0 - a, k) - (a * (md - nd) + nd) / md;
}

double solve_a0(int k, long long n, long long m, double tol) {
    if (k < 1 || n < 1 || m <= n) {
        throw ValidationError("solve_a0 requires k >= 1 and m > n >= 1");
    }
    if (!(tol > 0.0)) {
        throw ValidationError("solve_a0 requires tol > 0");
    }
    // phi(0) = 1 - n/m > 0, phi(1) = -1, and phi' < 0 on [0,1]: unique root.
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid, k, n, m) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Thm2Report thm2_certificate(const FactoredPolynomial& fp, const SolveOptions& opt) {
    const FactoredPolynomial c = canonicalize(fp);
    require_closed_unit_disk(c, "Theorem 2 hypotheses not met");

    Thm2Report rep;
    rep.a = c.a().real();
    rep.a0 = solve_a0(c.k(), c.n(), c.m());
    const double m = static_cast<double>(c.m());
    const double n = static_cast<double>(c.n());
    rep.bound = std::pow((rep.a * (m - n) + n) / m, 1.0 / static_cast<double>(c.k()));

    const std::vector<Complex> ws = free_critical_points(c, opt);
    rep.witness_abs = std::numeric_limits<double>::infinity();
    for (const Complex w : ws) {
        const double r = std::abs(w);
        if (r < rep.witness_abs) {
            rep.witness_abs = r;
            rep.witness = w;
        }
    }
    rep.distance = std::abs(Complex(rep.a, 0.0) - rep.witness);
    rep.triangle_bound = rep.a + rep.bound;
    rep.certified = rep.a > 0.0 && rep.a <= rep.a0 + kCertTol;
    rep.within_bound = rep.witness_abs <= rep.bound + kCertTol;
    rep.within_unit = rep.distance <= 1.0 + kCertTol;
    return rep;
}

double remark1_value(int k) {
    if (k < 1) {
        throw ValidationError("remark1 requires k >= 1");
    }
    const double kd = static_cast<double>(k);
    return std::pow(1.0 - 1.0 / kd, k) - 2.0 / (kd + 1.0);
}

bool remark1_check(int k) {
    return remark1_value(k) > 0.0;
}

}  // namespace sendov
