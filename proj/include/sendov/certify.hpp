#pragma once

#include "sendov/roots.hpp"

namespace sendov {

// Non-strict inequalities are certified with this much slack; strict ones are
// checked strictly after subtracting the same amount.
inline constexpr double kCertTol = 1e-9;

/// A disk plus a point certified to lie inside it (slack >= -tol).
struct DiskCertificate {
    Complex center;
    double radius = 0.0;
    Complex witness;
    double slack = 0.0;  // radius - |witness - center|

    bool valid(double tol = kCertTol) const { return slack >= -tol; }
};

/// A critical point != a together with its distance to a.
struct SendovWitness {
    Complex root;     // the distinguished root a
    Complex witness;  // critical point minimizing |a - witness|
    double distance = 0.0;
};

struct HalfplaneWitness {
    int index = 0;          // into the (re, im)-sorted free critical points
    double value = 0.0;     // Re 1/(1 - w_j)
    double threshold = 0.0; // (m + (k-1)n) / (2kn)
};

struct Thm2Report {
    double a = 0.0;               // canonical distinguished root (real, >= 0)
    double a0 = 0.0;
    double bound = 0.0;           // ((a(m-n)+n)/m)^{1/k}
    Complex witness;
    double witness_abs = 0.0;
    double distance = 0.0;        // |a - witness|
    double triangle_bound = 0.0;  // a + bound
    bool certified = false;       // 0 < a <= a0; otherwise the run is advisory
    bool within_bound = false;    // |witness| <= bound + tol
    bool within_unit = false;     // |a - witness| <= 1 + tol

    bool valid() const { return within_bound && within_unit; }
};

/// The critical point != a closest to a, drawn from the prescribed roots of
/// multiplicity >= 2 and the free critical points.
SendovWitness sendov_witness(const FactoredPolynomial& fp, const SolveOptions& opt = {});

/// Closed form (r a + k b)/(k + r): the only free critical point of
/// (z-a)^k (z-b)^r.
Complex lemma_critical_point(Complex a, Complex b, int k_mul, int r_mul);

/// k |a-b| / (k+r), the distance from a to that critical point.
double lemma_distance(Complex a, Complex b, int k_mul, int r_mul);

/// The exact distance condition k|a-b| <= k+r under the hypotheses
/// |a| <= 1, |b| <= 1, |a-b| > 1.  k <= r is sufficient for this to hold;
/// the converse fails in general (k > r with k(|a-b|-1) <= r still gives a
/// distance <= 1), so callers should not read this as "k <= r".
bool lemma_predicate(Complex a, Complex b, int k_mul, int r_mul);

/// Certified disk |z - (m-n)/(m+(k-1)n)| <= kn/(m+(k-1)n) for configurations
/// with a = 1 after canonicalization.  Witness: the free critical point
/// maximizing Re 1/(1-w_j).
DiskCertificate thm1_disk(const FactoredPolynomial& fp, const SolveOptions& opt = {});

/// | sum_j 1/(1-w_j) - (1/n) sum_j (n_j+n)/(1-z_j) |   (a = 1 required).
double thm1_identity_residual(const FactoredPolynomial& fp, const SolveOptions& opt = {});

/// The free point maximizing Re 1/(1-w_j) and the threshold it must clear.
HalfplaneWitness thm1_halfplane_witness(const FactoredPolynomial& fp,
                                        const SolveOptions& opt = {});

/// Disk |z - 1/2| <= 1/2 under the hypotheses a = 1, n >= 2, sum n_j >= kn.
/// Witness: maximal slack, ties to the lexicographically first free point.
DiskCertificate corollary1_witness(const FactoredPolynomial& fp,
                                   const SolveOptions& opt = {});

/// phi(a) = (1-a)^k - (a(m-n)+n)/m on [0, 1].
double phi(double a, int k, long long n, long long m);

/// The unique root a0 of phi in (0,1), by bisection to width tol.  phi is
/// strictly decreasing, phi(0) = 1 - n/m > 0 and phi(1) = -1.
double solve_a0(int k, long long n, long long m, double tol = 1e-12);

/// Certificate for real 0 < a <= a0: some free critical point satisfies
/// |w| <= ((a(m-n)+n)/m)^{1/k} and hence |a-w| <= a + bound <= 1.  For
/// a = 0 or a > a0 the same bounds are still computed but the report is
/// flagged advisory instead of certified.
Thm2Report thm2_certificate(const FactoredPolynomial& fp, const SolveOptions& opt = {});

/// (1 - 1/k)^k - 2/(k+1), the lower-bound value of phi at a = 1/k under
/// sum n_j >= kn.
double remark1_value(int k);

/// True iff remark1_value(k) > 0; holds for every k >= 7 (then a0 > 1/k).
bool remark1_check(int k);

}  // namespace sendov
