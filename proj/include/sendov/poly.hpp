#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sendov/errors.hpp"

namespace sendov {

using Complex = std::complex<double>;

// Prescribed roots closer than this are rejected at construction.
inline constexpr double kDistinctTol = 1e-8;
// expand() refuses polynomials whose total degree exceeds this.
inline constexpr int kDegreeCap = 10000;
// Slack on closed-unit-disk membership so phase rotations of boundary roots
// are not rejected by accumulated rounding.
inline constexpr double kUnitDiskSlack = 1e-12;

struct PrescribedRoot {
    Complex z;
    int mult = 1;
};

/// A polynomial (z-a)^n * prod_j (z-z_j)^{n_j} with a distinguished root a of
/// multiplicity n and k >= 1 further distinct roots z_j of multiplicity n_j.
///
/// In unit-disk mode (the default) all roots must lie in the closed unit
/// disk; off-mode lifts that restriction for experiments with |a-b| > 1
/// two-root configurations and unconstrained searches.
class FactoredPolynomial {
  public:
    FactoredPolynomial(Complex a, int n, std::vector<PrescribedRoot> others,
                       bool unit_disk = true);

    Complex a() const { return a_; }
    int n() const { return n_; }
    const std::vector<PrescribedRoot>& others() const { return others_; }
    int k() const { return static_cast<int>(others_.size()); }
    long long m() const { return m_; }  // total degree n + sum n_j
    bool unit_disk() const { return unit_disk_; }

  private:
    Complex a_;
    int n_;
    std::vector<PrescribedRoot> others_;
    long long m_ = 0;
    bool unit_disk_ = true;
};

/// Dense polynomial with complex coefficients in ascending powers.
/// Trailing zero coefficients are trimmed; at least one coefficient remains.
class CoefficientPolynomial {
  public:
    explicit CoefficientPolynomial(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex leading() const { return coeffs_.back(); }
    Complex operator[](std::size_t i) const { return coeffs_[i]; }

  private:
    std::vector<Complex> coeffs_;
};

/// The full multiset of critical points of a FactoredPolynomial: the
/// distinguished root with multiplicity n-1, each z_j with multiplicity
/// n_j-1, and the k free critical points w_1..w_k.  Total multiplicity m-1.
struct CriticalSet {
    Complex at_a;
    int a_mult = 0;                       // n - 1
    std::vector<PrescribedRoot> at_zj;    // (z_j, n_j - 1)
    std::vector<Complex> free;            // w_1..w_k, sorted by (re, im)
};

/// Monic expansion of the factored form; degree m.  Throws ValidationError
/// ("degree too large") beyond degree_cap.
CoefficientPolynomial expand(const FactoredPolynomial& fp, int degree_cap = kDegreeCap);

/// Formal derivative.  Degree-0 input has no derivative of interest and is
/// rejected.
CoefficientPolynomial derivative(const CoefficientPolynomial& cp);

/// The deflated derivative q: the degree-k polynomial with
///
///   q(z) = n prod_j (z-z_j) + (z-a) sum_j n_j prod_{i!=j} (z-z_i)
///        = m prod_j (z-w_j),
///
/// so that p'(z) = q(z) (z-a)^{n-1} prod_j (z-z_j)^{n_j-1}.  Built by
/// expanding the k+1 summands directly (never by expanding p and dividing),
/// so its cost is independent of the multiplicities and its leading
/// coefficient is exactly m.
CoefficientPolynomial deflated_derivative(const FactoredPolynomial& fp);

/// Horner evaluation.
Complex evaluate(const CoefficientPolynomial& cp, Complex z);

/// Product-form evaluation; no expansion.
Complex evaluate(const FactoredPolynomial& fp, Complex z);

/// p'(z) evaluated through the deflated-derivative factorization.
Complex derivative_value(const FactoredPolynomial& fp, Complex z);

/// Unit phase u with u*a real and nonnegative (u = 1 when a = 0).
Complex unit_phase(Complex a);

/// Rotate the whole configuration by the conjugate phase of a, making the
/// distinguished root real and nonnegative.  The reduction "we may take
/// 0 <= a <= 1" is applied only through this helper, never silently.
FactoredPolynomial canonicalize(const FactoredPolynomial& fp);

/// Integer power by repeated squaring (exponent >= 0).
Complex pow_int(Complex base, long long e);

/// Monic polynomial prod (z - r) over the given roots.
CoefficientPolynomial from_roots(std::span<const Complex> roots);

}  // namespace sendov
