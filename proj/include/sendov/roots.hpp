#pragma once

#include <span>
#include <vector>

#include "sendov/poly.hpp"

namespace sendov {

struct SolveOptions {
    double tol = 1e-12;          // stop once the largest component update is below this
    double residual_tol = 1e-9;  // converged iff every |p(root)| <= residual_tol * max|coeff|
    int max_iter = 200;
    double cluster_tol = 1e-6;   // iterates closer than this are treated as one multiple root
};

struct RootResult {
    std::vector<Complex> roots;      // length = degree, multiple roots repeated
    std::vector<double> residuals;   // |poly(root)|
    int iterations = 0;
    bool converged = false;
};

/// All roots of cp by Aberth-Ehrlich simultaneous iteration.  Initial guesses
/// sit on a circle of radius 1 + max|c_i|/|c_deg|, angularly offset by 0.4
/// radians to break symmetry.  Deterministic: identical inputs and options
/// give bitwise-identical results.  Non-convergence is reported through the
/// flag, not an exception; the best iterate is returned either way.
RootResult all_roots(const CoefficientPolynomial& cp, const SolveOptions& opt = {});

/// The k free critical points w_1..w_k (roots of the deflated derivative),
/// sorted by (re, im).  Throws ConvergenceError if the solve does not
/// converge.
std::vector<Complex> free_critical_points(const FactoredPolynomial& fp,
                                          const SolveOptions& opt = {});

/// Assembles the complete critical multiset of fp.
CriticalSet critical_set(const FactoredPolynomial& fp, const SolveOptions& opt = {});

/// Convex hull by monotone chain; counter-clockwise, collinear points
/// dropped.  Degenerate inputs give a segment or a single point.
std::vector<Complex> convex_hull(std::vector<Complex> pts);

/// Euclidean distance from p to the hull (0 inside).
double distance_to_hull(std::span<const Complex> hull, Complex p);

/// True iff every point lies within distance tol of the convex hull of
/// {a} union {z_j}.
bool gauss_lucas_check(const FactoredPolynomial& fp, std::span<const Complex> points,
                       double tol);

}  // namespace sendov
