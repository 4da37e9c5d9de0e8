#include "sendov/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace sendov {

namespace {

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Merge iterates closer than cluster_tol and re-polish the cluster mean with
// Newton on the (c-1)-th derivative, which has a simple root where cp has a
// multiplicity-c one.  The polish is kept only when it does not worsen the
// residual, so genuinely distinct-but-close roots are left alone.
void polish_clusters(const CoefficientPolynomial& cp, std::vector<Complex>& roots,
                     double cluster_tol) {
    const std::size_t n = roots.size();
    if (n < 2) return;

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(roots[i] - roots[j]) < cluster_tol) {
                parent[find(j)] = find(i);
            }
        }
    }
    for (std::size_t rep = 0; rep < n; ++rep) {
        if (find(rep) != rep) continue;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
            if (find(i) == rep) members.push_back(i);
        }
        const std::size_t c = members.size();
        if (c < 2) continue;

        Complex mean(0.0, 0.0);
        for (std::size_t i : members) mean += roots[i];
        mean /= static_cast<double>(c);

        CoefficientPolynomial g = cp;
        for (std::size_t t = 1; t < c; ++t) g = derivative(g);
        const CoefficientPolynomial gd = derivative(g);
        Complex x = mean;
        for (int it = 0; it < 40; ++it) {
            const Complex gv = evaluate(g, x);
            const Complex gdv = evaluate(gd, x);
            if (gdv == Complex(0.0, 0.0)) break;
            const Complex dx = gv / gdv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }

        double before = 0.0;
        for (std::size_t i : members) before = std::max(before, std::abs(evaluate(cp, roots[i])));
        const double after = std::abs(evaluate(cp, x));
        if (after <= before) {
            for (std::size_t i : members) roots[i] = x;
        }
    }
}

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex a, Complex b, Complex p) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace

RootResult all_roots(const CoefficientPolynomial& cp, const SolveOptions& opt) {
    const int deg = cp.degree();
    if (deg < 1) {
        throw ValidationError("root solve requires degree >= 1");
    }
    const auto& c = cp.coeffs();
    double scale = 0.0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    const double lead = std::abs(c.back());
    double inner = 0.0;
    for (int i = 0; i < deg; ++i) inner = std::max(inner, std::abs(c[static_cast<std::size_t>(i)]));
    const double radius = 1.0 + inner / lead;

    RootResult out;
    out.roots.resize(static_cast<std::size_t>(deg));
    constexpr double kAngleOffset = 0.4;  // breaks the symmetry of real-coefficient inputs
    for (int i = 0; i < deg; ++i) {
        const double ang = 2.0 * std::numbers::pi * i / deg + kAngleOffset;
        out.roots[static_cast<std::size_t>(i)] = radius * Complex(std::cos(ang), std::sin(ang));
    }

    const CoefficientPolynomial dp = derivative(cp);
    int sweeps = 0;
    while (sweeps < opt.max_iter) {
        ++sweeps;
        double max_update = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex& w = out.roots[static_cast<std::size_t>(i)];
            const Complex pv = evaluate(cp, w);
            if (pv == Complex(0.0, 0.0)) continue;
            const Complex dv = evaluate(dp, w);
            Complex step;
            if (dv == Complex(0.0, 0.0)) {
                // stationary point of cp; kick deterministically off it
                step = Complex(-1e-3 * radius, -1e-3 * radius);
            } else {
                const Complex ratio = pv / dv;
                Complex s(0.0, 0.0);
                for (int j = 0; j < deg; ++j) {
                    if (j == i) continue;
                    const Complex d = w - out.roots[static_cast<std::size_t>(j)];
                    if (d != Complex(0.0, 0.0)) s += 1.0 / d;
                }
                const Complex denom = Complex(1.0, 0.0) - ratio * s;
                step = (denom == Complex(0.0, 0.0)) ? ratio : ratio / denom;
            }
            w -= step;
            max_update = std::max(max_update, std::abs(step));
        }
        if (max_update < opt.tol) break;
    }
    out.iterations = sweeps;

    polish_clusters(cp, out.roots, opt.cluster_tol);

    out.residuals.resize(static_cast<std::size_t>(deg));
    bool ok = true;
    for (int i = 0; i < deg; ++i) {
        const double r = std::abs(evaluate(cp, out.roots[static_cast<std::size_t>(i)]));
        out.residuals[static_cast<std::size_t>(i)] = r;
        ok = ok && r <= opt.residual_tol * scale;
    }
    out.converged = ok;
    return out;
}

std::vector<Complex> free_critical_points(const FactoredPolynomial& fp, const SolveOptions& opt) {
    const CoefficientPolynomial q = deflated_derivative(fp);
    RootResult rr = all_roots(q, opt);
    if (!rr.converged) {
        double worst = 0.0;
        for (double r : rr.residuals) worst = std::max(worst, r);
        throw ConvergenceError("free critical point solve did not converge (max residual " +
                               std::to_string(worst) + " after " + std::to_string(rr.iterations) +
                               " iterations)");
    }
    std::sort(rr.roots.begin(), rr.roots.end(), lex_less);
    return rr.roots;
}

CriticalSet critical_set(const FactoredPolynomial& fp, const SolveOptions& opt) {
    CriticalSet cs;
    cs.at_a = fp.a();
    cs.a_mult = fp.n() - 1;
    cs.at_zj.reserve(fp.others().size());
    for (const auto& pr : fp.others()) {
        cs.at_zj.push_back({pr.z, pr.mult - 1});
    }
    cs.free = free_critical_points(fp, opt);
    return cs;
}

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<Complex> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double distance_to_hull(std::span<const Complex> hull, Complex p) {
    if (hull.empty()) return std::numeric_limits<double>::infinity();
    if (hull.size() == 1) return std::abs(p - hull[0]);
    if (hull.size() == 2) return segment_distance(hull[0], hull[1], p);

    bool inside = true;
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Complex a = hull[i];
        const Complex b = hull[(i + 1) % hull.size()];
        dmin = std::min(dmin, segment_distance(a, b, p));
        if (cross(a, b, p) < 0.0) inside = false;  // hull is counter-clockwise
    }
    return inside ? 0.0 : dmin;
}

bool gauss_lucas_check(const FactoredPolynomial& fp, std::span<const Complex> points,
                       double tol) {
    if (points.empty()) {
        throw ValidationError("gauss_lucas_check requires at least one point");
    }
    std::vector<Complex> vertices;
    vertices.reserve(fp.others().size() + 1);
    vertices.push_back(fp.a());
    for (const auto& pr : fp.others()) vertices.push_back(pr.z);
    const std::vector<Complex> hull = convex_hull(std::move(vertices));
    for (Complex p : points) {
        if (distance_to_hull(hull, p) > tol) return false;
    }
    return true;
}

}  // namespace sendov
