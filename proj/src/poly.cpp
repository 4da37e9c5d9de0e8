#include "sendov/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace sendov {

namespace {

// Multiply by the monic linear factor (z - root) in place.
void mul_linear(std::vector<Complex>& c, Complex root) {
    c.push_back(Complex(0.0, 0.0));
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        c[i] = c[i - 1] - root * c[i];
    }
    c[0] = -root * c[0];
}

}  // namespace

FactoredPolynomial::FactoredPolynomial(Complex a, int n, std::vector<PrescribedRoot> others,
                                       bool unit_disk)
    : a_(a), n_(n), others_(std::move(others)), unit_disk_(unit_disk) {
    if (n_ < 1) {
        throw ValidationError("multiplicity n of the distinguished root must be >= 1");
    }
    if (others_.empty()) {
        throw ValidationError("at least one other root is required (k >= 1)");
    }
    long long m = n_;
    for (std::size_t j = 0; j < others_.size(); ++j) {
        if (others_[j].mult < 1) {
            throw ValidationError("multiplicity n_" + std::to_string(j + 1) + " must be >= 1");
        }
        m += others_[j].mult;
    }
    m_ = m;
    for (std::size_t j = 0; j < others_.size(); ++j) {
        if (std::abs(others_[j].z - a_) < kDistinctTol) {
            throw ValidationError("z_" + std::to_string(j + 1) +
                                  " coincides with the distinguished root a");
        }
        for (std::size_t i = j + 1; i < others_.size(); ++i) {
            if (std::abs(others_[j].z - others_[i].z) < kDistinctTol) {
                throw ValidationError("z_" + std::to_string(j + 1) + " and z_" +
                                      std::to_string(i + 1) + " are not distinct");
            }
        }
    }
    if (unit_disk_) {
        if (std::abs(a_) > 1.0 + kUnitDiskSlack) {
            throw ValidationError("unit-disk mode requires |a| <= 1");
        }
        for (std::size_t j = 0; j < others_.size(); ++j) {
            if (std::abs(others_[j].z) > 1.0 + kUnitDiskSlack) {
                throw ValidationError("unit-disk mode requires |z_" + std::to_string(j + 1) +
                                      "| <= 1");
            }
        }
    }
}

CoefficientPolynomial::CoefficientPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw ValidationError("a polynomial needs at least one coefficient");
    }
    while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0, 0.0)) {
        coeffs_.pop_back();
    }
}

CoefficientPolynomial expand(const FactoredPolynomial& fp, int degree_cap) {
    if (fp.m() > degree_cap) {
        throw ValidationError("degree too large: m = " + std::to_string(fp.m()) +
                              " exceeds cap " + std::to_string(degree_cap));
    }
    std::vector<Complex> c;
    c.reserve(static_cast<std::size_t>(fp.m()) + 1);
    c.push_back(Complex(1.0, 0.0));
    for (int t = 0; t < fp.n(); ++t) {
        mul_linear(c, fp.a());
    }
    for (const auto& pr : fp.others()) {
        for (int t = 0; t < pr.mult; ++t) {
            mul_linear(c, pr.z);
        }
    }
    return CoefficientPolynomial(std::move(c));
}

CoefficientPolynomial derivative(const CoefficientPolynomial& cp) {
    if (cp.degree() < 1) {
        throw ValidationError("constant has no derivative of interest");
    }
    const auto& c = cp.coeffs();
    std::vector<Complex> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        d[i - 1] = c[i] * static_cast<double>(i);
    }
    return CoefficientPolynomial(std::move(d));
}

CoefficientPolynomial deflated_derivative(const FactoredPolynomial& fp) {
    const auto& zs = fp.others();
    const std::size_t k = zs.size();

    // n * prod_j (z - z_j)
    std::vector<Complex> q = {Complex(static_cast<double>(fp.n()), 0.0)};
    q.reserve(k + 1);
    for (const auto& pr : zs) {
        mul_linear(q, pr.z);
    }

    // sum_j n_j * prod_{i != j} (z - z_i), then times (z - a)
    std::vector<Complex> s(k, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Complex> pj = {Complex(static_cast<double>(zs[j].mult), 0.0)};
        pj.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (i != j) {
                mul_linear(pj, zs[i].z);
            }
        }
        for (std::size_t i = 0; i < pj.size(); ++i) {
            s[i] += pj[i];
        }
    }
    mul_linear(s, fp.a());

    for (std::size_t i = 0; i < s.size(); ++i) {
        q[i] += s[i];
    }
    // Leading term sums the exact integers n and sum n_j, so q[k] == m.
    return CoefficientPolynomial(std::move(q));
}

Complex evaluate(const CoefficientPolynomial& cp, Complex z) {
    const auto& c = cp.coeffs();
    Complex acc = c.back();
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        acc = acc * z + c[i - 1];
    }
    return acc;
}

Complex evaluate(const FactoredPolynomial& fp, Complex z) {
    Complex acc = pow_int(z - fp.a(), fp.n());
    for (const auto& pr : fp.others()) {
        acc *= pow_int(z - pr.z, pr.mult);
    }
    return acc;
}

Complex derivative_value(const FactoredPolynomial& fp, Complex z) {
    Complex acc = evaluate(deflated_derivative(fp), z);
    acc *= pow_int(z - fp.a(), fp.n() - 1);
    for (const auto& pr : fp.others()) {
        acc *= pow_int(z - pr.z, pr.mult - 1);
    }
    return acc;
}

Complex unit_phase(Complex a) {
    const double r = std::abs(a);
    return r == 0.0 ? Complex(1.0, 0.0) : std::conj(a) / r;
}

FactoredPolynomial canonicalize(const FactoredPolynomial& fp) {
    const Complex u = unit_phase(fp.a());
    std::vector<PrescribedRoot> rotated;
    rotated.reserve(fp.others().size());
    for (const auto& pr : fp.others()) {
        rotated.push_back({u * pr.z, pr.mult});
    }
    return FactoredPolynomial(Complex(std::abs(fp.a()), 0.0), fp.n(), std::move(rotated),
                              fp.unit_disk());
}

Complex pow_int(Complex base, long long e) {
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    return acc;
}

CoefficientPolynomial from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c = {Complex(1.0, 0.0)};
    c.reserve(roots.size() + 1);
    for (Complex r : roots) {
        mul_linear(c, r);
    }
    return CoefficientPolynomial(std::move(c));
}

}  // namespace sendov
