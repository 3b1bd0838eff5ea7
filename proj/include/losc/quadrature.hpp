#ifndef LOSC_QUADRATURE_HPP
#define LOSC_QUADRATURE_HPP

// Adaptive numerical integration on finite intervals. Supports integrable
// endpoint singularities (the rules are open, endpoints are never sampled)
// and weight distributions made of a smooth density plus point atoms.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "losc/errors.hpp"
#include "losc/specfun.hpp"

namespace losc::quadrature {

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
};

/// A point mass carried alongside a smooth density.
struct WeightAtom {
    double location;
    double mass;
};

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1), symmetric, ascending
    std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule, computed by Newton iteration on P_n with the
/// usual Chebyshev-like initial guesses. Nodes are interior to (-1, 1).
inline GaussRule gauss_legendre(int n) {
    if (n < 1) throw domain_error("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::numbers::pi;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (n - i - 0.25) / (n + 0.5));  // ascending order
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            const double p = specfun::legendre_p(n, x);
            const double pm = specfun::legendre_p(n - 1, x);
            dp = n * (x * p - pm) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // polish once more for the weight formula
        const double p = specfun::legendre_p(n, x);
        const double pm = specfun::legendre_p(n - 1, x);
        dp = n * (x * p - pm) / (x * x - 1.0);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

namespace detail {

inline const GaussRule& rule7() {
    static const GaussRule r = gauss_legendre(7);
    return r;
}
inline const GaussRule& rule15() {
    static const GaussRule r = gauss_legendre(15);
    return r;
}

struct Interval {
    double a, b;
    double value;  // G15 estimate
    double err;    // |G15 - G7|
};

template <class F>
Interval evaluate_interval(const F& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double g7 = 0.0, g15 = 0.0;
    const GaussRule& r7 = rule7();
    const GaussRule& r15 = rule15();
    for (std::size_t i = 0; i < r15.nodes.size(); ++i) {
        const double x = mid + half * r15.nodes[i];
        const double fx = f(x);
        if (!std::isfinite(fx))
            throw non_finite_error("integrate: non-finite integrand value at x = " +
                                   std::to_string(x));
        g15 += r15.weights[i] * fx;
    }
    for (std::size_t i = 0; i < r7.nodes.size(); ++i) {
        const double x = mid + half * r7.nodes[i];
        const double fx = f(x);
        if (!std::isfinite(fx))
            throw non_finite_error("integrate: non-finite integrand value at x = " +
                                   std::to_string(x));
        g7 += r7.weights[i] * fx;
    }
    evals += 22;
    g15 *= half;
    g7 *= half;
    return {a, b, g15, std::abs(g15 - g7)};
}

}  // namespace detail

/// Adaptive integration of f over [a, b] by interval bisection with an
/// embedded 7/15-point Gauss pair as the local error estimate. The target is
/// err <= tol * max(1, |value|); the evaluation budget caps the work. The
/// endpoints a and b are never sampled, so integrable endpoint singularities
/// are allowed. The final sum runs left to right for deterministic output.
inline QuadratureResult integrate(const std::function<double(double)>& f, double a,
                                  double b, double tol, long max_evals = 1000000) {
    if (!(a < b)) throw domain_error("integrate: requires a < b");
    if (!(tol > 0.0)) throw domain_error("integrate: tol must be positive");

    long evals = 0;
    std::vector<detail::Interval> segs;
    segs.push_back(detail::evaluate_interval(f, a, b, evals));

    auto totals = [&segs]() {
        double v = 0.0, e = 0.0;
        for (const auto& s : segs) {
            v += s.value;
            e += s.err;
        }
        return std::pair{v, e};
    };

    while (true) {
        auto [value, err] = totals();
        if (err <= tol * std::max(1.0, std::abs(value))) break;
        if (evals + 44 > max_evals)
            throw no_convergence("integrate: evaluation budget exhausted, err = " +
                                 std::to_string(err));
        // split the interval with the largest error estimate; ties resolve to
        // the leftmost so the refinement order is deterministic
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        const detail::Interval seg = segs[worst];
        const double mid = 0.5 * (seg.a + seg.b);
        if (!(seg.a < mid && mid < seg.b))
            throw no_convergence("integrate: interval underflow near x = " +
                                 std::to_string(seg.a));
        segs[worst] = detail::evaluate_interval(f, seg.a, mid, evals);
        segs.push_back(detail::evaluate_interval(f, mid, seg.b, evals));
    }

    std::sort(segs.begin(), segs.end(),
              [](const detail::Interval& u, const detail::Interval& v) { return u.a < v.a; });
    QuadratureResult out;
    for (const auto& s : segs) {
        out.value += s.value;
        out.err_estimate += s.err;
    }
    out.evaluations = evals;
    return out;
}

/// Integral of integrand(t) against a weight made of a smooth density plus
/// point atoms: quadrature of integrand*density over [a, b] plus the exact
/// sum of mass * integrand(location) over the atoms.
inline QuadratureResult integrate_with_atoms(const std::function<double(double)>& density,
                                             const std::vector<WeightAtom>& atoms,
                                             double a, double b, double tol,
                                             const std::function<double(double)>& integrand,
                                             long max_evals = 1000000) {
    for (const auto& atom : atoms) {
        if (!(atom.location >= a && atom.location <= b))
            throw domain_error("integrate_with_atoms: atom outside [a, b]");
        if (!std::isfinite(atom.mass))
            throw domain_error("integrate_with_atoms: atom mass not finite");
    }
    QuadratureResult r =
        integrate([&](double t) { return integrand(t) * density(t); }, a, b, tol, max_evals);
    for (const auto& atom : atoms) r.value += atom.mass * integrand(atom.location);
    return r;
}

}  // namespace losc::quadrature

#endif  // LOSC_QUADRATURE_HPP
