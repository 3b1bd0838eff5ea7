#ifndef LOSC_SPECFUN_HPP
#define LOSC_SPECFUN_HPP

// Scalar special-function kernels: Pochhammer symbols, double factorials,
// the Gauss hypergeometric series 2F1 inside the unit disk, Legendre
// polynomials P_n, fractional-degree Legendre functions P_nu on (-1, 1],
// and the complete elliptic integrals K, E, D.
//
// Everything here is a pure function of its arguments, double precision.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "losc/errors.hpp"

namespace losc::specfun {

using complex = std::complex<double>;

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
/// Computed as a running product; exact for the moderate n used here and
/// free of the Gamma-ratio cancellation issues near poles.
inline double pochhammer(double a, int n) {
    if (n < 0) throw domain_error("pochhammer: n must be >= 0");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

/// n!! with the conventions (-1)!! = 0!! = 1.
inline double double_factorial(int n) {
    if (n < -1) throw domain_error("double_factorial: n must be >= -1");
    double p = 1.0;
    for (int k = n; k > 1; k -= 2) p *= k;
    return p;
}

struct SeriesControl {
    double tol = 1e-15;     // relative tolerance on the truncated tail
    int max_terms = 200000; // hard cap on the number of series terms
};

struct Hyp2f1Result {
    complex value;
    int terms = 0; // number of series terms actually summed
};

namespace detail {

inline bool is_nonpositive_int(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace detail

/// Gauss hypergeometric series 2F1(a, b; c; z) for |z| < 1.
///
/// Terms are accumulated through the ratio recurrence
///   t_{n+1} = t_n * (a+n)(b+n) / ((c+n)(1+n)) * z.
/// Once the term ratio modulus is bounded by some q < 1 the remaining tail
/// is bounded by |t| q/(1-q), which is the stopping criterion. A nonpositive
/// integer a or b terminates the series exactly.
inline Hyp2f1Result hyp2f1_full(double a, double b, double c, complex z,
                                SeriesControl ctl = {}) {
    if (detail::is_nonpositive_int(c)) {
        // A terminating numerator could in principle rescue this, but no
        // caller in this library needs that case.
        throw domain_error("hyp2f1: c is a nonpositive integer");
    }
    if (std::abs(z) >= 1.0)
        throw domain_error("hyp2f1: |z| >= 1 outside the series disk");
    if (!(ctl.tol > 0.0) || ctl.max_terms < 1)
        throw domain_error("hyp2f1: invalid SeriesControl");

    complex sum = 1.0;
    complex term = 1.0;
    const double az = std::abs(z);
    for (int n = 0; n < ctl.max_terms; ++n) {
        if (a + n == 0.0 || b + n == 0.0) return {sum, n + 1};  // polynomial case
        term *= (a + n) * (b + n) / ((c + n) * (1.0 + n)) * z;
        sum += term;
        // For n past the parameters the ratio modulus is below
        // az * (1 + s/(n+1)) with s = |a| + |b|; require that bound < 1.
        const double s = std::abs(a) + std::abs(b);
        const double q = az * (1.0 + s / (n + 2.0));
        if (q < 1.0) {
            const double tail = std::abs(term) * q / (1.0 - q);
            if (tail <= ctl.tol * std::max(1.0, std::abs(sum))) return {sum, n + 2};
        }
    }
    throw no_convergence("hyp2f1: max_terms exceeded at |z| = " + std::to_string(az));
}

inline complex hyp2f1(double a, double b, double c, complex z, SeriesControl ctl = {}) {
    return hyp2f1_full(a, b, c, z, ctl).value;
}

inline double hyp2f1(double a, double b, double c, double z, SeriesControl ctl = {}) {
    return hyp2f1_full(a, b, c, complex(z, 0.0), ctl).value.real();
}

/// Legendre polynomial P_n(x) by the three-term recurrence
/// (2k+1) x P_k = (k+1) P_{k+1} + k P_{k-1}, seeded P_0 = 1, P_{-1} = 0.
inline double legendre_p(int n, double x) {
    if (n < 0) throw domain_error("legendre_p: n must be >= 0");
    double pkm1 = 0.0;  // P_{-1}
    double pk = 1.0;    // P_0
    for (int k = 0; k < n; ++k) {
        const double pkp1 = ((2 * k + 1) * x * pk - k * pkm1) / (k + 1);
        pkm1 = pk;
        pk = pkp1;
    }
    return pk;
}

/// P_n(x) from the explicit finite sum
///   sum_m (-1)^m (2n-2m)! / (2^n m! (n-m)! (n-2m)!) x^(n-2m),  m = 0..floor(n/2).
/// Independent of the recurrence route. The coefficients reach ~1e11 at
/// n = 20 while the result stays below 1, so the cancellation is absorbed in
/// extended precision.
inline double legendre_p_explicit(int n, double x) {
    if (n < 0) throw domain_error("legendre_p_explicit: n must be >= 0");
    const long double two_n = std::pow(2.0L, n);
    const long double xl = x;
    long double sum = 0.0L;
    for (int m = 0; m <= n / 2; ++m) {
        const long double num = std::tgammal(2.0L * (n - m) + 1.0L);
        const long double den = two_n * std::tgammal(m + 1.0L) *
                                std::tgammal(n - m + 1.0L) *
                                std::tgammal(n - 2.0L * m + 1.0L);
        const long double coeff = ((m % 2 == 0) ? 1.0L : -1.0L) * num / den;
        sum += coeff * std::pow(xl, n - 2 * m);
    }
    return static_cast<double>(sum);
}

struct EllipticTriple {
    double k;  // modulus in [0, 1)
    double K;  // complete integral of the first kind
    double E;  // complete integral of the second kind
    double D;  // integral of sin^2 t / sqrt(1 - k^2 sin^2 t); D = (K - E)/k^2
};

/// Complete elliptic integrals K(k), E(k) and D(k) = (K - E)/k^2 by the
/// arithmetic-geometric mean. k very close to 1 is rejected: K diverges
/// logarithmically and no finite triple is meaningful there.
inline EllipticTriple complete_elliptic(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw domain_error("complete_elliptic: modulus must satisfy 0 <= k < 1");
    const double m = k * k;
    if (1.0 - m < 1e-14)
        throw no_convergence("complete_elliptic: k too close to 1, K(k) diverges");

    const double pi = std::numbers::pi;
    if (k == 0.0) return {0.0, pi / 2, pi / 2, pi / 4};

    // AGM with the E-correction sum: c_0 = k, c_{j+1} = (a_j - g_j)/2,
    // E = K (1 - sum 2^{j-1} c_j^2).
    double a = 1.0;
    double g = std::sqrt(1.0 - m);
    double csum = 0.5 * m;  // 2^{-1} c_0^2
    double pow2 = 1.0;
    for (int it = 0; it < 64; ++it) {
        const double c = 0.5 * (a - g);
        const double an = 0.5 * (a + g);
        const double gn = std::sqrt(a * g);
        pow2 *= 2.0;
        csum += 0.5 * pow2 * c * c;
        a = an;
        g = gn;
        if (std::abs(a - g) <= a * std::numeric_limits<double>::epsilon()) break;
    }
    const double K = pi / (2.0 * a);
    const double E = K * (1.0 - csum);
    return {k, K, E, (K - E) / m};
}

namespace detail {

// Ferrers functions of half-integer degree through complete elliptic
// integrals (modulus sin(theta/2), x = cos theta):
//   P_{-1/2}(x) = (2/pi) K,   P_{1/2}(x) = (2/pi) (2E - K),
// then upward in degree via (2nu+1) x P_nu = (nu+1) P_{nu+1} + nu P_{nu-1}.
// This route stays accurate arbitrarily close to x = -1 where the direct
// hypergeometric series needs O(1/(1+x)) terms.
inline double legendre_half_integer_elliptic(int half_steps, double x) {
    const double ksq = 0.5 * (1.0 - x);  // sin^2(theta/2)
    const double k = std::sqrt(ksq);
    const EllipticTriple ell = complete_elliptic(k);
    const double two_over_pi = 2.0 / std::numbers::pi;
    double pm = two_over_pi * ell.K;                       // P_{-1/2}
    double p = two_over_pi * (2.0 * ell.E - ell.K);        // P_{+1/2}
    for (int i = 0; i < half_steps; ++i) {
        const double nu = i + 0.5;
        const double pn = ((2.0 * nu + 1.0) * x * p - nu * pm) / (nu + 1.0);
        pm = p;
        p = pn;
    }
    return p;
}

}  // namespace detail

/// Legendre function of the first kind P_nu(x) on (-1, 1],
/// P_nu(x) = 2F1(-nu, nu+1; 1; (1-x)/2).
///
/// The series argument (1-x)/2 approaches 1 as x -> -1, where convergence
/// collapses (P_nu has a logarithmic singularity there for non-integer nu).
/// Integer nu falls back to the polynomial recurrence; half-integer nu >= 1/2
/// switches to the elliptic-integral representation for x < -0.05. Other
/// degrees use the direct series and report no_convergence if the budget
/// runs out. A small excursion past x = 1 is accepted (the series form
/// continues analytically); symmetric differences through x = 1 rely on it.
inline double legendre_p_nu(double nu, double x, SeriesControl ctl = {}) {
    if (!(x > -1.0) || x > 1.0 + 1e-3)
        throw domain_error("legendre_p_nu: x must lie in (-1, 1]");
    if (nu >= 0.0 && nu == std::floor(nu)) return legendre_p(static_cast<int>(nu), x);

    const bool half_integer = (nu > 0.0) && (std::floor(nu + 0.5) == nu + 0.5);
    if (half_integer && x < -0.05)
        return detail::legendre_half_integer_elliptic(static_cast<int>(nu - 0.5), x);
    return hyp2f1(-nu, nu + 1.0, 1.0, 0.5 * (1.0 - x), ctl);
}

}  // namespace losc::specfun

#endif  // LOSC_SPECFUN_HPP
