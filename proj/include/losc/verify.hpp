#ifndef LOSC_VERIFY_HPP
#define LOSC_VERIFY_HPP

// Machine verification of every identity the library implements: operator
// algebra, moment problems behind both resolutions of identity, closed-form
// overlaps and wavefunctions, photon statistics. Hard checks carry pinned
// tolerances; cross-checks of printed closed forms that deviate are reported
// as errata findings and never fail a run.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "losc/bg_states.hpp"
#include "losc/gk_states.hpp"
#include "losc/oscillator.hpp"
#include "losc/quadrature.hpp"
#include "losc/report.hpp"
#include "losc/specfun.hpp"

namespace losc::verify {

using complex = std::complex<double>;

struct Report {
    std::vector<CheckResult> checks;   // hard assertions
    std::vector<CheckResult> errata;   // documented deviations, informational
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline CheckResult make(const std::string& name, double computed, double expected,
                        double tol, const std::string& note = {}) {
    CheckResult c;
    c.name = name;
    c.computed = computed;
    c.expected = expected;
    c.rel_err = relative_error(computed, expected);
    c.passed = c.rel_err <= tol;
    c.note = note;
    return c;
}

inline CheckResult failure(const std::string& name, const std::string& note) {
    CheckResult c;
    c.name = name;
    c.passed = false;
    c.rel_err = std::numeric_limits<double>::quiet_NaN();
    c.note = note;
    return c;
}

}  // namespace detail

/// Special-function identities: recurrence vs explicit sum, orthonormality,
/// the generating function, the two P_nu evaluation routes, the elliptic
/// D = (K-E)/k^2 identity, and series termination at integer degree.
inline std::vector<CheckResult> specfun_suite() {
    std::vector<CheckResult> out;

    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        for (int i = 0; i <= 40; ++i) {
            const double x = -1.0 + 2.0 * i / 40.0;
            const double a = specfun::legendre_p(n, x);
            const double b = specfun::legendre_p_explicit(n, x);
            worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
        }
    out.push_back(detail::make("legendre recurrence vs explicit sum (n<=20, 41 pts)",
                               worst, 0.0, 1e-12));

    {
        const auto rule = quadrature::gauss_legendre(16);
        double dev = 0.0;
        for (int n = 0; n <= 15; ++n)
            for (int m = n; m <= 15; ++m) {
                double ip = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    const double x = rule.nodes[i];
                    ip += 0.5 * rule.weights[i] * std::sqrt(2.0 * n + 1.0) *
                          std::sqrt(2.0 * m + 1.0) * specfun::legendre_p(n, x) *
                          specfun::legendre_p(m, x);
                }
                dev = std::max(dev, std::abs(ip - (n == m ? 1.0 : 0.0)));
            }
        out.push_back(detail::make("orthonormality of psi_n (n,m<=15, Gauss rule)",
                                   dev, 0.0, 1e-10));
    }

    {
        // generating function at gamma = 3/2 on |x| <= 0.9, |z| <= 0.3
        double worst_gf = 0.0;
        for (int ix = 0; ix <= 6; ++ix)
            for (int iz = 0; iz <= 6; ++iz) {
                const double x = -0.9 + 0.3 * ix;
                const double z = -0.3 + 0.1 * iz;
                if (std::abs(z) < 1e-9) continue;
                double lhs = 0.0;
                double coeff = 1.0;  // (3/2)_n / n!
                for (int n = 0; n < 60; ++n) {
                    lhs += coeff * specfun::legendre_p(n, x) * std::pow(z, n);
                    coeff *= (1.5 + n) / (n + 1.0);
                }
                const double rhs =
                    std::pow(1.0 - x * z, -1.5) *
                    specfun::hyp2f1(0.75, 1.25, 1.0,
                                    (x * x - 1.0) * z * z / ((1.0 - x * z) * (1.0 - x * z)));
                worst_gf = std::max(worst_gf, std::abs(lhs - rhs));
            }
        out.push_back(detail::make("generating function (gamma=3/2)", worst_gf, 0.0, 1e-9));
    }

    {
        // elliptic route vs direct series for P_{1/2}, P_{3/2} on x in [-0.5, 0]
        double worst_nu = 0.0;
        for (double nu : {0.5, 1.5})
            for (int i = 0; i <= 10; ++i) {
                const double x = -0.5 + 0.05 * i;
                const double series = specfun::hyp2f1(-nu, nu + 1.0, 1.0, 0.5 * (1.0 - x));
                const double ell =
                    specfun::detail::legendre_half_integer_elliptic(
                        static_cast<int>(nu - 0.5), x);
                worst_nu = std::max(worst_nu, std::abs(series - ell));
            }
        out.push_back(detail::make("P_nu elliptic vs series routes on [-0.5, 0]",
                                   worst_nu, 0.0, 1e-12));
    }

    {
        double worst_d = 0.0;
        for (int i = 1; i <= 9; ++i) {
            const auto e = specfun::complete_elliptic(0.1 * i);
            worst_d = std::max(worst_d,
                               std::abs(e.D - (e.K - e.E) / (e.k * e.k)) / e.D);
        }
        out.push_back(detail::make("elliptic identity D = (K-E)/k^2", worst_d, 0.0, 1e-12));
    }

    {
        // terminating hypergeometric series: P_n(x) = 2F1(-n, n+1; 1; (1-x)/2)
        const auto r = specfun::hyp2f1_full(-6.0, 7.0, 1.0, complex(0.5 * (1.0 - 0.3), 0.0));
        const double poly = specfun::legendre_p(6, 0.3);
        auto c = detail::make("2F1 termination at integer degree (n=6)",
                              r.value.real(), poly, 1e-13);
        c.note = "terminated after " + std::to_string(r.terms) + " terms";
        c.passed = c.passed && r.terms == 7;
        out.push_back(c);
    }

    return out;
}

/// Operator algebra on the truncated matrices, interior indices only.
inline std::vector<CheckResult> operator_suite(int dim = 16) {
    std::vector<CheckResult> out;
    namespace osc = oscillator;
    const auto x = osc::position_operator(dim);
    const auto p = osc::momentum_operator(dim);
    const auto [raise, lower] = osc::ladder_operators(dim);
    const complex i_unit(0.0, 1.0);

    {
        double worst = 0.0;
        const auto lhs = (x - i_unit * p) / std::numbers::sqrt2;
        worst = (lhs - raise).cwiseAbs().maxCoeff();
        const auto lhs2 = (x + i_unit * p) / std::numbers::sqrt2;
        worst = std::max(worst, (lhs2 - lower).cwiseAbs().maxCoeff());
        out.push_back(detail::make("ladder operators equal (X -/+ iP)/sqrt(2)",
                                   worst, 0.0, 1e-15));
    }

    {
        const auto h1 = x * x + p * p;
        const auto h2 = raise * lower + lower * raise;
        double worst = 0.0;
        for (int r = 0; r + 1 < dim; ++r)
            for (int c = 0; c + 1 < dim; ++c)
                worst = std::max(worst, std::abs(h1(r, c) - h2(r, c)));
        out.push_back(detail::make("H = X^2 + P^2 equals a+a- + a-a+ (interior)",
                                   worst, 0.0, 1e-14));

        double worst_diag = 0.0;
        for (int n = 0; n + 1 < dim; ++n)
            worst_diag = std::max(
                worst_diag, std::abs(h2(n, n) - osc::hamiltonian_eigenvalue(n)));
        out.push_back(detail::make("H diagonal matches its eigenvalue formula (interior)",
                                   worst_diag, 0.0, 1e-14,
                                   "lambda_0 = 2/3, lambda_1 = 6/5"));
    }

    {
        const auto lhs = lower * raise - raise * lower;
        const auto rhs = (x * p - p * x) / i_unit;
        double worst = 0.0;
        for (int r = 0; r + 1 < dim; ++r)
            for (int c = 0; c + 1 < dim; ++c)
                worst = std::max(worst, std::abs(lhs(r, c) - rhs(r, c)));
        out.push_back(detail::make("[a-, a+] = (1/i)[X, P] (interior)", worst, 0.0, 1e-14));
    }

    {
        const auto diag = osc::commutator_diagonal(dim);
        double worst = 0.0;
        for (int n = 0; n + 1 < dim; ++n) {
            const double bn = osc::recurrence_b(n);
            const double bm = n > 0 ? osc::recurrence_b(n - 1) : 0.0;
            const complex expect(0.0, 2.0 * (bn * bn - bm * bm));
            worst = std::max(worst, std::abs(diag[n] - expect));
        }
        out.push_back(detail::make("[X, P] diagonal = 2i(b_n^2 - b_{n-1}^2) (interior)",
                                   worst, 0.0, 1e-14));
    }

    {
        // spectrum distinctness, needed by the gamma-average reduction
        double min_gap = 1.0;
        const auto lam = osc::spectrum(osc::SpectrumConvention::gazeau_klauder, 31);
        for (int n = 0; n <= 30; ++n)
            for (int m = n + 1; m <= 30; ++m)
                min_gap = std::min(min_gap, std::abs(lam[n] - lam[m]));
        auto c = detail::make("GK spectrum distinct (n <= 30)", min_gap > 0.0 ? 1.0 : 0.0,
                              1.0, 0.0);
        c.note = "min gap = " + std::to_string(min_gap);
        out.push_back(c);
    }

    return out;
}

/// Barut-Girardello identities: eigenvector property, normalization,
/// wavefunction closed form, moment problem, overlap kernel, Le.36 norm.
inline std::vector<CheckResult> bg_suite(int dim = 128, double quad_tol = 1e-8) {
    std::vector<CheckResult> out;

    {
        // a-|z> = z|z> residual, interior components (the boundary row is a
        // truncation artifact; its size is checked against the tail bound)
        double worst_interior = 0.0;
        double worst_boundary_ratio = 0.0;
        try {
            for (double az : {0.1, 0.3, 0.5, 0.6}) {
                const auto state = bg::coherent_state(complex(az, 0.0), dim);
                const auto [raise, lower] = oscillator::ladder_operators(dim);
                const Eigen::VectorXcd resid =
                    lower * state.amplitudes - state.z * state.amplitudes;
                double interior = 0.0;
                for (int n = 0; n + 1 < dim; ++n) interior += std::norm(resid(n));
                worst_interior = std::max(worst_interior, std::sqrt(interior));
                const double boundary = std::abs(resid(dim - 1));
                const double bound = std::abs(state.z * state.amplitudes(dim - 1));
                worst_boundary_ratio =
                    std::max(worst_boundary_ratio, boundary / (10.0 * bound + 1e-300));
            }
            auto c = detail::make("BG eigenvector residual (interior)", worst_interior,
                                  0.0, 1e-10);
            c.passed = c.passed && worst_boundary_ratio <= 1.0;
            c.note = "boundary defect within 10x tail bound: ratio = " +
                     std::to_string(worst_boundary_ratio);
            out.push_back(c);
        } catch (const truncation_error& e) {
            out.push_back(detail::failure("BG eigenvector residual (interior)", e.what()));
        }
    }

    {
        double worst = 0.0;
        for (double az : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.65}) {
            const double brute = bg::norm_sq_series(az);
            const double closed = specfun::hyp2f1(0.5, 1.5, 1.0, 2.0 * az * az);
            worst = std::max(worst, std::abs(brute - closed) / closed);
        }
        out.push_back(detail::make("BG normalization 2F1 vs direct sum", worst, 0.0, 1e-12));
    }

    {
        double worst = 0.0;
        for (int iz = 0; iz < 9; ++iz)
            for (int ix = 0; ix < 9; ++ix) {
                const double az = 0.05 + 0.05 * iz;
                const double x = -0.96 + 0.24 * ix;
                const auto state = bg::coherent_state(complex(az, 0.0), 192);
                const complex series = bg::wavefunction_series(state, x);
                const complex closed = bg::wavefunction_closed(complex(az, 0.0), x);
                worst = std::max(worst, std::abs(series - closed));
            }
        out.push_back(detail::make("BG wavefunction series vs closed form (9x9 grid)",
                                   worst, 0.0, 1e-9));
    }

    try {
        const auto moments = bg::verify_moments(12, 1e-7, quad_tol);
        double worst = 0.0;
        bool ok = true;
        for (const auto& m : moments) {
            worst = std::max(worst, m.rel_err);
            ok = ok && m.passed;
        }
        auto c = detail::make("BG moment problem (n <= 12) vs rho_n/pi", worst, 0.0, 1e-7);
        c.passed = c.passed && ok;
        out.push_back(c);
    } catch (const std::exception& e) {
        out.push_back(detail::failure("BG moment problem (n <= 12) vs rho_n/pi", e.what()));
    }

    {
        double worst = 0.0;
        const complex pts[] = {{0.2, 0.0}, {0.0, 0.3}, {0.35, -0.2}, {0.5, 0.0}};
        for (const auto& z1 : pts)
            for (const auto& z2 : pts) {
                const auto s1 = bg::coherent_state(z1, dim);
                const auto s2 = bg::coherent_state(z2, dim);
                const complex direct = s1.amplitudes.dot(s2.amplitudes);
                const complex closed = bg::overlap(z1, z2);
                worst = std::max(worst, std::abs(direct - closed));
            }
        out.push_back(detail::make("BG overlap closed form vs amplitude sum", worst, 0.0,
                                   1e-10));
    }

    try {
        const std::vector<complex> e0{1.0};
        const double norm = bg::norm_via_measure(e0, quad_tol);
        out.push_back(detail::make("BG analytic-representation norm (f = e_0)", norm, 1.0,
                                   1e-6));
    } catch (const std::exception& e) {
        out.push_back(detail::failure("BG analytic-representation norm (f = e_0)",
                                      e.what()));
    }

    return out;
}

/// Gazeau-Klauder identities: normalization, action identity, temporal
/// stability, moment problem, overlaps, statistics consistency.
inline std::vector<CheckResult> gk_suite(int dim = 128, double quad_tol = 1e-8) {
    std::vector<CheckResult> out;

    {
        double worst = 0.0;
        for (double J : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45}) {
            const double brute = gk::norm_sq_series(J);
            const double closed = specfun::hyp2f1(0.5, 1.5, 1.0, 2.0 * J);
            worst = std::max(worst, std::abs(brute - closed) / closed);
        }
        out.push_back(detail::make("GK normalization 2F1 vs direct sum", worst, 0.0, 1e-12));
    }

    {
        double worst = 0.0;
        for (int i = 1; i <= 9; ++i) {
            const double J = 0.05 * i;
            worst = std::max(worst, std::abs(gk::mean_energy(J) - J));
        }
        out.push_back(detail::make("GK action identity <H> = J (J = 0.05..0.45)", worst,
                                   0.0, 1e-10));
    }

    {
        double worst = 0.0;
        try {
            for (double J : {0.1, 0.2, 0.3})
                for (double gamma : {0.0, 1.0, -2.5})
                    for (double t : {0.5, 2.5}) {
                        const auto evolved =
                            gk::evolve(gk::coherent_state(J, gamma, dim), t);
                        const auto direct = gk::coherent_state(J, gamma + t, dim);
                        worst = std::max(
                            worst, (evolved.amplitudes - direct.amplitudes)
                                       .cwiseAbs()
                                       .maxCoeff());
                    }
            out.push_back(detail::make("GK temporal stability (per amplitude)", worst,
                                       0.0, 1e-15));
        } catch (const truncation_error& e) {
            out.push_back(detail::failure("GK temporal stability (per amplitude)",
                                          e.what()));
        }
    }

    try {
        const auto moments = gk::verify_moments(12, 1e-7, quad_tol);
        double worst = 0.0;
        bool ok = true;
        for (const auto& m : moments) {
            worst = std::max(worst, m.rel_err);
            ok = ok && m.passed;
        }
        auto c = detail::make("GK moment problem (n <= 12) vs rho_n", worst, 0.0, 1e-7);
        c.passed = c.passed && ok;
        out.push_back(c);
    } catch (const std::exception& e) {
        out.push_back(detail::failure("GK moment problem (n <= 12) vs rho_n", e.what()));
    }

    {
        double worst = 0.0;
        for (double J1 : {0.05, 0.1, 0.2, 0.3})
            for (double J2 : {0.05, 0.15, 0.3}) {
                const double direct = gk::overlap(J1, 1.25, J2, 1.25).real();
                const double closed = gk::overlap_closed_equal_gamma(J1, J2);
                worst = std::max(worst, std::abs(direct - closed));
            }
        out.push_back(detail::make("GK equal-gamma overlap closed vs direct", worst, 0.0,
                                   1e-10));
    }

    return out;
}

/// Hypergeometric statistics vs direct sums, plus the small-J slope.
inline std::vector<CheckResult> statistics_suite() {
    std::vector<CheckResult> out;
    double worst_n = 0.0, worst_n2 = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double J = 0.05 * i;
        worst_n = std::max(worst_n, relative_error(gk::mean_occupation(J),
                                                   gk::mean_occupation_series(J)));
        worst_n2 = std::max(worst_n2, relative_error(gk::mean_occupation_sq(J),
                                                     gk::mean_occupation_sq_series(J)));
    }
    out.push_back(detail::make("<n> hypergeometric vs direct sum (J grid)", worst_n, 0.0,
                               1e-10));
    out.push_back(detail::make("<n^2> hypergeometric vs direct sum (J grid)", worst_n2,
                               0.0, 1e-10));
    out.push_back(detail::make("<n> small-J slope 3J/2 (J = 1e-3, within 1%)",
                               gk::mean_occupation(1e-3) / 1.5e-3, 1.0, 1e-2));
    {
        const auto st = gk::occupation_statistics(0.3);
        const double n1 = gk::mean_occupation_series(0.3);
        const double n2 = gk::mean_occupation_sq_series(0.3);
        const double q_direct = (n2 - n1 * n1) / n1 - 1.0;
        out.push_back(detail::make("Mandel Q vs direct-sum statistics (J = 0.3)",
                                   st.mandel_q, q_direct, 1e-10));
    }
    return out;
}

/// Documented deviations of printed closed forms, verified quantitatively.
/// Informational: these never fail a run.
inline std::vector<CheckResult> errata_findings(double quad_tol = 1e-8) {
    std::vector<CheckResult> out;

    {
        const auto diag = oscillator::commutator_diagonal(8);
        const double printed = 2.0 / (1.0 * 3.0 * 5.0);  // n = 1 fraction as printed
        CheckResult c;
        c.name = "erratum: [X,P] closed-form sign (n >= 1)";
        c.computed = diag[1].imag();
        c.expected = -printed;
        c.rel_err = relative_error(diag[1].imag(), -printed);
        c.passed = true;
        c.note = "matrix products give -2i/((2n-1)(2n+1)(2n+3)) for n >= 1; the printed "
                 "fraction has the opposite sign (n = 1: computed " +
                 std::to_string(diag[1].imag()) + ", printed +" + std::to_string(printed) +
                 ")";
        out.push_back(c);
    }

    try {
        // printed BG weight (2x density, unit atom) against the moment targets
        double ratio_lo = 1e9, ratio_hi = 0.0;
        for (int n = 0; n <= 6; ++n) {
            const auto r = quadrature::integrate_with_atoms(
                [](double t) { return 2.0 * bg::weight_density(t); },
                {quadrature::WeightAtom{0.5, 1.0}}, 0.0, 0.5, quad_tol,
                [n](double t) { return std::pow(t, n); });
            const double ratio = r.value / (oscillator::rho(n) / std::numbers::pi);
            ratio_lo = std::min(ratio_lo, ratio);
            ratio_hi = std::max(ratio_hi, ratio);
        }
        CheckResult c;
        c.name = "erratum: printed BG weight normalization";
        c.computed = ratio_hi;
        c.expected = 2.0;
        c.rel_err = std::max(relative_error(ratio_hi, 2.0), relative_error(ratio_lo, 2.0));
        c.passed = true;
        c.note = "moments of the printed weight (density + unit atom) equal exactly "
                 "2x rho_n/pi for every n; the library ships the halved measure, whose "
                 "moments match, and pi times it reproduces the printed GK weight";
        out.push_back(c);
    } catch (const std::exception& e) {
        auto c = detail::failure("erratum: printed BG weight normalization", e.what());
        c.passed = true;  // informational section never fails the run
        out.push_back(c);
    }

    {
        double ratio_lo = 1e9, ratio_hi = 0.0;
        for (double J : {0.1, 0.2, 0.3}) {
            const double r = gk::mean_occupation_elliptic(J) / gk::mean_occupation(J);
            ratio_lo = std::min(ratio_lo, r);
            ratio_hi = std::max(ratio_hi, r);
        }
        CheckResult c;
        c.name = "erratum: elliptic form of <n>";
        c.computed = ratio_hi;
        c.expected = 0.5;
        c.rel_err = std::max(relative_error(ratio_hi, 0.5), relative_error(ratio_lo, 0.5));
        c.passed = true;
        c.note = "printed elliptic <n> equals exactly half the hypergeometric/series "
                 "value at J = 0.1, 0.2, 0.3 (spurious leading 1/2); the elliptic <n^2> "
                 "form agrees to machine precision";
        out.push_back(c);
    }

    {
        double worst = 0.0;
        for (double J : {0.1, 0.2, 0.3})
            worst = std::max(worst, relative_error(gk::mean_occupation_sq_elliptic(J),
                                                   gk::mean_occupation_sq(J)));
        CheckResult c;
        c.name = "elliptic form of <n^2> cross-check";
        c.computed = worst;
        c.expected = 0.0;
        c.rel_err = worst;
        c.passed = true;
        c.note = worst <= 1e-8 ? "agrees with the series form within 1e-8"
                               : "DEVIATES from the series form beyond 1e-8";
        out.push_back(c);
    }

    {
        // analytic representation: printed series vs N(z)<z|f> for f = e_1
        const std::vector<complex> e1{0.0, 1.0};
        const complex z(0.2, 0.0);
        const complex printed = bg::analytic_repr(e1, z);
        const double transform = 0.2 / std::sqrt(oscillator::rho(1));  // z/sqrt(rho_1)
        CheckResult c;
        c.name = "erratum: analytic representation argument scale";
        c.computed = printed.real();
        c.expected = std::numbers::sqrt2 * transform;
        c.rel_err = relative_error(printed.real(), std::numbers::sqrt2 * transform);
        c.passed = true;
        c.note = "printed series carries (2z)^n; N(z)<z|f> corresponds to (sqrt(2) z)^n, "
                 "so the printed f(z) at z equals the transform at sqrt(2) z and "
                 "converges on |z| < 1/2 only";
        out.push_back(c);
    }

    return out;
}

/// Everything, in a fixed order.
inline Report run_all(int dim = 128, double quad_tol = 1e-8) {
    Report report;
    auto append = [&report](std::vector<CheckResult> v) {
        for (auto& c : v) report.checks.push_back(std::move(c));
    };
    append(specfun_suite());
    append(operator_suite());
    append(bg_suite(dim, quad_tol));
    append(gk_suite(dim, quad_tol));
    append(statistics_suite());
    report.errata = errata_findings(quad_tol);
    return report;
}

}  // namespace losc::verify

#endif  // LOSC_VERIFY_HPP
