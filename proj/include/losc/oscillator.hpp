#ifndef LOSC_OSCILLATOR_HPP
#define LOSC_OSCILLATOR_HPP

// The oscillator built on the Legendre recurrence: coefficients b_n, the
// normalization products rho_n, and the truncated operators X, P, a+/-, N, H
// acting on the first `dim` basis states psi_n = sqrt(2n+1) P_n.
//
// Truncation policy: a truncated tridiagonal operator is only faithful on
// interior indices n <= dim-2; nothing here asserts anything about the
// boundary row, and callers should not either.

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "losc/errors.hpp"

namespace losc::oscillator {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Recurrence coefficient b_n = (n+1)/sqrt((2n+1)(2n+3)) of
/// x psi_n = b_{n-1} psi_{n-1} + b_n psi_{n+1}.
/// Strictly decreasing from 1/sqrt(3) toward the limit 1/2 (every b_n > 1/2).
inline double recurrence_b(int n) {
    if (n < 0) throw domain_error("recurrence_b: n must be >= 0");
    const double num = (n + 1.0) * (n + 1.0);
    return std::sqrt(num / ((2.0 * n + 1.0) * (2.0 * n + 3.0)));
}

/// rho_n = prod_{k=1..n} 2 b_{k-1}^2, rho_0 = 1 (running product; the closed
/// form 2^n (n!)^2 / ((2n-1)!!(2n+1)!!) serves as a test oracle).
inline double rho(int n) {
    if (n < 0) throw domain_error("rho: n must be >= 0");
    double r = 1.0;
    for (int k = 0; k < n; ++k) {
        const double b = recurrence_b(k);
        r *= 2.0 * b * b;
    }
    return r;
}

enum class SpectrumConvention {
    hamiltonian,     // eigenvalues of H = X^2 + P^2: 2 b_0^2, 2(b_{n-1}^2 + b_n^2)
    gazeau_klauder,  // lambda_n = 2 b_{n-1}^2 (lambda_0 = 0 from b_{-1} = 0)
};

inline double hamiltonian_eigenvalue(int n) {
    if (n < 0) throw domain_error("hamiltonian_eigenvalue: n must be >= 0");
    const double bn = recurrence_b(n);
    if (n == 0) return 2.0 * bn * bn;
    const double bm = recurrence_b(n - 1);
    return 2.0 * (bm * bm + bn * bn);
}

inline double gk_eigenvalue(int n) {
    if (n < 0) throw domain_error("gk_eigenvalue: n must be >= 0");
    if (n == 0) return 0.0;
    const double b = recurrence_b(n - 1);
    return 2.0 * b * b;
}

/// First `count` spectrum values in the chosen convention. Both sequences
/// decrease toward their limits (1 and 1/2) after the first step.
inline std::vector<double> spectrum(SpectrumConvention convention, int count) {
    if (count < 0) throw domain_error("spectrum: count must be >= 0");
    std::vector<double> values(count);
    for (int n = 0; n < count; ++n)
        values[n] = convention == SpectrumConvention::hamiltonian
                        ? hamiltonian_eigenvalue(n)
                        : gk_eigenvalue(n);
    return values;
}

/// Position operator: real symmetric tridiagonal, (X)_{n+1,n} = (X)_{n,n+1} = b_n.
inline Matrix position_operator(int dim) {
    if (dim < 2) throw dimension_error("position_operator: dim must be >= 2");
    Matrix x = Matrix::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double b = recurrence_b(n);
        x(n + 1, n) = b;
        x(n, n + 1) = b;
    }
    return x;
}

/// Momentum operator: P e_n = i (b_n e_{n+1} - b_{n-1} e_{n-1}), Hermitian.
inline Matrix momentum_operator(int dim) {
    if (dim < 2) throw dimension_error("momentum_operator: dim must be >= 2");
    Matrix p = Matrix::Zero(dim, dim);
    const std::complex<double> i(0.0, 1.0);
    for (int n = 0; n + 1 < dim; ++n) {
        const double b = recurrence_b(n);
        p(n + 1, n) = i * b;
        p(n, n + 1) = -i * b;
    }
    return p;
}

/// Raising and lowering operators a+ e_n = sqrt(2) b_n e_{n+1},
/// a- e_n = sqrt(2) b_{n-1} e_{n-1}; each equals (X -/+ iP)/sqrt(2).
inline std::pair<Matrix, Matrix> ladder_operators(int dim) {
    if (dim < 2) throw dimension_error("ladder_operators: dim must be >= 2");
    Matrix raise = Matrix::Zero(dim, dim);
    Matrix lower = Matrix::Zero(dim, dim);
    const double sqrt2 = std::numbers::sqrt2;
    for (int n = 0; n + 1 < dim; ++n) {
        const double b = recurrence_b(n);
        raise(n + 1, n) = sqrt2 * b;
        lower(n, n + 1) = sqrt2 * b;
    }
    return {raise, lower};
}

inline Matrix number_operator(int dim) {
    if (dim < 2) throw dimension_error("number_operator: dim must be >= 2");
    Matrix n = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

/// H assembled as a+ a- + a- a+ from the truncated ladders. Interior diagonal
/// entries equal the hamiltonian spectrum; the last row is a truncation
/// artifact.
inline Matrix hamiltonian_operator(int dim) {
    if (dim < 3) throw dimension_error("hamiltonian_operator: dim must be >= 3");
    const auto [raise, lower] = ladder_operators(dim);
    return raise * lower + lower * raise;
}

/// Diagonal of [X, P] = XP - PX computed by matrix products. Interior entries
/// equal 2i (b_n^2 - b_{n-1}^2) = -2i/((2n-1)(2n+1)(2n+3)).
inline std::vector<std::complex<double>> commutator_diagonal(int dim) {
    if (dim < 3) throw dimension_error("commutator_diagonal: dim must be >= 3");
    const Matrix x = position_operator(dim);
    const Matrix p = momentum_operator(dim);
    const Matrix c = x * p - p * x;
    std::vector<std::complex<double>> diag(dim);
    for (int n = 0; n < dim; ++n) diag[n] = c(n, n);
    return diag;
}

}  // namespace losc::oscillator

#endif  // LOSC_OSCILLATOR_HPP
