#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "losc/bg_states.hpp"
#include "losc/quadrature.hpp"

using namespace losc;
namespace quad = losc::quadrature;

TEST_CASE("gauss-legendre rule against the classical 5-point table") {
    const auto r = quad::gauss_legendre(5);
    const double nodes[] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                            0.5384693101056831, 0.9061798459386640};
    const double weights[] = {0.2369268850561891, 0.4786286704993665,
                              0.5688888888888889, 0.4786286704993665,
                              0.2369268850561891};
    for (int i = 0; i < 5; ++i) {
        REQUIRE(r.nodes[i] == Catch::Approx(nodes[i]).margin(1e-15));
        REQUIRE(r.weights[i] == Catch::Approx(weights[i]).margin(1e-15));
    }
}

TEST_CASE("gauss-legendre orthonormality of the basis functions") {
    const auto rule = quad::gauss_legendre(16);
    for (int n = 0; n <= 15; ++n)
        for (int m = n; m <= 15; ++m) {
            double ip = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                ip += 0.5 * rule.weights[i] * std::sqrt(2.0 * n + 1.0) *
                      std::sqrt(2.0 * m + 1.0) *
                      specfun::legendre_p(n, rule.nodes[i]) *
                      specfun::legendre_p(m, rule.nodes[i]);
            REQUIRE(std::abs(ip - (n == m ? 1.0 : 0.0)) < 1e-13);
        }
}

TEST_CASE("integrate: smooth oracles") {
    REQUIRE(quad::integrate([](double) { return 1.0; }, 0.0, 0.5, 1e-10).value ==
            Catch::Approx(0.5).epsilon(1e-13));
    REQUIRE(quad::integrate([](double t) { return std::sin(t); }, 0.0,
                            std::numbers::pi, 1e-10)
                .value == Catch::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("integrate: integrable endpoint singularities") {
    // antiderivative oracle 2*sqrt(t)
    const auto r = quad::integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0,
                                   1e-8);
    REQUIRE(std::abs(r.value - 2.0) < 1e-7);
    // log t integrates to -1 on (0,1]
    const auto rl = quad::integrate([](double t) { return std::log(t); }, 0.0, 1.0, 1e-9);
    REQUIRE(std::abs(rl.value + 1.0) < 1e-8);
}

TEST_CASE("integrate never samples the interval endpoints") {
    double closest_left = 1.0, closest_right = 1.0;
    quad::integrate(
        [&](double t) {
            closest_left = std::min(closest_left, t);
            closest_right = std::min(closest_right, 1.0 - t);
            return std::cos(t);
        },
        0.0, 1.0, 1e-10);
    REQUIRE(closest_left > 0.0);
    REQUIRE(closest_right > 0.0);
}

TEST_CASE("integrate: linearity on smooth functions") {
    auto f = [](double t) { return std::exp(-t); };
    auto g = [](double t) { return t * t; };
    const double alpha = 2.5, beta = -0.75;
    const double lhs =
        quad::integrate([&](double t) { return alpha * f(t) + beta * g(t); }, 0.0, 2.0,
                        1e-11)
            .value;
    const double rhs = alpha * quad::integrate(f, 0.0, 2.0, 1e-11).value +
                       beta * quad::integrate(g, 0.0, 2.0, 1e-11).value;
    REQUIRE(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("integrate: error paths") {
    REQUIRE_THROWS_AS(quad::integrate([](double) { return 1.0; }, 1.0, 0.0, 1e-8),
                      domain_error);
    REQUIRE_THROWS_AS(quad::integrate([](double) { return 1.0; }, 0.0, 1.0, -1e-8),
                      domain_error);
    REQUIRE_THROWS_AS(
        quad::integrate(
            [](double t) {
                return t > 0.4 && t < 0.6 ? std::numeric_limits<double>::quiet_NaN()
                                          : 1.0;
            },
            0.0, 1.0, 1e-10),
        non_finite_error);
    REQUIRE_THROWS_AS(
        quad::integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-13,
                        500),
        no_convergence);
}

TEST_CASE("integrate: deterministic results") {
    auto f = [](double t) { return std::log(t) * std::cos(3.0 * t); };
    const auto a = quad::integrate(f, 0.0, 1.0, 1e-10);
    const auto b = quad::integrate(f, 0.0, 1.0, 1e-10);
    REQUIRE(a.value == b.value);
    REQUIRE(a.err_estimate == b.err_estimate);
    REQUIRE(a.evaluations == b.evaluations);
}

TEST_CASE("atoms contribute exactly mass * integrand(location)") {
    const std::vector<quad::WeightAtom> atom{{0.5, 1.0}};
    for (int n : {0, 1, 3, 7}) {
        for (double tol : {1e-6, 1e-10}) {
            const auto r = quad::integrate_with_atoms(
                [](double) { return 0.0; }, atom, 0.0, 0.5, tol,
                [n](double t) { return std::pow(t, n); });
            REQUIRE(r.value == std::pow(0.5, n));  // exact, independent of tol
        }
    }
    const auto r = quad::integrate_with_atoms([](double) { return 1.0; }, {}, 0.0, 0.5,
                                              1e-10, [](double) { return 1.0; });
    REQUIRE(r.value == Catch::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("atom location must lie in the interval") {
    REQUIRE_THROWS_AS(
        quad::integrate_with_atoms([](double) { return 0.0; }, {{1.5, 1.0}}, 0.0, 1.0,
                                   1e-8, [](double) { return 1.0; }),
        domain_error);
}

TEST_CASE("zeroth moment of the BG weight distribution is 1/pi") {
    const auto r = quad::integrate_with_atoms(bg::weight_density, {bg::weight_atom()},
                                              0.0, 0.5, 1e-9,
                                              [](double) { return 1.0; });
    REQUIRE(r.value == Catch::Approx(0.3183098861837907).epsilon(1e-8));
}
