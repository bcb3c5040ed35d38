#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grasstrans/quadrature.hpp"
#include "grasstrans/root_system.hpp"

using namespace grasstrans;

TEST_CASE("gauss-legendre integrates monomials exactly up to degree 2n-1") {
    std::vector<double> x, w;
    for (int n : {4, 9, 16}) {
        gauss_legendre(n, x, w);
        REQUIRE(static_cast<int>(x.size()) == n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0;
            for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], k);
            CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("rank-1 masses against hand integrals") {
    Integrand one = [](const std::vector<double>&) { return 1.0; };

    // int_0^pi |2 sin t| dt = 4
    auto b1 = grassmannian_preset(Field::Real, 3, 1);
    CHECK(integrate_density(b1, one, 32) == doctest::Approx(4.0).epsilon(1e-10));

    // int_0^pi |2 sin 2t| dt = 4
    auto c1 = grassmannian_preset(Field::Complex, 2, 1);
    CHECK(integrate_density(c1, one, 32) == doctest::Approx(4.0).epsilon(1e-10));

    // int_0^pi |2 sin t|^2 |2 sin 2t| dt = 8
    auto bc1 = make_root_system(1, 0, 2, 1);
    CHECK(integrate_density(bc1, one, 32) == doctest::Approx(8.0).epsilon(1e-10));

    // int_0^pi |2 sin t|^4 |2 sin 2t| dt = 64/3
    auto bc1p = grassmannian_preset(Field::Complex, 4, 1);
    CHECK(integrate_density(bc1p, one, 32) == doctest::Approx(64.0 / 3).epsilon(1e-10));
}

TEST_CASE("folded and tensor-panel integrators agree on symmetric integrands") {
    Integrand f = [](const std::vector<double>& t) {
        double p = 1.0;
        for (double x : t) p *= std::cos(x) * std::cos(x);
        return p;
    };
    auto b1 = grassmannian_preset(Field::Real, 3, 1);
    CHECK(integrate_density(b1, f, 40) ==
          doctest::Approx(integrate_density_cube(b1, f, 40)).epsilon(1e-9));

    auto g42c = grassmannian_preset(Field::Complex, 4, 2);
    CHECK(integrate_density(g42c, f, 32) ==
          doctest::Approx(integrate_density_cube(g42c, f, 32)).epsilon(1e-9));

    auto g42h = grassmannian_preset(Field::Quaternion, 4, 2);
    CHECK(integrate_density(g42h, f, 32) ==
          doctest::Approx(integrate_density_cube(g42h, f, 32)).epsilon(1e-9));

    // odd a leaves a |sin(t1-t2)| crease along the diagonal that the tensor
    // panels cannot resolve, so the cube route is only a coarse cross-check
    auto g52r = grassmannian_preset(Field::Real, 5, 2);
    Integrand g = [](const std::vector<double>& t) {
        double p = 1.0;
        for (double x : t) p *= std::sin(x) * std::sin(x);
        return p;
    };
    CHECK(integrate_density(g52r, g, 32) ==
          doctest::Approx(integrate_density_cube(g52r, g, 32)).epsilon(5e-3));
}

TEST_CASE("rank-3 fold is consistent across resolutions") {
    auto g63r = grassmannian_preset(Field::Real, 6, 3);
    Integrand f = [](const std::vector<double>& t) {
        double p = 1.0;
        for (double x : t) p *= std::cos(x) * std::cos(x);
        return p;
    };
    double lo = integrate_density(g63r, f, 16);
    double hi = integrate_density(g63r, f, 28);
    CHECK(lo == doctest::Approx(hi).epsilon(1e-8));
}

TEST_CASE("rank-2 mass against a direct change of variables") {
    // G(4,2;C): density 4 sin^2(t1-t2) sin^2(t1+t2) * 4 |2 sin 2t1| |2 sin 2t2|
    // with 2 sin(t1-t2) sin(t1+t2) = cos 2t2 - cos 2t1; substituting
    // x_j = cos 2t_j pushes |2 sin 2t_j| dt_j to 2 dx_j on [-1,1], so the mass
    // is 4 * int (x1-x2)^2 (2 dx1)(2 dx2) = 16 * 8/3 = 128/3.
    auto g42c = grassmannian_preset(Field::Complex, 4, 2);
    Integrand one = [](const std::vector<double>&) { return 1.0; };
    CHECK(integrate_density(g42c, one, 40) == doctest::Approx(128.0 / 3).epsilon(1e-10));
}

TEST_CASE("gram matrix of the eigenbasis is diagonal") {
    auto g42r = grassmannian_preset(Field::Real, 4, 2);
    CHECK(gram_check(g42r, 4, 32) <= 1e-9);
    auto g52c = grassmannian_preset(Field::Complex, 5, 2);
    CHECK(gram_check(g52c, 4, 32) <= 1e-9);
    auto rp2 = grassmannian_preset(Field::Real, 3, 1);
    CHECK(gram_check(rp2, 8, 40) <= 1e-10);
}
