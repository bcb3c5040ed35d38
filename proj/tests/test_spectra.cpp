#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grasstrans/jacobi.hpp"
#include "grasstrans/spectra.hpp"

using namespace grasstrans;

namespace {

double nval(const LogSigned& ls) { return ls.value(); }

}  // namespace

TEST_CASE("rank-1 cosine norm constants in closed form") {
    auto c1 = grassmannian_preset(Field::Complex, 2, 1);   // iota = 1
    auto b1 = grassmannian_preset(Field::Real, 3, 1);      // 2b = 1
    auto bc1 = make_root_system(1, 0, 2, 1);               // 2b = 2, iota = 1
    auto bc1p = grassmannian_preset(Field::Complex, 4, 1); // 2b = 4, iota = 1
    for (const Rat& nu : std::vector<Rat>{Rat(0), Rat(1) / 2, Rat(1), Rat(2), Rat(7) / 2}) {
        double v = to_double(nu);
        CHECK(nval(norm_const(c1, Kind::Cosine, nu)) ==
              doctest::Approx(4.0 / (v + 1)).epsilon(1e-12));
        CHECK(nval(norm_const(b1, Kind::Cosine, nu)) ==
              doctest::Approx(4.0 / (2 * v + 1)).epsilon(1e-12));
        CHECK(nval(norm_const(bc1, Kind::Cosine, nu)) ==
              doctest::Approx(16.0 / ((v + 1) * (v + 2))).epsilon(1e-12));
        CHECK(nval(norm_const(bc1p, Kind::Cosine, nu)) ==
              doctest::Approx(128.0 / ((v + 1) * (v + 2) * (v + 3))).epsilon(1e-12));
    }
}

TEST_CASE("rank-1 sine norm constants in closed form") {
    auto b1 = grassmannian_preset(Field::Real, 3, 1);
    // 2 sqrt(pi) Gamma(nu+1) / Gamma(nu+3/2)
    CHECK(nval(norm_const(b1, Kind::Sine, 0)) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(nval(norm_const(b1, Kind::Sine, 1)) == doctest::Approx(8.0 / 3).epsilon(1e-12));
    CHECK(nval(norm_const(b1, Kind::Sine, 2)) == doctest::Approx(32.0 / 15).epsilon(1e-12));

    auto bc1 = make_root_system(1, 0, 2, 1);  // 16/(nu+2)
    for (const Rat& nu : std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(5) / 2}) {
        double v = to_double(nu);
        CHECK(nval(norm_const(bc1, Kind::Sine, nu)) ==
              doctest::Approx(16.0 / (v + 2)).epsilon(1e-12));
    }

    // at nu = 0 both kernels are the constant 1, so the masses coincide
    for (const auto& rs : {grassmannian_preset(Field::Real, 5, 2),
                           grassmannian_preset(Field::Complex, 4, 2),
                           grassmannian_preset(Field::Quaternion, 4, 2)}) {
        CHECK(nval(norm_const(rs, Kind::Cosine, 0)) ==
              doctest::Approx(nval(norm_const(rs, Kind::Sine, 0))).epsilon(1e-12));
    }
}

TEST_CASE("norm constants against quadrature ratios") {
    auto g42c = grassmannian_preset(Field::Complex, 4, 2);
    auto g52r = grassmannian_preset(Field::Real, 5, 2);
    for (Kind k : {Kind::Cosine, Kind::Sine}) {
        for (const auto& rs : {g42c, g52r}) {
            for (Rat nu : {Rat(1), Rat(2)}) {
                double closed = std::exp(norm_const(rs, k, nu).log_abs -
                                         norm_const(rs, k, 0).log_abs);
                double quad = norm_const_quad_ratio(rs, k, nu, 0, 40);
                CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
            }
        }
    }
    // hand value: B1 sine ratio N'_1/N'_0 = (8/3)/4
    auto b1 = grassmannian_preset(Field::Real, 3, 1);
    CHECK(norm_const_quad_ratio(b1, Kind::Sine, 1, 0, 40) ==
          doctest::Approx(2.0 / 3).epsilon(1e-10));
}

TEST_CASE("exact zeros of the cosine symbol are exactly the L_nu failures") {
    std::vector<RootSystemBC> systems = {grassmannian_preset(Field::Real, 4, 2),
                                         grassmannian_preset(Field::Real, 5, 2),
                                         grassmannian_preset(Field::Complex, 4, 2),
                                         grassmannian_preset(Field::Complex, 5, 2),
                                         grassmannian_preset(Field::Quaternion, 4, 2),
                                         grassmannian_preset(Field::Real, 3, 1)};
    int zeros = 0;
    for (const auto& rs : systems) {
        for (const Rat& nu : std::vector<Rat>{Rat(1) / 2, Rat(1), Rat(3) / 2, Rat(2)}) {
            for (const IVec& m : even_dominant_weights(rs.rank, 12)) {
                auto sym = spectral_symbol(rs, Kind::Cosine, nu, m);
                CHECK(sym.exact_zero == !in_L_nu(rs, nu, m));
                if (sym.exact_zero) {
                    ++zeros;
                    CHECK(!sym.zero_positions.empty());
                    CHECK(sym.value.is_zero());
                    CHECK(sym.ratio == 0);
                }
            }
        }
    }
    CHECK(zeros > 0);  // the grid must actually exercise the boundary
}

TEST_CASE("one-step recursion in nu holds exactly") {
    std::vector<RootSystemBC> systems = {grassmannian_preset(Field::Complex, 4, 2),
                                         grassmannian_preset(Field::Real, 5, 2),
                                         grassmannian_preset(Field::Real, 3, 1),
                                         grassmannian_preset(Field::Quaternion, 4, 2)};
    for (const auto& rs : systems)
        for (Kind k : {Kind::Cosine, Kind::Sine})
            for (const Rat& nu : std::vector<Rat>{Rat(0), Rat(1) / 2, Rat(1), Rat(2)})
                for (const IVec& m : even_dominant_weights(rs.rank, 8))
                    CHECK(symbol_recursion_gap(rs, k, nu, m) == 0);
}

TEST_CASE("intertwining ratio specializes the sine symbol exactly") {
    for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
        for (int r : {1, 2}) {
            auto rs = grassmannian_preset(f, 2 * r, r);
            for (const Rat& t : std::vector<Rat>{Rat(1) / 8, Rat(3) / 10, Rat(11) / 20, Rat(3) / 4}) {
                Rat nu = -rs.a / 2 * (r - 2 * t);
                for (const IVec& m : even_dominant_weights(r, 8)) {
                    CHECK(knapp_stein_ratio(f, r, t, m) ==
                          spectral_symbol(rs, Kind::Sine, nu, m).ratio);
                }
            }
        }
    }
}

TEST_CASE("positivity below t = 1/2 and the first violation beyond") {
    std::vector<Rat> below;
    for (int i = 1; i <= 9; ++i) below.push_back(Rat(i) / 20);
    for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
        for (int r : {1, 2}) {
            CHECK(stein_positivity_scan(f, r, below, 12).empty());
        }
        // beyond t = 1/2 the j = r numerator base (a/2)(1 - 2t) is negative,
        // so the first flip appears once m_r reaches 2
        auto v1 = stein_positivity_scan(f, 1, {Rat(11) / 20, Rat(3) / 4}, 12);
        REQUIRE(!v1.empty());
        CHECK(v1.front().t == Rat(11) / 20);
        CHECK(v1.front().m == IVec{2});
        CHECK(v1.front().ratio < 0);
        auto viol = stein_positivity_scan(f, 2, {Rat(11) / 20}, 12);
        REQUIRE(!viol.empty());
        CHECK(viol.front().m == IVec{2, 2});
        CHECK(viol.front().ratio < 0);
    }
}

TEST_CASE("membership lattice") {
    CHECK(in_L_rr({2, 0}, 2, 2));
    CHECK(in_L_rr({2, 2}, 2, 2));
    CHECK(in_L_rr({2, 0}, 2, 1));
    CHECK(!in_L_rr({2, 2}, 2, 1));

    auto mem = image_membership(Field::Real, 6, 2, 3, 1, {2, 0});
    CHECK(mem.lrr_ok);
    CHECK(mem.lnu_ok);
    CHECK(mem.lnu_active);
    CHECK(mem.in_image);

    mem = image_membership(Field::Real, 6, 2, 3, 1, {8, 0});
    CHECK(mem.lrr_ok);
    CHECK(!mem.lnu_ok);
    CHECK(!mem.in_image);

    mem = image_membership(Field::Real, 6, 2, 1, 1, {2, 2});
    CHECK(!mem.lrr_ok);
    CHECK(!mem.in_image);
}

TEST_CASE("membership matches symbol vanishing on the preset grid") {
    // the cosine symbol of the m-component vanishes exactly when m leaves L_nu
    auto rs = grassmannian_preset(Field::Complex, 4, 2);
    for (Rat nu : {Rat(1), Rat(2)}) {
        for (const IVec& m : even_dominant_weights(2, 12)) {
            auto mem = image_membership(Field::Complex, 4, 2, 2, nu, m);
            auto sym = spectral_symbol(rs, Kind::Cosine, nu, m);
            CHECK(mem.lnu_ok == !sym.exact_zero);
        }
    }
}

TEST_CASE("large-nu limits of the normalized symbols") {
    auto rs = grassmannian_preset(Field::Complex, 5, 2);
    IVec m{4, 2};
    CHECK(std::fabs(to_double(spectral_symbol(rs, Kind::Cosine, 200, m).ratio) - 1.0) < 0.1);
    CHECK(std::fabs(to_double(spectral_symbol(rs, Kind::Cosine, 4000, m).ratio) - 1.0) <
          0.005);

    double target = to_double(value_at_half_pi(rs, m));
    double far = to_double(spectral_symbol(rs, Kind::Sine, 4000, m).ratio);
    CHECK(std::fabs(far - target) < 0.01 * std::fabs(target));
}

TEST_CASE("eigenvalue of the order-2r operator") {
    auto rs = grassmannian_preset(Field::Complex, 4, 2);  // rho = (3,1)
    CHECK(eigenvalue_of_M(rs, 0, {0, 0}) == 384);         // (25-9)(25-1)
    CHECK(eigenvalue_of_M(rs, 0, {2, 0}) == 0);           // (25-25)(...)
    auto b1 = grassmannian_preset(Field::Real, 3, 1);     // rho = 1/2
    // delta = 4: (9/2)^2 - (2+1/2)^2 = 81/4 - 25/4 = 14
    CHECK(eigenvalue_of_M(b1, 1, {2}) == 14);
}

TEST_CASE("composed transform multiplies the symbols") {
    LogSigned one{0.0, 1, 0};
    auto rs = grassmannian_preset(Field::Complex, 5, 2);
    IVec m{2, 0};
    auto direct = spectral_symbol(rs, Kind::Cosine, 1, m).value;
    auto comp = composite_symbol(one, Field::Complex, 5, 2, 2, Kind::Cosine, 1, m);
    CHECK(comp.value() == doctest::Approx(direct.value() * direct.value()).epsilon(1e-12));
    CHECK_THROWS_AS(
        composite_symbol(one, Field::Complex, 5, 2, 1, Kind::Cosine, 1, IVec{2, 2}),
        GtError);
}

TEST_CASE("holomorphic branching weight lists") {
    auto lr = branching_list(Field::Real, 1, 2, 12);  // nu = 1, cutoff 2
    REQUIRE(lr.size() == 2);
    CHECK(lr[0] == IVec{0});
    CHECK(lr[1] == IVec{2});

    auto lr1 = branching_list(Field::Real, 1, 1, 12);  // nu = 1/2, no integer cutoff
    CHECK(lr1.size() == 7);

    auto lh = branching_list(Field::Quaternion, 1, 1, 12);  // nu = 1, cutoff 2
    CHECK(lh.size() == 2);

    auto lr2 = branching_list(Field::Real, 2, 2, 8);
    REQUIRE(lr2.size() == 3);
    CHECK(lr2[2] == IVec{2, 2});

    CHECK_THROWS_AS(branching_list(Field::Complex, 1, 2, 8), GtError);
}

TEST_CASE("quadrature ratio matches the exact normalized symbol") {
    auto g42c = grassmannian_preset(Field::Complex, 4, 2);
    auto symc = spectral_symbol(g42c, Kind::Cosine, 1, {2, 0});
    CHECK(quadrature_symbol(g42c, Kind::Cosine, 1, {2, 0}, 24) ==
          doctest::Approx(to_double(symc.ratio)).epsilon(1e-8));
    auto syms = spectral_symbol(g42c, Kind::Sine, 1, {2, 2});
    CHECK(quadrature_symbol(g42c, Kind::Sine, 1, {2, 2}, 24) ==
          doctest::Approx(to_double(syms.ratio)).epsilon(1e-8));
}
