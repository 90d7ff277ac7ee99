#include <doctest.h>

#include <random>

#include "hilb2/lattice.hpp"
#include "oracles.hpp"

using namespace hilb2;

namespace {

PicLattice rank1(long two_d) { return PicLattice(1, {Int(two_d)}, {{Int(1)}}); }

PicLattice elliptic() {
    // <L, E> with L^2 = 4, L.E = 1, E^2 = 0.
    return PicLattice(2, {Int(4), Int(1), Int(1), Int(0)}, {{Int(1), Int(0)}});
}

PicLattice l_plus_node() {
    // <L, C> with L^2 = 6, L.C = 1, C^2 = -2.
    return PicLattice(2, {Int(6), Int(1), Int(1), Int(-2)}, {{Int(1), Int(0)}});
}

}  // namespace

TEST_CASE("constructor validates shape and signature") {
    CHECK_NOTHROW(rank1(2));
    CHECK_NOTHROW(elliptic());
    // two positive eigenvalues
    CHECK_THROWS_AS(PicLattice(2, {Int(2), Int(0), Int(0), Int(2)}, {{Int(1), Int(0)}}),
                    std::invalid_argument);
    // negative definite
    CHECK_THROWS_AS(PicLattice(1, {Int(-2)}, {{Int(1)}}), std::invalid_argument);
    // degenerate
    CHECK_THROWS_AS(PicLattice(2, {Int(2), Int(2), Int(2), Int(2)}, {{Int(1), Int(0)}}),
                    std::invalid_argument);
    // odd diagonal
    CHECK_THROWS_AS(PicLattice(1, {Int(3)}, {{Int(1)}}), std::invalid_argument);
    // asymmetric
    CHECK_THROWS_AS(PicLattice(2, {Int(2), Int(1), Int(0), Int(-2)}, {{Int(1), Int(0)}}),
                    std::invalid_argument);
    // ample with non-positive square
    CHECK_THROWS_AS(PicLattice(2, {Int(4), Int(1), Int(1), Int(0)}, {{Int(0), Int(1)}}),
                    std::invalid_argument);
    // hyperbolic plane with zero diagonal, signature (1,1)
    CHECK_NOTHROW(PicLattice(2, {Int(0), Int(1), Int(1), Int(0)}, {{Int(1), Int(1)}}));
}

TEST_CASE("q_self and q_pair") {
    PicLattice l6 = rank1(6);
    // delta itself: zero surface part, coefficient 1 stored for -delta.
    CHECK(l6.q_self({{{Int(0)}}, Int(1)}) == -2);
    CHECK(l6.q_self({{{Int(1)}}, Int(1)}) == 4);
    CHECK(rank1(2).q_self({{{Int(1)}}, Int(1)}) == 0);

    // L and delta span orthogonal summands.
    CHECK(l6.q_pair({{{Int(1)}}, Int(0)}, {{{Int(0)}}, Int(1)}) == 0);

    PicLattice ln = l_plus_node();
    Hilb2Class lmd{{{Int(1), Int(0)}}, Int(1)};                 // L - delta
    Hilb2Class twocmd{{{Int(0), Int(2)}}, Int(1)};              // 2C - delta
    CHECK(ln.q_pair(lmd, twocmd) == 0);                         // 2 L.C - 2 = 0

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int i = 0; i < 200; ++i) {
        Hilb2Class v{{{Int(coef(rng)), Int(coef(rng))}}, Int(coef(rng))};
        CHECK(ln.q_pair(v, v) == ln.q_self(v));
    }
}

TEST_CASE("q_self matches 2d - 2a^2 on rank 1") {
    for (long d = 1; d <= 12; ++d)
        for (long a = -4; a <= 4; ++a)
            CHECK(rank1(2 * d).q_self({{{Int(1)}}, Int(a)}) == 2 * d - 2 * a * a);
}

TEST_CASE("divisibility_two") {
    PicLattice ln = l_plus_node();
    CHECK(ln.divisibility_two({{{Int(2), Int(-4)}}, Int(3)}));
    CHECK(ln.divisibility_two({{{Int(0), Int(2)}}, Int(1)}));
    CHECK_FALSE(rank1(6).divisibility_two({{{Int(1)}}, Int(3)}));
    CHECK_THROWS_AS(rank1(6).divisibility_two({{{Int(0)}}, Int(0)}), std::invalid_argument);
    // delta alone has even pairing with everything but odd surface rule
    CHECK(rank1(6).divisibility_two({{{Int(0)}}, Int(5)}));
}

TEST_CASE("enumerate_classes frozen examples") {
    PicLattice le = elliptic();
    auto r1 = le.enumerate_classes(Int(0), Int(1));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].coords == std::vector<Int>{Int(0), Int(1)});

    PicLattice ln = l_plus_node();
    auto r2 = ln.enumerate_classes(Int(-2), Int(1));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].coords == std::vector<Int>{Int(0), Int(1)});

    CHECK(rank1(4).enumerate_classes(Int(0), Int(2)).empty());
}

TEST_CASE("enumerate_classes input validation") {
    CHECK_THROWS_AS(rank1(4).enumerate_classes(Int(0), Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(rank1(4).enumerate_classes(Int(0), Int(-3)), std::invalid_argument);
}

TEST_CASE("enumerate_classes equals naive box search") {
    std::vector<PicLattice> lats;
    lats.push_back(rank1(2));
    lats.push_back(rank1(8));
    lats.push_back(elliptic());
    lats.push_back(l_plus_node());
    lats.push_back(PicLattice(2, {Int(4), Int(2), Int(2), Int(-4)}, {{Int(1), Int(0)}}));
    lats.push_back(PicLattice(3, {Int(6), Int(1), Int(0), Int(1), Int(-2), Int(1), Int(0), Int(1), Int(-4)},
                              {{Int(1), Int(0), Int(0)}}));

    for (const auto& lat : lats) {
        for (long square : {-4L, -2L, 0L, 2L, 4L, 6L}) {
            for (long degree = 1; degree <= 6; ++degree) {
                auto fast = lat.enumerate_classes(Int(square), Int(degree));
                auto slow = oracle::enumerate_box(lat, lat.ample(), Int(square), Int(degree), 24);
                CHECK(fast == slow);
                // output sorted and within the box (so the oracle saw everything)
                for (const auto& d : fast)
                    for (const auto& c : d.coords) CHECK(abs(c) <= 24);
            }
        }
    }
}

TEST_CASE("enumerate_classes_wrt alternative polarization") {
    PicLattice le = elliptic();
    SurfaceClass e{{Int(0), Int(1)}};  // E with E^2 = 0: not a valid polarization
    CHECK_THROWS_AS(le.enumerate_classes_wrt(e, Int(0), Int(1)), std::invalid_argument);
    SurfaceClass pol{{Int(1), Int(1)}};  // (L+E)^2 = 6
    auto fast = le.enumerate_classes_wrt(pol, Int(0), Int(1));
    auto slow = oracle::enumerate_box(le, pol, Int(0), Int(1), 24);
    CHECK(fast == slow);
}

TEST_CASE("rank cap is enforced") {
    // rank 7 lattice: diag(2, -2, ..., -2)
    std::vector<Int> gram(49, Int(0));
    for (int i = 0; i < 7; ++i) gram[static_cast<size_t>(i) * 7 + i] = i == 0 ? 2 : -2;
    SurfaceClass ample{std::vector<Int>(7, Int(0))};
    ample.coords[0] = 1;
    PicLattice big(7, gram, ample);
    CHECK_THROWS_AS(big.enumerate_classes(Int(0), Int(2)), CapExceededError);
}

TEST_CASE("is_effective rule") {
    PicLattice ln = l_plus_node();
    CHECK(ln.is_effective({{Int(0), Int(1)}}).kind == EffectivityKind::Effective);
    CHECK(ln.is_effective({{Int(0), Int(0)}}).kind == EffectivityKind::NotEffective);
    PicLattice wide(2, {Int(4), Int(2), Int(2), Int(-4)}, {{Int(1), Int(0)}});
    auto u = wide.is_effective({{Int(0), Int(1)}});  // D^2 = -4, A.D = 2
    CHECK(u.kind == EffectivityKind::Unknown);
    CHECK_FALSE(u.reason.empty());
}

TEST_CASE("never both D and -D effective") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coef(-6, 6);
    PicLattice ln = l_plus_node();
    for (int i = 0; i < 400; ++i) {
        SurfaceClass d{{Int(coef(rng)), Int(coef(rng))}};
        auto ed = ln.is_effective(d);
        auto en = ln.is_effective(-d);
        if (ed.kind == EffectivityKind::Effective)
            CHECK(en.kind != EffectivityKind::Effective);
        if (d.is_zero()) CHECK(ed.kind == EffectivityKind::NotEffective);
    }
}
