#include <doctest.h>

#include "support/testutil.hpp"
#include "tamestrat/tube.hpp"

using namespace tamestrat;
using testutil::throws_code;

TEST_CASE("epsilon composition adds shifts") {
    PruferMapSymbol a{3, 1, 2};
    PruferMapSymbol b{3, 3, 2};
    CHECK(a.target() == 3);
    CHECK(epsilon_compose(a, b) == PruferMapSymbol{3, 1, 4});
    // mismatch: target of the first is 2, source of the second is 1
    CHECK(throws_code(
        [] { epsilon_compose(PruferMapSymbol{3, 1, 1}, PruferMapSymbol{3, 1, 1}); },
        "NotComposable"));
}

TEST_CASE("there is no shift-0 symbol; the loop has shift m") {
    CHECK(pi(1, 1, 3) == PruferMapSymbol{3, 1, 3});
    CHECK(pi(2, 2, 5).shift == 5);
    auto loop = pi(2, 2, 3);
    auto onward = pi(2, 3, 3);
    CHECK(epsilon_compose(loop, onward).shift == 3 + onward.shift);
}

TEST_CASE("pi values") {
    CHECK(pi(2, 1, 3) == PruferMapSymbol{3, 2, 2}); // 1 - 2 + 3
    CHECK(pi(1, 3, 3) == PruferMapSymbol{3, 1, 2}); // 3 - 1
    CHECK(pi(1, 1, 1) == PruferMapSymbol{1, 1, 1}); // the prime element
    CHECK(throws_code([] { pi(0, 1, 3); }, "OutOfRange"));
    CHECK(throws_code([] { pi(1, 4, 3); }, "OutOfRange"));
}

TEST_CASE("pi composition dichotomy") {
    CHECK(pi_law_check(1, 2, 3, 3) == PiLaw::Direct); // windings 0 + 0 = 0
    CHECK(pi_law_check(2, 1, 3, 3) == PiLaw::Wound);  // windings 1 + 0 != 0
    CHECK(pi_law_check(1, 1, 1, 1) == PiLaw::Wound);  // pi^2 in the rank-1 tube
    // exhaustive against the independent winding criterion
    for (int m = 1; m <= 6; ++m)
        for (int r = 1; r <= m; ++r)
            for (int s = 1; s <= m; ++s)
                for (int t = 1; t <= m; ++t) {
                    bool direct =
                        delta_winding(r, s) + delta_winding(s, t) == delta_winding(r, t);
                    CHECK((pi_law_check(r, s, t, m) == PiLaw::Direct) == direct);
                }
}

TEST_CASE("epsilon symbols are invariant under shifting both indices by m") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= i + 2 * m; ++j)
                CHECK(make_epsilon(i, j, m) == make_epsilon(i + m, j + m, m));
}

TEST_CASE("composition is associative wherever defined") {
    for (int m = 1; m <= 6; ++m)
        for (int r = 1; r <= m; ++r)
            for (int64_t s1 = 1; s1 <= 4 * m; ++s1)
                for (int64_t s2 = 1; s2 <= 2 * m; ++s2) {
                    PruferMapSymbol a{m, r, s1};
                    PruferMapSymbol b{m, a.target(), s2};
                    PruferMapSymbol c{m, b.target(), 1};
                    CHECK(epsilon_compose(epsilon_compose(a, b), c) ==
                          epsilon_compose(a, epsilon_compose(b, c)));
                }
}

TEST_CASE("conjugating the loop along an epsilon preserves shift m") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= i + m; ++j) {
                auto eps = make_epsilon(i, j, m);
                auto lhs = epsilon_compose(pi(eps.source, eps.source, m), eps);
                auto rhs = epsilon_compose(eps, pi(eps.target(), eps.target(), m));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("clique successor ordering and ray composition factors") {
    Clique c(3);
    CHECK(c.tau_minus(1) == 2);
    CHECK(c.tau_minus(3) == 1); // wraps modulo the rank
    CHECK(c.label(4) == "U1");
    // U_2[4] in a rank-3 tube has factors U2, U3, U1, U2 from the socle up
    CHECK(ray_composition_factors(RayModule{2, 4}, c) == std::vector<int>{2, 3, 1, 2});
    CHECK(throws_code([] { Clique bad(0); }, "OutOfRange"));
    // the kernel and image of a ray sequence refine the factor list
    auto seq = ray_exact_sequence(2, 4, 5, 3);
    auto whole = ray_composition_factors(RayModule{2, 5}, c);
    auto kernel = ray_composition_factors(seq.kernel, c);
    auto image = ray_composition_factors(seq.image, c);
    std::vector<int> glued = kernel;
    glued.insert(glued.end(), image.begin(), image.end());
    CHECK(glued == whole);
}

TEST_CASE("ray exact sequences") {
    auto seq = ray_exact_sequence(1, 2, 5, 3);
    CHECK(seq.kernel == RayModule{1, 1});
    CHECK(seq.image == RayModule{2, 4});
    auto seq2 = ray_exact_sequence(1, 2, 3, 2);
    CHECK(seq2.kernel == RayModule{1, 1});
    CHECK(seq2.image == RayModule{2, 2});
    // boundary: n = j - i is rejected
    CHECK(throws_code([] { ray_exact_sequence(1, 3, 2, 3); }, "BadLevel"));
}

TEST_CASE("gamma membership") {
    auto q = Field::rationals();
    auto g = gamma_ring(2, 6, q);
    SUBCASE("gamma(1) is the whole series ring") {
        auto g1 = gamma_ring(1, 4, q);
        Rng rng(3);
        CHECK(g1.member({{TruncatedSeries::random(q, 4, rng)}}));
    }
    SUBCASE("a unit constant below the diagonal is rejected") {
        auto bad = g.identity();
        bad[1][0] = TruncatedSeries::constant(q, q->one(), 6);
        CHECK_FALSE(g.member(bad));
    }
    SUBCASE("lower-left multiples of x multiply inside the ring") {
        auto a = g.identity();
        a[1][0] = TruncatedSeries::t_power(q, 1, 6);
        auto sq = g.mul(a, a);
        CHECK(g.member(sq));
        CHECK(sq[1][0] == TruncatedSeries::from_ints(q, {0, 2, 0, 0, 0, 0}));
    }
}

TEST_CASE("gamma closure on random members") {
    Rng rng(57);
    auto f3 = Field::prime(3);
    for (int m = 1; m <= 8; ++m) {
        auto g = gamma_ring(m, 16, f3);
        for (int i = 0; i < 25; ++i) {
            auto a = g.random_member(rng);
            auto b = g.random_member(rng);
            CHECK(g.member(g.add(a, b)));
            CHECK(g.member(g.mul(a, b)));
        }
    }
}

TEST_CASE("localization witness: J^m = x I and inverse units") {
    auto q = Field::rationals();
    SUBCASE("m = 2 by hand: [[0,1],[x,0]]^2 = x I") {
        auto rep = gamma_localization_witness(2, 8, q);
        CHECK(rep.jm_equals_x_identity);
        CHECK(rep.j_inverse_two_sided);
        CHECK(rep.all_witnesses_match);
    }
    SUBCASE("m = 1: inverting x gives the Laurent field") {
        auto rep = gamma_localization_witness(1, 8, q);
        CHECK(rep.jm_equals_x_identity);
        CHECK(rep.j_inverse_two_sided);
    }
    SUBCASE("all ranks to 8 at precision 16, exact") {
        for (int m = 1; m <= 8; ++m) {
            auto rep = gamma_localization_witness(m, 16, q);
            CHECK(rep.jm_equals_x_identity);
            CHECK(rep.j_inverse_two_sided);
            CHECK(rep.all_witnesses_match);
        }
    }
    SUBCASE("precision below m is refused") {
        CHECK(throws_code([&] { gamma_localization_witness(5, 4, q); }, "PrecisionTooLow"));
    }
}
