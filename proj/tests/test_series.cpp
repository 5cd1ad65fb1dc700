#include <doctest.h>

#include "support/testutil.hpp"
#include "tamestrat/series.hpp"

using namespace tamestrat;
using testutil::throws_code;

TEST_CASE("series products truncate at the minimum precision") {
    auto q = Field::rationals();
    SUBCASE("(1+t)(1-t) = 1 - t^2 at N=4") {
        auto prod = series_mul(TruncatedSeries::from_ints(q, {1, 1, 0, 0}),
                               TruncatedSeries::from_ints(q, {1, -1, 0, 0}));
        CHECK(prod == TruncatedSeries::from_ints(q, {1, 0, -1, 0}));
    }
    SUBCASE("t * t = t^2 at N=3") {
        auto t = TruncatedSeries::t_power(q, 1, 3);
        CHECK(series_mul(t, t) == TruncatedSeries::from_ints(q, {0, 0, 1}));
    }
    SUBCASE("(1+t+t^2+t^3)(1-t) truncates to 1: the t^4 term falls outside") {
        // hand Cauchy product: coefficients 1,0,0,0 within the window
        auto prod = series_mul(TruncatedSeries::from_ints(q, {1, 1, 1, 1}),
                               TruncatedSeries::from_ints(q, {1, -1, 0, 0}));
        CHECK(prod == TruncatedSeries::from_ints(q, {1, 0, 0, 0}));
    }
    SUBCASE("mixed precision lands on the smaller window") {
        auto a = TruncatedSeries::from_ints(q, {1, 2, 3, 4, 5});
        auto b = TruncatedSeries::from_ints(q, {1, 1});
        CHECK(series_mul(a, b).precision() == 2);
    }
    SUBCASE("field mismatch is rejected") {
        auto f3 = Field::prime(3);
        CHECK(throws_code(
            [&] {
                series_mul(TruncatedSeries::from_ints(q, {1}),
                           TruncatedSeries::from_ints(f3, {1}));
            },
            "FieldMismatch"));
    }
}

TEST_CASE("series inversion") {
    auto q = Field::rationals();
    SUBCASE("geometric series") {
        auto inv = series_inv(TruncatedSeries::from_ints(q, {1, -1, 0, 0}));
        CHECK(inv == TruncatedSeries::from_ints(q, {1, 1, 1, 1}));
    }
    SUBCASE("t is not a unit in the power series ring") {
        CHECK(throws_code([&] { series_inv(TruncatedSeries::from_ints(q, {0, 1, 0})); },
                          "NotUnit"));
    }
    SUBCASE("zero to precision cannot invert") {
        CHECK(throws_code([&] { series_inv(TruncatedSeries(q, 4)); }, "ZeroElement"));
    }
    SUBCASE("t inverts as a Laurent element") {
        auto t = LaurentElem::t_power(q, 1, 4);
        CHECK(t.inverse() == LaurentElem::t_power(q, -1, 4));
    }
}

TEST_CASE("dvr decomposition") {
    auto q = Field::rationals();
    SUBCASE("t^2 + t^3 = t^2 (1 + t)") {
        auto d = dvr_decompose(TruncatedSeries::from_ints(q, {0, 0, 1, 1, 0}));
        CHECK(d.valuation == 2);
        CHECK(d.unit == TruncatedSeries::from_ints(q, {1, 1, 0}));
    }
    SUBCASE("1 decomposes trivially") {
        auto d = dvr_decompose(TruncatedSeries::from_ints(q, {1, 0, 0}));
        CHECK(d.valuation == 0);
        CHECK(d.unit.coeff(0).is_one());
    }
    SUBCASE("3t over Q") {
        auto d = dvr_decompose(TruncatedSeries::from_ints(q, {0, 3, 0, 0}));
        CHECK(d.valuation == 1);
        CHECK(d.unit == TruncatedSeries::from_ints(q, {3, 0, 0}));
    }
    SUBCASE("all-zero coefficients report ZeroElement") {
        CHECK(throws_code([&] { dvr_decompose(TruncatedSeries(q, 5)); }, "ZeroElement"));
    }
}

TEST_CASE("ring axioms and inverse identities on random samples") {
    Rng rng(23);
    for (auto& f : {Field::prime(3), Field::rationals()}) {
        for (int i = 0; i < 200; ++i) {
            auto a = TruncatedSeries::random(f, 6, rng);
            auto b = TruncatedSeries::random(f, 6, rng);
            auto c = TruncatedSeries::random(f, 6, rng);
            CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
            CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
            auto u = TruncatedSeries::random_unit(f, 6, rng);
            CHECK(series_mul(u, series_inv(u)) == TruncatedSeries::constant(f, f->one(), 6));
        }
    }
}

TEST_CASE("dvr round trip and the ideal chain property") {
    Rng rng(29);
    auto f = Field::prime(5);
    for (int i = 0; i < 100; ++i) {
        auto a = TruncatedSeries::random(f, 8, rng);
        if (a.is_zero_to_precision()) continue;
        auto d = dvr_decompose(a);
        auto back = series_mul(TruncatedSeries::t_power(f, d.valuation, 8), d.unit);
        for (int p = 0; p < back.precision(); ++p) CHECK(back.coeff(p) == a.coeff(p));
        // independent samples ordered by valuation: the larger one is a
        // multiple of the smaller, witnessed by dividing and recombining
        auto b = TruncatedSeries::random(f, 8, rng);
        if (b.is_zero_to_precision()) continue;
        auto low = a, high = b;
        if (dvr_decompose(low).valuation > dvr_decompose(high).valuation)
            std::swap(low, high);
        auto q = series_div(high, low);
        auto recombined = series_mul(q, low.truncated(q.precision()));
        for (int p = 0; p < recombined.precision(); ++p)
            CHECK(recombined.coeff(p) == high.coeff(p));
    }
}

TEST_CASE("laurent arithmetic and normalization") {
    auto q = Field::rationals();
    // 2 t^-2 + t^-1, window of 4 coefficients
    LaurentElem a(q, -2, {q->from_int(2), q->from_int(1), q->zero(), q->zero()});
    CHECK(a.lower() == -2);
    CHECK_FALSE(a.is_integral());
    auto b = a + (-a);
    CHECK(b.is_zero_to_precision());
    auto prod = a * a.inverse();
    CHECK(prod.lower() == 0);
    CHECK(prod.coeff(0).is_one());
    // normalization strips leading stored zeros
    LaurentElem c(q, -1, {q->zero(), q->from_int(3)});
    CHECK(c.lower() == 0);
    CHECK(c.is_integral());
}

TEST_CASE("laurent windows shrink correctly under multiplication") {
    auto q = Field::rationals();
    // a = t^-2 + t^-1, known mod t^2; b = t^2, known mod t^6
    LaurentElem a(q, -2, {q->one(), q->one(), q->zero(), q->zero()});
    LaurentElem b = LaurentElem::t_power(q, 2, 4);
    auto prod = a * b;
    // product order 0, known mod t^min(-2+6, 2+2) = t^4
    CHECK(prod.lower() == 0);
    CHECK(prod.upper() == 4);
    CHECK(prod.coeff(0).is_one());
    CHECK(prod.coeff(1).is_one());
    // multiplying by something zero-to-precision keeps only a zero bound
    auto zero = LaurentElem::zero_mod(q, 3);
    auto with_zero = a * zero;
    CHECK(with_zero.is_zero_to_precision());
    CHECK(with_zero.upper() == 1); // t^-2 * O(t^3)
}

TEST_CASE("series and laurent printing") {
    auto q = Field::rationals();
    CHECK(TruncatedSeries::from_ints(q, {1, 2, 0, 1}).str() == "1 + 2*t + t^3 + O(t^4)");
    LaurentElem l(q, -2, {q->from_int(1), q->zero(), q->from_int(5)});
    CHECK(l.str() == "t^-2 + 5 + O(t^1)");
}
