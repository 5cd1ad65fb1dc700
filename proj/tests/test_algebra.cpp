#include <doctest.h>

#include "support/oracles.hpp"
#include "support/testutil.hpp"
#include "tamestrat/poly.hpp"
#include "tamestrat/rng.hpp"

using namespace tamestrat;
using testutil::throws_code;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
}

TEST_CASE("prime field construction rejects composites") {
    CHECK(Field::prime(2)->name() == "Fp(2)");
    CHECK(throws_code([] { Field::prime(6); }, "NotPrime"));
}

TEST_CASE("degree-1 extension of F3 is F3 again") {
    auto f3 = Field::prime(3);
    auto ext = make_ext_field(Poly::parse(f3, "x"));
    CHECK(ext->size() == 3);
    auto a = ext->from_int(2);
    CHECK((a * a) == ext->one());
}

TEST_CASE("F9 = F3[x]/(x^2+1) has multiplicative group of order 8") {
    auto f3 = Field::prime(3);
    auto f9 = make_ext_field(Poly::from_ints(f3, {1, 0, 1}));
    auto elems = f9->all_elements();
    REQUIRE(elems.size() == 9);
    // brute force: the order of every nonzero element divides 8 and some
    // element has order exactly 8
    int max_order = 0;
    for (auto& e : elems) {
        if (e.is_zero()) continue;
        int order = 1;
        FieldElem power = e;
        while (!power.is_one()) {
            power = power * e;
            ++order;
            REQUIRE(order <= 9);
        }
        CHECK(8 % order == 0);
        max_order = std::max(max_order, order);
    }
    CHECK(max_order == 8);
}

TEST_CASE("x^2 is rejected as an extension modulus") {
    auto f3 = Field::prime(3);
    CHECK(throws_code([&] { make_ext_field(Poly::parse(f3, "x^2")); }, "NotIrreducible"));
}

TEST_CASE("irreducibility over F2") {
    auto f2 = Field::prime(2);
    CHECK(irreducible(Poly::parse(f2, "x^2+x+1")) == Tri::True);
    CHECK(irreducible(Poly::parse(f2, "x^2+1")) == Tri::False); // (x+1)^2
    CHECK(throws_code([&] { irreducible(Poly::zero(f2)); }, "ZeroPolynomial"));
}

TEST_CASE("irreducibility over Q: exact to degree 3, unknown beyond") {
    auto q = Field::rationals();
    CHECK(irreducible(Poly::parse(q, "x^2+1")) == Tri::True);
    CHECK(irreducible(Poly::parse(q, "x^2 - 1")) == Tri::False);
    CHECK(irreducible(Poly::parse(q, "x^3 - 2")) == Tri::True);
    CHECK(irreducible(Poly::parse(q, "x^4+1")) == Tri::Unknown);
}

TEST_CASE("irreducible agrees with the exhaustive oracle up to degree 6, p <= 5") {
    Rng rng(11);
    for (int64_t p : {2, 3, 5}) {
        auto f = Field::prime(p);
        int trials = p == 5 ? 25 : 60;
        for (int trial = 0; trial < trials; ++trial) {
            int deg = 1 + (int)rng.uniform(6);
            std::vector<FieldElem> c;
            for (int i = 0; i < deg; ++i) c.push_back(f->random(rng));
            c.push_back(f->one());
            Poly poly(f, std::move(c));
            CHECK((irreducible(poly) == Tri::True) == oracles::irreducible_exhaustive(poly));
        }
    }
}

TEST_CASE("factor_over") {
    auto f2 = Field::prime(2);
    std::vector<Poly> delta = {Poly::parse(f2, "x"), Poly::parse(f2, "x+1")};
    SUBCASE("x^2+x factors as x(x+1)") {
        auto fac = factor_over(Poly::parse(f2, "x^2+x"), delta);
        REQUIRE(fac.has_value());
        CHECK(fac->at(delta[0]) == 1);
        CHECK(fac->at(delta[1]) == 1);
        Poly back = delta[0] * delta[1];
        CHECK(back == Poly::parse(f2, "x^2+x"));
    }
    SUBCASE("x+1 over {x} fails") {
        CHECK_FALSE(factor_over(Poly::parse(f2, "x+1"), {delta[0]}).has_value());
    }
    SUBCASE("a unit factors over the empty set") {
        auto fac = factor_over(Poly::parse(f2, "1"), {});
        REQUIRE(fac.has_value());
        CHECK(fac->empty());
    }
    SUBCASE("re-expansion recovers the input up to a unit") {
        auto q = Field::rationals();
        auto x = Poly::parse(q, "x");
        auto fac = factor_over(Poly::parse(q, "2*x"), {x});
        REQUIRE(fac.has_value());
        Poly back = Poly::constant(q, q->one());
        for (auto& [p, e] : *fac) back = back * p.pow(e);
        // 2*x / x is the unit 2
        auto [unit, rem] = Poly::divmod(Poly::parse(q, "2*x"), back);
        CHECK(rem.is_zero());
        CHECK(unit.is_unit());
    }
    SUBCASE("the zero polynomial is rejected") {
        CHECK(throws_code([&] { factor_over(Poly::zero(f2), delta); }, "ZeroPolynomial"));
    }
}

TEST_CASE("field axioms hold on random triples in every constructed field") {
    Rng rng(5);
    std::vector<FieldPtr> fields = {Field::prime(2), Field::prime(5), Field::rationals()};
    fields.push_back(make_ext_field(Poly::from_ints(Field::prime(3), {1, 0, 1})));
    fields.push_back(make_ext_field(Poly::parse(Field::rationals(), "x^2 - 2")));
    for (auto& f : fields) {
        for (int i = 0; i < 200; ++i) {
            FieldElem a = f->random(rng), b = f->random(rng), c = f->random(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("polynomial grammar round trips") {
    auto q = Field::rationals();
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        std::vector<FieldElem> c;
        int deg = (int)rng.uniform(5);
        for (int d = 0; d <= deg; ++d) c.push_back(q->random(rng));
        Poly p(q, std::move(c));
        CHECK(Poly::parse(q, p.str()) == p);
    }
    CHECK(Poly::parse(q, "1/2 + 3*x + x^2").str() == "1/2 + 3*x + x^2");
    auto f2 = Field::prime(2);
    auto ext = parse_field("Fp(2)[x]/(x^2+x+1)");
    CHECK(ext->name() == "Fp(2)[x]/(1 + x + x^2)"); // canonical ascending grammar
    CHECK(parse_field(ext->name())->same(*ext));
    CHECK(parse_field("Q")->kind() == FieldKind::Rationals);
}

TEST_CASE("monic normalization is idempotent") {
    auto q = Field::rationals();
    Poly p = Poly::parse(q, "2 + 4*x^2");
    CHECK(p.monic() == Poly::parse(q, "1/2 + x^2"));
    CHECK(p.monic().monic() == p.monic());
}
