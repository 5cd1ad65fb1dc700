#include <doctest.h>

#include "support/testutil.hpp"
#include "tamestrat/adele.hpp"
#include "tamestrat/poly.hpp"

using namespace tamestrat;
using testutil::throws_code;

namespace {

FamilyPtr test_family() {
    auto f3 = Field::prime(3);
    auto f4 = make_ext_field(Poly::from_ints(Field::prime(2), {1, 1, 1}));
    return IndexFamily::make({{1, f3}, {2, f3}, {7, f4}});
}

} // namespace

TEST_CASE("componentwise arithmetic and exceptional sets") {
    auto fam = test_family();
    auto f3 = Field::prime(3);
    SUBCASE("t^-1 times t cancels the pole") {
        AdeleElem a(fam, {{1, LaurentElem::t_power(f3, -1, 8)}}, 1);
        AdeleElem b(fam, {{1, LaurentElem::t_power(f3, 1, 8)}}, 1);
        auto prod = a * b;
        CHECK(prod.exceptional_set().empty());
        CHECK(prod.is_integral());
        CHECK(prod.at(1).coeff(0).is_one());
    }
    SUBCASE("poles at different places union") {
        AdeleElem a(fam, {{1, LaurentElem::t_power(f3, -2, 8)}}, 0);
        AdeleElem b(fam, {{2, LaurentElem::t_power(f3, -1, 8)}}, 0);
        CHECK((a + b).exceptional_set() == std::vector<int>{1, 2});
    }
    SUBCASE("additive inverses cancel exactly") {
        Rng rng(3);
        auto a = AdeleElem::random(fam, 8, rng);
        auto zero = a + (-a);
        CHECK(zero.exceptional_set().empty());
        CHECK(zero.tail_constant() == 0);
    }
    SUBCASE("families must match") {
        auto other = IndexFamily::make({{1, f3}});
        AdeleElem a(fam, {}, 1);
        AdeleElem b(other, {}, 1);
        CHECK(throws_code([&] { (void)(a + b); }, "IndexMismatch"));
    }
}

TEST_CASE("finite exceptional support is preserved by the ring operations") {
    auto fam = test_family();
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto a = AdeleElem::random(fam, 8, rng);
        auto b = AdeleElem::random(fam, 8, rng);
        auto sum = a + b;
        auto prod = a * b;
        // exceptional sets stay inside the union of the input supports
        for (int id : sum.exceptional_set()) {
            bool from_a = a.at(id).lower() < 0;
            bool from_b = b.at(id).lower() < 0;
            CHECK((from_a || from_b));
        }
        for (int id : prod.exceptional_set()) {
            bool from_inputs = a.at(id).lower() < 0 || b.at(id).lower() < 0;
            CHECK(from_inputs);
        }
    }
}

TEST_CASE("integral elements form a subring") {
    auto fam = test_family();
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        auto a = AdeleElem::random_integral(fam, 8, rng);
        auto b = AdeleElem::random_integral(fam, 8, rng);
        CHECK((a + b).is_integral());
        CHECK((a * b).is_integral());
        CHECK((-a).is_integral());
    }
}

TEST_CASE("componentwise ring axioms") {
    auto fam = test_family();
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        auto a = AdeleElem::random(fam, 6, rng);
        auto b = AdeleElem::random(fam, 6, rng);
        auto c = AdeleElem::random(fam, 6, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("upsilon denominator conditions") {
    auto fam = test_family();
    Rng rng(19);
    auto ups = UpsilonElem::make(fam, {{1, 2}, {7, 1}});
    auto rep = upsilon_denominator_check(fam, ups, 100, 16, rng);
    CHECK(rep.condition_one);
    CHECK(rep.condition_two);
    CHECK(rep.witnesses.size() == 3);
    SUBCASE("all-ones is trivially a denominator set") {
        auto trivial = UpsilonElem::make(fam, {});
        CHECK(upsilon_denominator_check(fam, trivial, 20, 16, rng).ok());
    }
    SUBCASE("powers at or beyond the precision are refused") {
        auto deep = UpsilonElem::make(fam, {{1, 16}});
        CHECK(throws_code([&] { upsilon_denominator_check(fam, deep, 5, 16, rng); },
                          "PrecisionTooLow"));
    }
    SUBCASE("upsilon powers must be >= 1 and supported in the family") {
        CHECK(throws_code([&] { UpsilonElem::make(fam, {{1, 0}}); }, "OutOfRange"));
        CHECK(throws_code([&] { UpsilonElem::make(fam, {{99, 1}}); }, "IndexMismatch"));
    }
}

TEST_CASE("fractions realize exactly the finite-exceptional elements") {
    auto fam = test_family();
    Rng rng(23);
    auto rep = localize_to_adele(fam, 100, 16, rng);
    CHECK(rep.forward_ok);
    CHECK(rep.backward_ok);
}

TEST_CASE("adele JSON round trips") {
    auto fam = test_family();
    Rng rng(29);
    auto a = AdeleElem::random(fam, 6, rng);
    auto text = adele_to_json_text(a);
    auto back = adele_from_json_text(text);
    CHECK(back == a);
    CHECK(adele_to_json_text(back) == text);
    // the distinguished tails keep their flag spelling
    auto one = AdeleElem::integral_one(fam, 4);
    CHECK(adele_to_json_text(one).find("\"tail\": \"one\"") != std::string::npos);
}
