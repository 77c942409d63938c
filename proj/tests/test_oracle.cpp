#include <doctest.h>

#include <random>

#include "fga/oracle.hpp"
#include "fga/text.hpp"
#include "support.hpp"

using namespace fga;
using fga::tests::make;
using fga::tests::random_element;
using fga::tests::Setup;

TEST_CASE("oracle examples") {
    Setup s = make("shortlex:x,y,x^-1,y^-1");
    std::vector<AlgebraElement> gens{s.el("x-1")};

    CHECK(brute_force_member(s.el("x*y - y"), gens, 2) == OracleAnswer::Yes);
    CHECK(brute_force_member(s.el("y"), gens, 5) == OracleAnswer::NotWithinRadius);
    CHECK(brute_force_member(AlgebraElement::zero(s.field, s.alphabet()), gens, 0) ==
          OracleAnswer::Yes);
    CHECK(brute_force_member(AlgebraElement::zero(s.field, s.alphabet()), {}, 0) ==
          OracleAnswer::Yes);
}

TEST_CASE("yes answers are monotone in the radius") {
    Setup s = make("shortlex:x,y,x^-1,y^-1", "fp:5");
    std::mt19937_64 rng(21);
    std::vector<AlgebraElement> gens{s.el("x-1"), s.el("y^2 - x")};
    for (std::size_t radius = 0; radius <= 3; ++radius) {
        MembershipOracle small(gens, radius);
        MembershipOracle large(gens, radius + 1);
        for (int i = 0; i < 40; ++i) {
            AlgebraElement f = random_element(rng, s.field, s.alphabet(), 3, 3);
            if (small.contains(f)) CHECK(large.contains(f));
        }
    }
}

TEST_CASE("known combinations are certified") {
    std::mt19937_64 rng(22);
    for (const char* field : {"q", "fp:5"}) {
        Setup s = make("shortlex:x,y,x^-1,y^-1", field);
        std::vector<AlgebraElement> gens{s.el("x-1"), s.el("x*y + y^-1")};
        for (int i = 0; i < 30; ++i) {
            AlgebraElement combination = AlgebraElement::zero(s.field, s.alphabet());
            for (const auto& g : gens)
                combination = combination + g * random_element(rng, s.field, s.alphabet(), 2, 2);
            CHECK(brute_force_member(combination, gens, 4) == OracleAnswer::Yes);
        }
    }
}

TEST_CASE("column cap is a hard error, not a truncation") {
    Setup s = make("shortlex:x,y,x^-1,y^-1");
    std::vector<AlgebraElement> gens{s.el("x-1")};
    CHECK_THROWS_AS(MembershipOracle(gens, 6, 100), error);
    CHECK_NOTHROW(MembershipOracle(gens, 2, 100));
}

TEST_CASE("ball sizes match the closed form") {
    Alphabet xy({"x", "y"});
    CHECK(Ball(xy, 0).words.size() == 1);
    CHECK(Ball(xy, 1).words.size() == 5);
    CHECK(Ball(xy, 2).words.size() == 17);
    CHECK(Ball(xy, 3).words.size() == 53);
    Alphabet x({"x"});
    CHECK(Ball(x, 4).words.size() == 9);
}
