#include <doctest.h>

#include <numeric>

#include "antiflip/cfrac.hpp"
#include "antiflip/chains.hpp"
#include "antiflip/errors.hpp"
#include "oracle.hpp"

using namespace antiflip;

namespace {

CFrac cf(std::initializer_list<int> xs) {
    std::vector<Integer> v;
    for (int x : xs) v.emplace_back(x);
    return CFrac(std::move(v));
}

oracle::Entries plain(const CFrac& c) {
    oracle::Entries out;
    for (const auto& x : c.entries()) out.push_back(x.small_value());
    return out;
}

std::vector<Integer> ints(const oracle::Entries& e) { return {e.begin(), e.end()}; }

}  // namespace

TEST_CASE("expand examples") {
    CHECK(hj_expand(Fraction(4, 1)) == cf({4}));
    CHECK(hj_expand(Fraction(2, 1)) == cf({2}));
    CHECK(hj_expand(Fraction(11, 3)) == cf({4, 3}));
    CHECK(hj_expand(Fraction(25, 9)).str() == "[3,5,2]");
}

TEST_CASE("evaluate examples") {
    CHECK(hj_evaluate(cf({3, 5, 2})) == Fraction(25, 9));
    CHECK(hj_evaluate(cf({2})) == Fraction(2, 1));
    CHECK(hj_evaluate(cf({5, 2, 2})) == Fraction(13, 3));
}

TEST_CASE("dual examples") {
    auto [f, c] = hj_dual(Fraction(5, 2));
    CHECK(f == Fraction(5, 3));
    CHECK(c == cf({2, 3}));
    CHECK(hj_dual(Fraction(2, 1)).second == cf({2}));
    CHECK(hj_dual(Fraction(8, 3)).first == Fraction(8, 5));
    CHECK(hj_dual(Fraction(8, 3)).second == cf({2, 3, 2}));
}

TEST_CASE("expansion matches the rational oracle and round-trips, n <= 200") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        for (std::int64_t a = 1; a < n; ++a) {
            if (std::gcd(n, a) != 1) continue;
            Fraction f(n, a);
            CFrac c = hj_expand(f);
            REQUIRE(plain(c) == oracle::expand(n, a));
            REQUIRE(hj_evaluate(c) == f);
            auto [dual, dc] = hj_dual(f);
            REQUIRE(hj_dual(dual).first == f);
        }
    }
}

TEST_CASE("evaluation round-trips on all chains of length <= 5 with entries <= 6") {
    std::vector<oracle::Entries> layer{{}};
    std::size_t checked = 0;
    for (int len = 1; len <= 5; ++len) {
        std::vector<oracle::Entries> next;
        for (const auto& base : layer) {
            for (int e = 2; e <= 6; ++e) {
                auto c = base;
                c.push_back(e);
                next.push_back(c);
                CFrac x(ints(c));
                Fraction f = hj_evaluate(x);
                auto [p, q] = oracle::evaluate(c);
                REQUIRE(f.num() == p);
                REQUIRE(f.den() == q);
                REQUIRE(hj_expand(f) == x);
                ++checked;
            }
        }
        layer = std::move(next);
    }
    CHECK(checked == 5 + 25 + 125 + 625 + 3125);
}

TEST_CASE("zero identity and blow-down count, n <= 200") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        for (std::int64_t a = 1; a < n; ++a) {
            if (std::gcd(n, a) != 1) continue;
            CFrac e = hj_expand(Fraction(n, a));
            CFrac b = hj_dual(Fraction(n, a)).second;
            Chain z = concat({Chain(e), Chain({Integer(1)}), reverse(Chain(b))});
            Reduction r = reduce_counted(z);
            REQUIRE(r.normal_form == Chain({Integer(0)}));
            // Each blow-down shortens the chain by one: s + t of them in
            // total, and sum(e_i - 2) = t - 1 for dual expansions.
            Integer sum = 0;
            for (const auto& x : e.entries()) sum += x - 1;
            REQUIRE(Integer(static_cast<std::int64_t>(r.blow_downs)) == sum + 1);
        }
    }
}

TEST_CASE("same singularity up to reversal") {
    CHECK(same_singularity(Fraction(11, 3), Fraction(11, 4)));
    CHECK(same_singularity(Fraction(11, 3), Fraction(11, 3)));
    CHECK_FALSE(same_singularity(Fraction(11, 3), Fraction(11, 5)));
    CHECK_FALSE(same_singularity(Fraction(11, 3), Fraction(13, 3)));
    CHECK(hj_expand(Fraction(11, 4)) == hj_expand(Fraction(11, 3)).reversed());
}

TEST_CASE("bad input") {
    CHECK_THROWS_AS(Fraction(6, 4), DomainError);
    CHECK_THROWS_AS(Fraction(3, 3), DomainError);
    CHECK_THROWS_AS(Fraction(3, 0), DomainError);
    CHECK_THROWS_AS(Fraction(3, 5), DomainError);
    CHECK_THROWS_AS(CFrac(std::vector<Integer>{}), DomainError);
    CHECK_THROWS_AS(cf({3, 1}), DomainError);
}

TEST_CASE("big fractions") {
    Integer n = Integer::parse("1000000000000000000000000000057");
    Fraction f(n, 3);
    CHECK(hj_evaluate(hj_expand(f)) == f);
    CHECK(hj_expand(f).size() == 3);
}
