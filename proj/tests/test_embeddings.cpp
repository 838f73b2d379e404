#include <doctest.h>

#include <numeric>

#include "antiflip/embeddings.hpp"
#include "antiflip/errors.hpp"

using namespace antiflip;

namespace {

WahlPair W(std::int64_t m, std::int64_t a) { return WahlPair(m, a); }
const WahlPair S = WahlPair::smooth();

CFrac cf(std::vector<int> xs) {
    std::vector<Integer> v(xs.begin(), xs.end());
    return CFrac(std::move(v));
}

using Pairs = std::vector<std::pair<WahlPair, WahlPair>>;

Pairs canonical_pairs(const EmbeddingReport& r, std::size_t family = 0) {
    Pairs out;
    for (const auto& s : r.steps)
        if (family == 0 || s.family == family) out.emplace_back(s.canonical1, s.canonical2);
    return out;
}

// All chains with entries in [lo, hi] and length in [1, max_len].
std::vector<std::vector<int>> chains(int max_len, int lo, int hi) {
    std::vector<std::vector<int>> out, layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& b : layer)
            for (int e = lo; e <= hi; ++e) {
                auto c = b;
                c.push_back(e);
                next.push_back(c);
                out.push_back(c);
            }
        layer = std::move(next);
    }
    return out;
}

bool is_two_chain_three(const std::vector<int>& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] != 2) return false;
    return c.back() == 3;
}

}  // namespace

TEST_CASE("usual_initial examples") {
    auto e = usual_initial(cf({3, 3}));
    CHECK(e == ExtremalNbhd::initial(S, W(5, 3)));
    CHECK(e.delta() == 3);
    e = usual_initial(cf({4}));
    CHECK(e == ExtremalNbhd::initial(S, W(3, 2)));
    CHECK(e.delta() == 2);
    // [2,2,2] = 4/3, so (n,a) = (4,3) and the stored pair is (4, 4-3).
    e = usual_initial(cf({2, 2, 3}));
    CHECK(e == ExtremalNbhd::initial(S, W(4, 1)));
    CHECK(e.delta() == 1);
    CHECK_THROWS_AS(usual_initial(cf({3, 2})), DomainError);
}

TEST_CASE("usual_flip_sequence examples") {
    auto seq = usual_flip_sequence(cf({3, 3}));
    REQUIRE(seq.size() == 2);
    CHECK(seq[0].c == 3);
    CHECK(seq[0].next == W(2, 1));
    CHECK(seq[1].c == 3);
    CHECK(seq[1].next == S);
    seq = usual_flip_sequence(cf({4}));
    REQUIRE(seq.size() == 1);
    CHECK(seq[0].c == 4);
    CHECK(seq[0].next == S);
    seq = usual_flip_sequence(cf({3, 4}));
    REQUIRE(seq.size() == 2);
    CHECK(seq[0].c == 3);
    CHECK(seq[0].next == W(3, 1));
    CHECK(seq[1].c == 4);
}

TEST_CASE("embed_linear examples") {
    auto r = embed_linear(cf({4}), 3);
    CHECK(canonical_pairs(r) == Pairs{{S, W(3, 1)}, {W(3, 1), W(5, 1)}, {W(5, 1), W(7, 1)}});
    CHECK(r.infinite);
    CHECK(r.simplicity == Simplicity::simple);
    CHECK(r.delta == Integer(2));
    r = embed_linear(cf({5}), 1);
    CHECK(canonical_pairs(r) == Pairs{{S, W(4, 1)}});
    r = embed_linear(cf({2, 2, 3}), 10);
    CHECK(r.steps.size() == 2);
    CHECK_FALSE(r.infinite);
    r = embed_linear(cf({2, 2}), 5);
    CHECK(r.steps.empty());
    CHECK_FALSE(r.delta.has_value());
    CHECK(r.simplicity == Simplicity::none);
    CHECK(r.reason.find("chain of (-2)-curves") != std::string::npos);
    r = embed_linear(cf({3, 2}), 5);
    CHECK(r.steps.empty());
    CHECK(r.reason.find("no usual initial") != std::string::npos);
    CHECK(r.reason.find("chain of (-2)-curves") == std::string::npos);
}

TEST_CASE("embed_blowup examples") {
    auto r = embed_blowup(W(2, 1), 3);
    CHECK(canonical_pairs(r) == Pairs{{W(2, 1), W(4, 1)}, {W(4, 1), W(6, 1)}, {W(6, 1), W(8, 1)}});
    CHECK(r.simplicity == Simplicity::simple_for_later);
    CHECK(r.delta == Integer(2));
    for (std::int64_t n = 2; n <= 12; ++n)
        for (std::int64_t a = 1; a < n; ++a) {
            if (std::gcd(n, a) != 1) continue;
            auto first = embed_blowup(W(n, a), 1);
            REQUIRE(first.steps.size() == 1);
            REQUIRE(first.steps[0].step.nbhd.w1() == W(n, a));
            REQUIRE(canonical(first.steps[0].step.nbhd.w2()) == canonical(W(n * n, n * a - 1)));
            REQUIRE(first.delta == Integer(n));
        }
    r = embed_blowup(W(3, 1), 1);
    CHECK(canonical_pairs(r) == Pairs{{W(3, 1), W(9, 2)}});
    CHECK_THROWS_AS(embed_blowup(S, 1), DomainError);
}

TEST_CASE("embed_milnor examples") {
    auto r = embed_milnor(W(2, 1), 3, 2);
    CHECK(canonical_pairs(r, 1) == Pairs{{S, W(5, 2)}, {W(5, 2), W(14, 5)}});
    CHECK(canonical_pairs(r, 2) == Pairs{{W(2, 1), W(7, 2)}, {W(7, 2), W(19, 5)}});
    CHECK(r.simplicity == Simplicity::non_simple);
    CHECK(r.infinite);
    CHECK(std::get<MilnorFiber>(r.target).q_type == Fraction(11, 3));
    CHECK(describe(r.target) == "M([4]−3)");
    for (const auto& s : r.steps) CHECK(flip(s.step.nbhd).equivalent(PResolution(S, W(2, 1), 3)));

    r = embed_milnor(W(3, 2), 2, 5);
    CHECK(r.steps.size() == 4);  // two families of two
    CHECK_FALSE(r.infinite);
    CHECK(std::get<MilnorFiber>(r.target).q_type == Fraction(13, 3));

    CHECK_THROWS_AS(embed_milnor(PResolution(S, S, 2), 1), DomainError);
    CHECK_THROWS_AS(embed_milnor(PResolution(S, S, 4), 1), DomainError);
    CHECK_THROWS_AS(embed_milnor(PResolution(W(2, 1), W(3, 2), 2), 1), DomainError);
    try {
        (void)PResolution(S, S, 2);
        FAIL("smooth-2-smooth accepted");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("delta = 0") != std::string::npos);
    }
}

TEST_CASE("describe") {
    CHECK(describe(ChainNbhd{cf({4})}) == "V[4]");
    CHECK(describe(BlownUpBall{W(2, 1)}) == "B_{2,1}#CP2bar");
    CHECK(parse_simplicity("simple-for-i>1") == Simplicity::simple_for_later);
    CHECK_THROWS_AS(parse_simplicity("sometimes"), DomainError);
}

TEST_CASE("usual flips rebuild the chain: entries 2..5, length <= 4, last >= 3") {
    std::size_t n = 0, len4 = 0;
    for (const auto& c : chains(4, 2, 5)) {
        if (c.back() < 3) continue;
        ++n;
        if (c.size() == 4) ++len4;
        auto seq = usual_flip_sequence(cf(c));
        std::vector<int> got;
        for (const auto& f : seq) got.push_back(static_cast<int>(f.c.small_value()));
        REQUIRE(got == c);
    }
    CHECK(n == 3 + 12 + 48 + 192);
    CHECK(len4 == 192);
}

TEST_CASE("finiteness: linear embeddings are finite exactly for [2,..,2,3]") {
    for (const auto& c : chains(4, 2, 5)) {
        auto r = embed_linear(cf(c), 6);
        if (c.back() < 3) {
            REQUIRE(r.steps.empty());
            continue;
        }
        REQUIRE(r.infinite == !is_two_chain_three(c));
        REQUIRE(r.steps.size() == (r.infinite ? 6u : 2u));
    }
}

TEST_CASE("consecutive steps share a ball") {
    std::vector<EmbeddingReport> reports{embed_linear(cf({3, 3}), 8), embed_linear(cf({2, 5, 3}), 8),
                                         embed_linear(cf({2, 2, 3}), 8), embed_blowup(W(5, 2), 8),
                                         embed_milnor(W(2, 1), 3, 8), embed_milnor(W(5, 2), 3, 8)};
    for (const auto& r : reports) {
        for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) {
            const auto& a = r.steps[i];
            const auto& b = r.steps[i + 1];
            if (a.family != b.family) continue;
            REQUIRE(b.step.index == a.step.index + 1);
            REQUIRE(b.step.nbhd.w1() == conjugate(a.step.nbhd.w2()));
            REQUIRE(b.canonical1 == a.canonical2);
        }
    }
}

TEST_CASE("infinite families deliver any requested count") {
    for (std::size_t k : {1u, 5u, 25u}) {
        CHECK(embed_blowup(W(3, 1), k).steps.size() == k);
        CHECK(embed_milnor(W(2, 1), 3, k).steps.size() == 2 * k);
        CHECK(embed_linear(cf({3, 4}), k).steps.size() == k);
    }
}

TEST_CASE("all-(-2) chains embed nothing") {
    for (int j = 1; j <= 6; ++j) {
        auto r = embed_linear(CFrac(std::vector<Integer>(j, Integer(2))), 5);
        REQUIRE(r.steps.empty());
        REQUIRE(r.reason.find("chain of (-2)-curves") != std::string::npos);
    }
}
