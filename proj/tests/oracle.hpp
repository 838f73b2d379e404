#pragma once

// Test-side reference implementations. They avoid the library's Integer and
// algorithms on purpose: rationals instead of the integer recursions, the
// T-chain generation rules instead of m^2/(ma-1) expansion, plain int64
// recursions instead of MoriSequence.

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using i64 = std::int64_t;
using Q = boost::rational<i64>;
using Entries = std::vector<i64>;

/// n/a = e1 - 1/(e2 - ...) by repeated ceiling on exact rationals.
inline Entries expand(i64 n, i64 a) {
    Entries out;
    Q x(n, a);
    for (;;) {
        i64 e = boost::rational_cast<i64>(x);  // truncates; x > 1 here
        if (Q(e) != x) ++e;
        out.push_back(e);
        if (Q(e) == x) break;
        x = 1 / (Q(e) - x);
    }
    return out;
}

/// Left-to-right evaluation as a nested rational.
inline std::pair<i64, i64> evaluate(const Entries& e) {
    Q x(e.back());
    for (std::size_t i = e.size() - 1; i-- > 0;) x = Q(e[i]) - 1 / x;
    return {x.numerator(), x.denominator()};
}

/// All Wahl chains of length <= max_len, generated from [4] by
/// [e1..es] -> [2, e1, .., es + 1] and [e1 + 1, .., es, 2].
inline std::set<Entries> wahl_chains(std::size_t max_len) {
    std::set<Entries> out{{4}};
    std::vector<Entries> frontier{{4}};
    while (!frontier.empty()) {
        std::vector<Entries> next;
        for (const auto& c : frontier) {
            if (c.size() + 1 > max_len) continue;
            Entries left{2};
            left.insert(left.end(), c.begin(), c.end());
            left.back() += 1;
            Entries right = c;
            right.front() += 1;
            right.push_back(2);
            for (auto& n : {left, right}) {
                if (out.insert(n).second) next.push_back(n);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

struct Pair {
    i64 m, a;
};

/// Mori recursion in plain integers: (d_i, c_i), (d_{i+1}, d_{i+1} - c_{i+1}).
inline std::vector<std::pair<Pair, Pair>> mori(Pair w1, Pair w2, std::size_t k) {
    i64 delta = w2.m * w1.a + w1.m * w2.a - w1.m * w2.m;
    i64 d0 = w1.m, c0 = w1.a, d1 = w2.m, c1 = w2.m - w2.a;
    std::vector<std::pair<Pair, Pair>> out;
    std::size_t limit = delta == 1 ? std::min<std::size_t>(k, 2) : k;
    for (std::size_t i = 0; i < limit; ++i) {
        out.push_back({{d0, c0}, {d1, d1 - c1}});
        i64 d2 = delta * d1 - d0, c2 = delta * c1 - c0;
        d0 = d1;
        c0 = c1;
        d1 = d2;
        c1 = c2;
    }
    return out;
}

/// Every initial flipping pair ((m1,a1),(m2,a2)) with m2 <= bound, by an
/// exhaustive scan over coprime pairs.
template <class F>
void for_each_initial_flipping(i64 bound, F&& f) {
    std::vector<Pair> firsts{{1, 1}};
    for (i64 m = 2; m <= bound; ++m)
        for (i64 a = 1; a < m; ++a)
            if (std::gcd(m, a) == 1) firsts.push_back({m, a});
    for (const Pair& w1 : firsts) {
        for (i64 m2 = w1.m + 1; m2 <= bound; ++m2) {
            for (i64 a2 = 1; a2 < m2; ++a2) {
                if (std::gcd(m2, a2) != 1) continue;
                i64 delta = m2 * w1.a + w1.m * a2 - w1.m * m2;
                if (delta >= 1 && delta * w1.m - m2 < 0) f(w1, Pair{m2, a2}, delta);
            }
        }
    }
}

}  // namespace oracle
