#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "opmatch/oppm1d.hpp"
#include "oracles.hpp"

using namespace opmatch;

namespace {

// Validate a witness table entry-by-entry against the brute-force scan:
// sentinel iff the overlap is isomorphic, otherwise a genuine relation flip
// at the smallest possible j.
int table_defects(const Sequence& p) {
    const int m = static_cast<int>(p.size());
    const WitnessTable1D wit = witness_table(p);
    int bad = 0;
    for (int a = 1; a < m; ++a) {
        const auto want = oracle::brute_witness(p, a);
        const auto& got = wit.at(a);
        if (want.has_value() != got.has_value()) {
            ++bad;
            continue;
        }
        if (!got) continue;
        if (got->j != want->second) ++bad;
        if (!(got->i >= 1 && got->i < got->j)) ++bad;
        if (cmp3(p[got->i - 1], p[got->j - 1]) ==
            cmp3(p[got->i + a - 1], p[got->j + a - 1]))
            ++bad;
    }
    return bad;
}

}  // namespace

TEST_CASE("witness_table examples") {
    const Sequence p{18, 22, 12, 50, 10, 17};
    const WitnessTable1D wit = witness_table(p);
    REQUIRE(wit.offsets() == 5);
    REQUIRE(wit.at(1).has_value());
    CHECK(*wit.at(1) == WitnessPair1D{1, 2});
    CHECK_FALSE(wit.at(4).has_value());

    SUBCASE("strictly increasing pattern has no witnesses") {
        const WitnessTable1D w2 = witness_table({1, 2, 3, 4, 5});
        for (int a = 1; a <= w2.offsets(); ++a) CHECK_FALSE(w2.at(a).has_value());
    }
    SUBCASE("single-element overlap is always isomorphic") {
        const WitnessTable1D w2 = witness_table({2, 1});
        CHECK_FALSE(w2.at(1).has_value());
    }
}

TEST_CASE("witness_table validity on random patterns") {
    std::mt19937_64 g(21);
    int bad = 0;
    for (int it = 0; it < 600; ++it) {
        const int m = 1 + static_cast<int>(oracle::rng_below(g, 32));
        const long sigma = it % 3 == 0 ? 2 : (it % 3 == 1 ? 5 : 1000);
        bad += table_defects(oracle::random_sequence(g, m, sigma));
    }
    CHECK(bad == 0);
}

TEST_CASE("duel eliminates a provably non-matching candidate") {
    const Sequence p{18, 22, 12, 50, 10, 17};
    const WitnessTable1D wit = witness_table(p);
    SUBCASE("text relation differs from the pattern's") {
        const Sequence t{7, 9, 8, 1, 2, 3, 4};
        CHECK(duel(t, 1, 1, p, wit) == 2);
    }
    SUBCASE("text relation matches the pattern's") {
        const Sequence t{7, 8, 9, 1, 2, 3, 4};
        CHECK(duel(t, 1, 1, p, wit) == 1);
    }
    SUBCASE("equality witness with equal text cells eliminates the left candidate") {
        const Sequence p2{2, 2, 3, 1};
        const WitnessTable1D w2 = witness_table(p2);
        REQUIRE(w2.at(1).has_value());
        CHECK(*w2.at(1) == WitnessPair1D{1, 2});
        CHECK(p2[w2.at(1)->i - 1] == p2[w2.at(1)->j - 1]);
        const Sequence t{5, 7, 7, 9, 1};
        CHECK(duel(t, 1, 1, p2, w2) == 1);
    }
}

TEST_CASE("duel soundness on random inputs") {
    std::mt19937_64 g(22);
    int bad = 0;
    for (int it = 0; it < 2000; ++it) {
        const int m = 2 + static_cast<int>(oracle::rng_below(g, 7));
        const int n = m + static_cast<int>(oracle::rng_below(g, 24));
        const Sequence p = oracle::random_sequence(g, m, 3);
        const Sequence t = oracle::random_sequence(g, n, 3);
        const WitnessTable1D wit = witness_table(p);
        const std::span<const Value> ts(t), ps(p);
        for (int a = 1; a < m; ++a) {
            if (!wit.at(a)) continue;
            for (int x = 1; x + a + m - 1 <= n; ++x) {
                const int loser = duel(t, x, a, p, wit);
                if (oracle::all_pairs_isomorphic(ps, ts.subspan(loser - 1, m))) ++bad;
            }
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("dueling_stage keeps true matches and yields pairwise consistency") {
    SUBCASE("strictly increasing pattern keeps everything") {
        const Sequence p{1, 2, 3};
        const Sequence t{5, 1, 4, 2, 9, 0};
        CHECK(dueling_stage(t, p, witness_table(p)) ==
              std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("true matches survive") {
        const Sequence p{1, 3, 2};
        const Sequence t{10, 50, 30, 60, 40};
        const std::vector<int> alive = dueling_stage(t, p, witness_table(p));
        for (int x : {1, 3})
            CHECK(std::find(alive.begin(), alive.end(), x) != alive.end());
    }
    SUBCASE("random inputs: survivors pairwise consistent, matches kept") {
        std::mt19937_64 g(23);
        int bad = 0;
        for (int it = 0; it < 3000; ++it) {
            const int m = 1 + static_cast<int>(oracle::rng_below(g, 8));
            const int n = 1 + static_cast<int>(oracle::rng_below(g, 64));
            const Sequence p = oracle::random_sequence(g, m, 3);
            const Sequence t = oracle::random_sequence(g, n, 3);
            const std::vector<int> alive = dueling_stage(t, p, witness_table(p));
            for (std::size_t i = 0; i < alive.size(); ++i)
                for (std::size_t j = i + 1; j < alive.size(); ++j) {
                    const int a = alive[j] - alive[i];
                    if (a < m && oracle::brute_witness(p, a).has_value()) ++bad;
                }
            for (int x : oracle::brute_match_1d(t, p))
                if (std::find(alive.begin(), alive.end(), x) == alive.end()) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("sweeping_stage examples") {
    const Sequence p{1, 3, 2};
    const Sequence t{10, 50, 30, 60, 40};
    CHECK(sweeping_stage(t, p, {1, 2, 3}) == std::vector<int>{1, 3});
    CHECK(sweeping_stage(t, p, {}) == std::vector<int>{});
    CHECK(sweeping_stage({3, 1, 2}, {1, 2}, {1, 2}) == std::vector<int>{2});
}

TEST_CASE("match_1d examples, mirrored by both baselines") {
    const Sequence t{10, 50, 30, 60, 40};
    const Sequence p{1, 3, 2};
    const Sequence s{4, 2, 7, 7, 1};
    using Fn = std::vector<int> (*)(const Sequence&, const Sequence&, MatchStats*);
    for (Fn f : {static_cast<Fn>(match_1d), naive_match_1d, kmp_match_1d}) {
        CHECK(f(t, p, nullptr) == std::vector<int>{1, 3});
        CHECK(f(s, s, nullptr) == std::vector<int>{1});
        CHECK(f({1, 2}, {1, 2, 3}, nullptr) == std::vector<int>{});
    }
    CHECK_THROWS_AS((void)match_1d({1, 2}, {}), std::invalid_argument);
    SUBCASE("unit pattern matches everywhere") {
        CHECK(match_1d({9, 9, 9}, {5}) == std::vector<int>{1, 2, 3});
    }
}

TEST_CASE("all three matchers agree exhaustively on tiny instances") {
    // All texts up to length 6 and patterns up to length 4 over {1,2,3};
    // the full grid of the acceptance suite extends this to length 10.
    long long bad = 0;
    for (int m = 1; m <= 4; ++m) {
        std::vector<Pattern1D> pats;
        Sequence p(m, 1);
        do {
            pats.push_back(preprocess_1d(p));
        } while (oracle::next_tuple(p, 3));
        for (int n = m; n <= 6; ++n) {
            Sequence t(n, 1);
            do {
                for (const Pattern1D& pat : pats) {
                    const std::vector<int> want = oracle::brute_match_1d(t, pat.p);
                    if (match_1d(pat, t) != want) ++bad;
                    if (kmp_match_1d(t, pat.p) != want) ++bad;
                    if (naive_match_1d(t, pat.p) != want) ++bad;
                }
            } while (oracle::next_tuple(t, 3));
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("all three matchers agree on random instances") {
    std::mt19937_64 g(24);
    int bad = 0;
    static constexpr long kSigmas[] = {2, 4, 8, 1000};
    for (int it = 0; it < 4000; ++it) {
        const long sigma = kSigmas[it % 4];
        const int m = 1 + static_cast<int>(oracle::rng_below(g, 8));
        const int n = 1 + static_cast<int>(oracle::rng_below(g, 64));
        const Sequence p = oracle::random_sequence(g, m, sigma);
        const Sequence t = oracle::random_sequence(g, n, sigma);
        const std::vector<int> a = match_1d(t, p);
        const std::vector<int> b = kmp_match_1d(t, p);
        const std::vector<int> c = naive_match_1d(t, p);
        if (a != b || b != c) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("sweeping stays linear in the text length") {
    std::mt19937_64 g(25);
    for (const long sigma : {2L, 1000L}) {
        const int n = 20000;
        const Sequence t = oracle::random_sequence(g, n, sigma);
        for (const int m : {2, 5, 10, 50}) {
            const Sequence p = oracle::random_sequence(g, m, sigma);
            MatchStats st;
            (void)match_1d(t, p, &st);
            CHECK(st.sweep_verify_calls <= 4ull * n);
            CHECK(st.comparisons <= 6ull * n + 2ull * m);
        }
    }
}

TEST_CASE("comparison counts are reproducible") {
    std::mt19937_64 g(26);
    const Sequence t = oracle::random_sequence(g, 5000, 100);
    const Sequence p = oracle::random_sequence(g, 12, 100);
    MatchStats a, b;
    (void)match_1d(t, p, &a);
    (void)match_1d(t, p, &b);
    CHECK(a.comparisons == b.comparisons);
    CHECK(a.duel_count == b.duel_count);
    CHECK(a.sweep_verify_calls == b.sweep_verify_calls);
    CHECK(a.comparisons == a.duel_comparisons + a.sweep_comparisons);
}
