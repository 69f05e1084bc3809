#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "simcore/cores.hpp"
#include "simcore/partition.hpp"

using namespace simcore;

namespace {

std::mt19937_64 rng(911217);

Partition random_partition() {
    std::uniform_int_distribution<int> nparts(0, 8), step(0, 3);
    int k = nparts(rng);
    std::vector<long long> parts(k);
    long long cur = 1 + step(rng);
    for (int i = k - 1; i >= 0; --i) {
        parts[i] = cur;
        cur += step(rng);
    }
    return Partition(parts);
}

}  // anonymous namespace

TEST_CASE("partition validation and size") {
    CHECK(Partition({5, 4, 2, 1, 1}).size() == 13);
    CHECK(Partition().size() == 0);
    CHECK(Partition().to_compact_string() == "empty");
    CHECK(Partition({4, 2, 1, 1}).to_compact_string() == "4211");
    CHECK(Partition({12, 3, 1}).to_compact_string() == "12,3,1");
    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);   // increasing
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);   // non-positive
    CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
}

TEST_CASE("conjugate: worked example and involution") {
    CHECK(conjugate(Partition({5, 4, 2, 1, 1})) == Partition({5, 3, 2, 2, 1}));
    CHECK(conjugate(Partition()) == Partition());
    for (int it = 0; it < 200; ++it) {
        Partition p = random_partition();
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).size() == p.size());
    }
}

TEST_CASE("hook lengths of (5,4,2,1,1)") {
    std::vector<std::vector<long long>> expected = {
        {9, 6, 4, 3, 1}, {7, 4, 2, 1}, {4, 1}, {2}, {1}};
    CHECK(hook_lengths(Partition({5, 4, 2, 1, 1})) == expected);
}

TEST_CASE("hook table transposes under conjugation") {
    for (int it = 0; it < 100; ++it) {
        Partition p = random_partition();
        auto h = hook_lengths(p);
        auto hc = hook_lengths(conjugate(p));
        for (size_t i = 0; i < h.size(); ++i)
            for (size_t j = 0; j < h[i].size(); ++j) CHECK(h[i][j] == hc[j][i]);
    }
}

TEST_CASE("core predicate on the worked example") {
    Partition p({5, 4, 2, 1, 1});
    // Hook multiset {9,6,4,3,1,7,4,2,1,4,1,2,1}: contains 4, lacks 5, 8, 10.
    CHECK(is_core(p, 5));
    CHECK_FALSE(is_core(p, 4));
    CHECK(is_core(p, 8));
    CHECK(is_core(p, 10));
    CHECK(is_core(Partition(), 2));  // empty partition is an s-core for every s
    CHECK_THROWS_AS(is_core(p, 0), std::invalid_argument);
}

TEST_CASE("first-column hooks and the beta round trip") {
    CHECK(first_column_hooks(Partition({5, 4, 2, 1, 1})) ==
          BetaSet({9, 7, 4, 2, 1}));
    CHECK_THROWS_AS(BetaSet({4, 4}), std::invalid_argument);  // strictly decreasing
    CHECK_THROWS_AS(BetaSet({4, 0}), std::invalid_argument);
    for (int it = 0; it < 200; ++it) {
        Partition p = random_partition();
        BetaSet b = first_column_hooks(p);
        CHECK(partition_from_beta(b) == p);
        long long k = static_cast<long long>(b.labels.size());
        long long label_sum = std::accumulate(b.labels.begin(), b.labels.end(), 0LL);
        CHECK(p.size() == label_sum - k * (k - 1) / 2);
    }
}

TEST_CASE("core pair validation names the gcd witness") {
    CHECK_THROWS_WITH_AS(require_valid({2, 4}),
                         "core pair: s and t must be coprime (gcd(2,4) = 2)",
                         std::invalid_argument);
    CHECK_THROWS_AS(require_valid({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(require_valid({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(require_valid({3, -5}), std::invalid_argument);
    CHECK_NOTHROW(require_valid({3, 5}));
    CHECK_NOTHROW(require_valid({5, 3}));  // order free
    CHECK_NOTHROW(require_valid({1, 7}));
}

TEST_CASE("numerical gaps: count, maximum, closure") {
    std::vector<long long> g35 = numerical_gaps({3, 5});
    CHECK(g35 == std::vector<long long>{1, 2, 4, 7});
    CHECK(numerical_gaps({2, 3}) == std::vector<long long>{1});
    CHECK(numerical_gaps({1, 4}).empty());
    for (long long s = 2; s <= 9; ++s)
        for (long long t = s + 1; t <= 10; ++t) {
            if (std::gcd(s, t) != 1) continue;
            std::vector<long long> g = numerical_gaps({s, t});
            CHECK(static_cast<long long>(g.size()) == (s - 1) * (t - 1) / 2);
            CHECK(g.back() == s * t - s - t);
            // Gaps are closed downward under subtracting s or t.
            for (long long x : g) {
                if (x - s >= 1) CHECK(std::binary_search(g.begin(), g.end(), x - s));
                if (x - t >= 1) CHECK(std::binary_search(g.begin(), g.end(), x - t));
            }
        }
}

TEST_CASE("core counts: closed form") {
    CHECK(anderson_count({2, 3}) == 2);
    CHECK(anderson_count({3, 5}) == 7);
    CHECK(anderson_count({5, 11}) == 273);
    CHECK(anderson_count({9, 10}) == 4862);
    CHECK(anderson_count({1, 9}) == 1);
}

TEST_CASE("(3,5)-cores: the full catalogue") {
    std::vector<Partition> cores = enumerate_cores({3, 5});
    REQUIRE(cores.size() == 7);
    std::vector<std::string> names;
    std::vector<long long> sizes;
    for (const Partition& p : cores) {
        names.push_back(p.to_compact_string());
        sizes.push_back(p.size());
    }
    CHECK(names == std::vector<std::string>{"empty", "1", "2", "11", "31", "211", "4211"});
    CHECK(sizes == std::vector<long long>{0, 1, 2, 2, 4, 4, 8});
    // Every listed partition really avoids hooks 3 and 5.
    for (const Partition& p : cores) {
        CHECK(is_core(p, 3));
        CHECK(is_core(p, 5));
    }
    std::vector<Partition> tiny = enumerate_cores({2, 3});
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0] == Partition());
    CHECK(tiny[1] == Partition({1}));
    CHECK(enumerate_cores({1, 6}).size() == 1);  // only the empty partition
}

TEST_CASE("enumeration count equals the closed form for s<t<=8") {
    for (long long s = 1; s <= 7; ++s)
        for (long long t = s + 1; t <= 8; ++t) {
            if (std::gcd(s, t) != 1) continue;
            CHECK(Integer(enumerate_cores({s, t}).size()) == anderson_count({s, t}));
        }
}

TEST_CASE("enumeration is symmetric in s and t") {
    CHECK(size_multiset({3, 5}) == size_multiset({5, 3}));
    CHECK(size_multiset({4, 7}) == size_multiset({7, 4}));
}

TEST_CASE("independent brute-force scan agrees with the poset enumeration") {
    // Scans every partition of every size up to the largest core size, so
    // only small pairs are feasible; this is the ground truth for the rest.
    std::vector<CorePair> pairs = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}, {3, 7},
                                   {4, 5}, {3, 8}, {4, 7}, {5, 6}};
    for (const CorePair& c : pairs) {
        std::map<long long, long long> fast = size_multiset(c);
        long long max_size = fast.rbegin()->first;
        CHECK(fast == naive_size_multiset(c, max_size));
        // The largest size of an (s,t)-core is (s^2-1)(t^2-1)/24.
        CHECK(max_size == (c.s * c.s - 1) * (c.t * c.t - 1) / 24);
    }
}

TEST_CASE("every enumerated core is a core, sizes sorted") {
    for (const CorePair& c : std::vector<CorePair>{{4, 9}, {5, 7}, {2, 9}}) {
        std::vector<Partition> cores = enumerate_cores(c);
        CHECK(Integer(cores.size()) == anderson_count(c));
        long long prev = -1;
        for (const Partition& p : cores) {
            CHECK(is_st_core(p, c));
            CHECK(p.size() >= prev);
            prev = p.size();
        }
    }
}

TEST_CASE("oracle generating polynomial freezes (3,5)") {
    QPolynomial p = oracle_generating_polynomial({3, 5});
    QPolynomial expected;
    expected.add_term(0, Rational(1));
    expected.add_term(1, Rational(1));
    expected.add_term(2, Rational(2));
    expected.add_term(4, Rational(2));
    expected.add_term(8, Rational(1));
    CHECK(p == expected);
    CHECK(p.to_text() == "1 + q + 2*q^2 + 2*q^4 + q^8");
    CHECK(p.value_at_one() == Rational(7));
}
