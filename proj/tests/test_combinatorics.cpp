#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "seqkernel/combinatorics.hpp"
#include "seqkernel/series_pow.hpp"

using namespace seqkernel;

TEST_CASE("multinomial coefficients carry the Kronecker delta") {
    CHECK(multinomial(9, {9, 0, 0, 0}) == 1);          // all-ones partition of 9
    CHECK(multinomial(2, {1, 1}) == 2);                // the 7+2 term of p(9)
    CHECK(multinomial(5, {2, 2}) == 0);                // delta fails
    CHECK(multinomial(0, {}) == 1);                    // empty composition of 0
    CHECK(multinomial(6, {3, 2, 1}) == 60);
}

TEST_CASE("multinomial is invariant under permutations") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> part(0, 5);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<std::uint64_t> qs(5);
        std::uint64_t total = 0;
        for (auto& q : qs) {
            q = part(rng);
            total += q;
        }
        const Int want = multinomial(total, qs);
        std::shuffle(qs.begin(), qs.end(), rng);
        CHECK(multinomial(total, qs) == want);
    }
}

TEST_CASE("generalized pentagonal numbers") {
    CHECK(gpn(0) == 0);
    CHECK(gpn(1) == 1);
    CHECK(gpn(-1) == 2);
    CHECK(gpn(2) == 5);
    CHECK(gpn(-2) == 7);
    CHECK(gpn(3) == 12);
    CHECK(gpn(-3) == 15);
    CHECK(gpn(7) == 70);
    const auto seq = gpn_upto(26);
    std::vector<std::uint64_t> values;
    for (const auto& [q, m] : seq) values.push_back(q);
    CHECK(values == std::vector<std::uint64_t>{1, 2, 5, 7, 12, 15, 22, 26});
}

TEST_CASE("pentagonal series matches Euler's product") {
    CHECK(pentagonal_series(7) == TruncSeries{1, -1, -1, 0, 0, 1, 0, 1});
    CHECK(pentagonal_series(12)[12] == Rat(-1));
    CHECK(pentagonal_series(12)[3] == Rat(0));
    // against the literal truncated product, no pentagonal theorem involved
    CHECK(pentagonal_series(60) == oracles::product_eta_power(1, 1, 60));
}

TEST_CASE("pentagonal series times its inverse is the unit series") {
    for (std::size_t L = 0; L <= 60; ++L) {
        const TruncSeries pent = pentagonal_series(L);
        CHECK(series_mul(pent, series_inverse(pent)) == TruncSeries::unit(L));
    }
}

TEST_CASE("restricted partition enumeration") {
    SECTION("9 has 10 pentagonal partitions") {
        CHECK(count_exponent_vectors(9, pentagonal_parts(9).allowed) == 10);
    }
    SECTION("n = 0 yields exactly the all-zero vector") {
        std::vector<std::vector<std::uint64_t>> seen;
        for_each_exponent_vector(0, {1, 2, 5}, [&](const auto& k) { seen.push_back(k); });
        REQUIRE(seen.size() == 1);
        CHECK(seen[0] == std::vector<std::uint64_t>{0, 0, 0});
    }
    SECTION("partitions of 4 over parts {1,2}, in lexicographic order") {
        std::vector<std::vector<std::uint64_t>> seen;
        for_each_exponent_vector(4, {1, 2}, [&](const auto& k) { seen.push_back(k); });
        const std::vector<std::vector<std::uint64_t>> want = {{0, 2}, {2, 1}, {4, 0}};
        CHECK(seen == want);

        const auto vectors = list_exponent_vectors(4, {1, 2});
        REQUIRE(vectors.size() == 3);
        CHECK(vectors[1].p == 4);
        CHECK(vectors[1].parts == std::vector<std::uint64_t>{1, 2});
        CHECK(vectors[1].k == std::vector<std::uint64_t>{2, 1});
    }
    SECTION("single part set") {
        CHECK(count_exponent_vectors(12, {3}) == 1);
        CHECK(count_exponent_vectors(13, {3}) == 0);
    }
}

TEST_CASE("enumeration is exact, unique and lexicographically increasing") {
    const std::vector<std::vector<std::uint64_t>> part_sets = {
        {1, 2, 5, 7, 12, 15, 22, 26, 35, 40},
        {2, 3, 7},
        {1, 4, 9, 16},
        {5},
    };
    for (const auto& parts : part_sets) {
        for (std::uint64_t n : {0, 7, 23, 40}) {
            std::vector<std::uint64_t> usable;
            for (auto p : parts)
                if (p <= std::max<std::uint64_t>(n, 1)) usable.push_back(p);
            if (usable.empty()) continue;
            std::vector<std::vector<std::uint64_t>> seen;
            for_each_exponent_vector(n, usable, [&](const auto& k) {
                std::uint64_t total = 0;
                for (std::size_t i = 0; i < usable.size(); ++i) total += k[i] * usable[i];
                REQUIRE(total == n);
                seen.push_back(k);
            });
            for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);
            const std::set<std::vector<std::uint64_t>> uniq(seen.begin(), seen.end());
            CHECK(uniq.size() == seen.size());
            CHECK(seen.size() == oracles::dp_partition_counts(n, usable)[n].convert_to<std::size_t>());
        }
    }
}

TEST_CASE("pentagonal partition counts agree with dynamic programming") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        const auto parts = pentagonal_parts(n).allowed;
        CHECK(Int(count_exponent_vectors(n, parts)) == oracles::dp_partition_counts(n, parts)[n]);
    }
}

TEST_CASE("fibonacci numbers") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(5) == 5);
    CHECK(fibonacci(10) == 55);
}

TEST_CASE("alternating multinomial sum equals (-1)^p") {
    CHECK(corollary_identity(0) == 1);
    CHECK(corollary_identity(3) == -1);
    CHECK(corollary_identity(8) == 1);
    for (std::uint64_t p = 0; p <= 12; ++p) {
        CHECK(corollary_identity(p) == ((p % 2 == 0) ? Int(1) : Int(-1)));
    }
}

TEST_CASE("jacobi cube of Euler's product") {
    const TruncSeries j = jacobi_cube_series(10);
    CHECK(j == TruncSeries{1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9});
    CHECK(j[2] == Rat(0));
    CHECK(j == eta_power_series(3, 1, 10));
    // cube of the pentagonal series by plain convolution
    const TruncSeries pent = pentagonal_series(10);
    CHECK(series_mul(series_mul(pent, pent), pent) == j);
}

TEST_CASE("eta power series") {
    CHECK(eta_power_series(6, 1, 7) == TruncSeries{1, -6, 9, 10, -30, 0, 11, 42});
    CHECK(eta_power_series(31, 1, 7) ==
          TruncSeries{1, -31, 434, -3565, 18445, -57505, 70091, 227447});
    CHECK(eta_power_series(1, 5, 4) == TruncSeries{1, 0, 0, 0, 0});
    CHECK(eta_power_series(-1, 1, 6) == series_inverse(pentagonal_series(6)));

    SECTION("against the literal product") {
        for (unsigned e : {1u, 2u, 4u, 6u, 8u}) {
            CHECK(eta_power_series(e, 1, 24) == oracles::product_eta_power(e, 1, 24));
        }
        CHECK(eta_power_series(5, 5, 30) == oracles::product_eta_power(5, 5, 30));
        CHECK(eta_power_series(3, 7, 30) == oracles::product_eta_power(3, 7, 30));
    }

    SECTION("exponents add") {
        std::map<int, TruncSeries> cache;
        for (int e = -16; e <= 16; ++e) cache.emplace(e, eta_power_series(e, 1, 30));
        for (int a = -8; a <= 8; ++a) {
            for (int b = -8; b <= 8; ++b) {
                CHECK(series_mul(cache.at(a), cache.at(b)) == cache.at(a + b));
            }
        }
    }
}
