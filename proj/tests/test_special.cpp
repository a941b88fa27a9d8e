#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "oracles.hpp"
#include "seqkernel/special.hpp"

using namespace seqkernel;

namespace {

std::vector<BernoulliMethod> bernoulli_methods_for(std::size_t n) {
    std::vector<BernoulliMethod> m = {BernoulliMethod::partition_36a,
                                      BernoulliMethod::composition_36b,
                                      BernoulliMethod::vella_35, BernoulliMethod::laplace_det_3};
    if (n != 1) m.push_back(BernoulliMethod::general_41);
    if (n % 2 == 0) {
        m.push_back(BernoulliMethod::sinh_38);
        m.push_back(BernoulliMethod::det_56a);
    }
    return m;
}

std::vector<EulerMethod> euler_methods_for(std::size_t n) {
    std::vector<EulerMethod> m = {EulerMethod::even_composition_42};
    if (n >= 2) m.push_back(EulerMethod::odd_composition_prop);
    if (n % 2 == 0) {
        m.push_back(EulerMethod::even_partition_39a);
        m.push_back(EulerMethod::det_56b);
        if (n >= 2) m.push_back(EulerMethod::odd_partition_48);
    }
    return m;
}

} // namespace

TEST_CASE("bernoulli anchors") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli(24) == Rat(Int("-236364091"), Int(2730)));
    CHECK(bernoulli(1, BernoulliMethod::laplace_det_3) == Rat(-1, 2));
}

TEST_CASE("every applicable bernoulli method equals the recurrence") {
    const auto oracle = bernoulli_table(24);
    for (std::size_t n = 0; n <= 24; ++n) {
        for (const auto m : bernoulli_methods_for(n)) {
            CHECK(bernoulli(n, m) == oracle[n]);
        }
    }
}

TEST_CASE("bernoulli parity emerges from empty even-composition sums") {
    for (std::size_t n = 3; n <= 23; n += 2) {
        CHECK(bernoulli(n, BernoulliMethod::general_41) == Rat(0));
        CHECK(bernoulli(n, BernoulliMethod::partition_36a) == Rat(0));
    }
}

TEST_CASE("bernoulli method preconditions") {
    CHECK_THROWS_AS(bernoulli(1, BernoulliMethod::general_41), UnsupportedInputError);
    CHECK_THROWS_AS(bernoulli(3, BernoulliMethod::sinh_38), UnsupportedInputError);
    CHECK_THROWS_AS(bernoulli(5, BernoulliMethod::det_56a), UnsupportedInputError);
}

TEST_CASE("composition-shaped bernoulli forms against direct enumeration") {
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(bernoulli(n, BernoulliMethod::vella_35) == oracles::bernoulli_vella_direct(n));
        CHECK(bernoulli(n, BernoulliMethod::composition_36b) ==
              oracles::bernoulli_comp36b_direct(n));
        if (n != 1)
            CHECK(bernoulli(n, BernoulliMethod::general_41) ==
                  oracles::bernoulli_general41_direct(n));
    }
}

TEST_CASE("euler anchors") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(3) == 0);
    CHECK(euler_number(10) == -50521);
    CHECK(euler_number(20) == Int("370371188237525"));
}

TEST_CASE("every applicable euler method equals the secant recurrence") {
    const auto oracle = euler_table(20);
    for (std::size_t n = 0; n <= 20; ++n) {
        for (const auto m : euler_methods_for(n)) {
            CHECK(euler_number(n, m) == oracle[n]);
        }
    }
}

TEST_CASE("odd euler indices vanish through the composition forms") {
    for (std::size_t n = 3; n <= 19; n += 2) {
        CHECK(euler_number(n, EulerMethod::even_composition_42) == 0);
        CHECK(euler_number(n, EulerMethod::odd_composition_prop) == 0);
    }
    CHECK_THROWS_AS(euler_number(7, EulerMethod::even_partition_39a), UnsupportedInputError);
    CHECK_THROWS_AS(euler_number(7, EulerMethod::odd_partition_48), UnsupportedInputError);
    CHECK_THROWS_AS(euler_number(1, EulerMethod::odd_composition_prop), UnsupportedInputError);
}

TEST_CASE("proposition sums against direct composition enumeration") {
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(Rat(euler_number(n, EulerMethod::odd_composition_prop)) ==
              oracles::euler_proposition_direct(n));
        CHECK(Rat(euler_number(n, EulerMethod::even_composition_42)) ==
              oracles::euler_comp42_direct(n));
    }
}

TEST_CASE("euler recursion check") {
    const auto base = euler_recursion_check(1);
    CHECK(base.pass);
    CHECK(base.lhs == -1);
    const auto r5 = euler_recursion_check(5);
    CHECK(r5.pass);
    CHECK(r5.lhs == -50521);
    for (std::size_t p = 1; p <= 6; ++p) CHECK(euler_recursion_check(p).pass);
}

TEST_CASE("per-term signs of the odd-partition form match the composition form") {
    // aggregate |terms| by the composition count N on both sides
    for (std::size_t p = 1; p <= 6; ++p) {
        std::map<std::uint64_t, Int> from_compositions;
        for_each_composition(2 * p - 1, [&](const std::vector<std::uint64_t>& q) {
            if (q.size() % 2 == 0) return;
            for (const auto qi : q)
                if (qi % 2 == 0) return;
            from_compositions[(q.size() + 1) / 2] += multinomial(2 * p - 1, q);
        });

        std::map<std::uint64_t, Int> from_partitions;
        std::vector<std::uint64_t> parts;
        for (std::size_t m = 1; m <= p; ++m) parts.push_back(2 * m - 1);
        for_each_exponent_vector(2 * p - 1, parts, [&](const std::vector<std::uint64_t>& k) {
            std::uint64_t K = 0, weighted = 0;
            Int mult = ordering_count(k) * factorial(2 * p - 1);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                K += k[i];
                weighted += (i + 1) * k[i];  // sum of m k_m
                mult /= int_pow(factorial(parts[i]), k[i]);
            }
            REQUIRE(K % 2 == 1);
            const std::uint64_t N = (K + 1) / 2;
            // the sign law: (-1)^{p-1+sum m k_m} = (-1)^N
            CHECK(((p - 1 + weighted) % 2) == (N % 2));
            from_partitions[N] += mult;
        });

        CHECK(from_compositions == from_partitions);
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(0, Rat(7, 3)) == Rat(1));
    CHECK(bernoulli_poly(2, Rat(0)) == Rat(1, 6));
    CHECK(bernoulli_poly(1, Rat(1, 2)) == Rat(0));
    const auto table = bernoulli_table(12);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(bernoulli_poly(n, Rat(0)) == table[n]);
        for (const Rat x : {Rat(1), Rat(-2), Rat(1, 3), Rat(5, 7)}) {
            CHECK(bernoulli_poly(n, x) == oracles::bernoulli_poly_classical(n, x, table));
        }
    }
}

TEST_CASE("euler polynomials") {
    CHECK(euler_poly(0, Rat(-5)) == Rat(1));
    CHECK(euler_poly(1, Rat(0)) == Rat(-1, 2));
    CHECK(euler_poly(10, Rat(1, 2)) == Rat(-50521, 1024));
    const auto etable = euler_table(16);
    for (std::size_t n = 0; n <= 16; ++n) {
        CHECK(rat_pow(Rat(2), static_cast<long long>(n)) * euler_poly(n, Rat(1, 2)) ==
              Rat(etable[n]));
        for (const Rat x : {Rat(1), Rat(-1), Rat(2, 5)}) {
            CHECK(euler_poly(n, x) == oracles::euler_poly_classical(n, x, etable));
        }
    }
}

TEST_CASE("partial Bell polynomials") {
    CHECK(bell_partial(4, 4, {Rat(3)}) == Rat(81));   // x1^n when k = n
    CHECK(bell_partial(5, 2, {Rat(1), Rat(1), Rat(1), Rat(1)}) == Rat(15));
    CHECK(bell_partial(3, 1, {Rat(0), Rat(0), Rat(1)}) == Rat(1));
    CHECK_THROWS_AS(bell_partial(5, 2, {Rat(1), Rat(1)}), ArityError);
    CHECK_THROWS_AS(bell_partial(2, 3, {Rat(1)}), std::out_of_range);

    SECTION("all-ones arguments give Stirling numbers of the second kind") {
        for (std::size_t n = 0; n <= 12; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                const std::vector<Rat> ones(n - k + 1, Rat(1));
                CHECK(bell_partial(n, k, ones) == Rat(stirling2_triangle(n, k)));
            }
        }
    }
}

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2(7, 0) == 1);             // S(n, n)
    CHECK(stirling2(4, 2) == 7);              // S(4, 2)
    CHECK(stirling2(6, 3) == 90);             // S(6, 3)
    CHECK_THROWS_AS(stirling2(3, 4), std::out_of_range);
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::size_t p = 0; p <= n; ++p) {
            const Int want = stirling2_triangle(n, n - p);
            CHECK(stirling2(n, p) == want);
            CHECK(stirling2_det_56c(n, p) == want);
        }
    }
}

TEST_CASE("higher-order bernoulli numbers") {
    CHECK(higher_bernoulli(0, 4) == Rat(1));
    CHECK(higher_bernoulli(2, 1) == Rat(1, 6));
    CHECK(higher_bernoulli(1, 2) == Rat(-1));
    CHECK(higher_bernoulli(3, 0) == Rat(0));
}

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling1(6, 0) == 1);              // s(n, n)
    CHECK(stirling1(4, 2) == 11);             // s(4, 2)
    CHECK(stirling1(5, 4) == 24);             // s(5, 1)
    CHECK_THROWS_AS(stirling1(0, 0), std::out_of_range);
    CHECK_THROWS_AS(stirling1(4, 4), std::out_of_range);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t p = 0; p + 1 <= n; ++p) {
            const Int want = stirling1_triangle(n, n - p);
            CHECK(stirling1(n, p) == want);
            CHECK(stirling1_partition_sum(n, p) == want);
            CHECK(stirling1_det_56d(n, p) == want);
        }
    }

    SECTION("absolute row sums are factorials") {
        for (std::size_t n = 1; n <= 10; ++n) {
            Int total = 0;
            for (std::size_t k = 1; k <= n; ++k) total += abs(stirling1_triangle(n, k));
            CHECK(total == factorial(n));
        }
    }
}

TEST_CASE("special determinant dispatch") {
    CHECK(special_determinant(SpecialDetKind::bernoulli_56a, 1) == Rat(1, 6));
    CHECK(special_determinant(SpecialDetKind::euler_56b, 5) == Rat(-50521));
    CHECK(special_determinant(SpecialDetKind::laplace_3, 2) == Rat(1, 6));
    CHECK(special_determinant(SpecialDetKind::stirling2_56c, 5, 3) == Rat(stirling2_triangle(5, 2)));
    CHECK(special_determinant(SpecialDetKind::stirling1_56d, 5, 3) == Rat(stirling1_triangle(5, 2)));
}
