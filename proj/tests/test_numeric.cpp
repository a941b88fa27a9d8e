#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "seqkernel/numeric.hpp"

using namespace seqkernel;

TEST_CASE("generalized binomial coefficients") {
    CHECK(gen_binomial(Rat(-1), 3) == Rat(-1));
    CHECK(gen_binomial(Rat(1, 2), 2) == Rat(-1, 8));
    CHECK(gen_binomial(Rat(5), 7) == Rat(0));
    CHECK(gen_binomial(Rat(7, 3), 0) == Rat(1));
    // integer top reduces to the ordinary binomial
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(gen_binomial(Rat(Int(n)), k) == Rat(binomial(n, k)));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 7) == 0);
}

TEST_CASE("exact rational powers") {
    CHECK(rat_pow(Rat(-2), 3) == Rat(-8));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(-1), -3) == Rat(-1));
    CHECK(rat_pow(Rat(-2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(-2, 3), -3) == Rat(-27, 8));
    CHECK(rat_pow_exact(Rat(4), Rat(1, 2)) == Rat(2));
    CHECK(rat_pow_exact(Rat(8), Rat(2, 3)) == Rat(4));
    CHECK(rat_pow_exact(Rat(1, 4), Rat(1, 2)) == Rat(1, 2));
    CHECK(rat_pow_exact(Rat(-8), Rat(1, 3)) == Rat(-2));
    CHECK(rat_pow_exact(Rat(1), Rat(7, 3)) == Rat(1));
    CHECK(rat_pow_exact(Rat(5), Rat(-2)) == Rat(1, 25));
    CHECK_THROWS_AS(rat_pow_exact(Rat(2), Rat(1, 2)), NotRepresentableError);
    CHECK_THROWS_AS(rat_pow_exact(Rat(-4), Rat(1, 2)), NotRepresentableError);
}

TEST_CASE("integer roots") {
    CHECK(*exact_iroot(Int(343), 3) == 7);
    CHECK(!exact_iroot(Int(12), 2).has_value());
    CHECK(*exact_iroot(Int(1) << 40, 8) == 32);
    CHECK(iroot_floor(Int(26), 3) == 2);
}

TEST_CASE("value strings round-trip through exact parsing") {
    CHECK(rat_to_string(Rat(-691, 2730)) == "-691/2730");
    CHECK(rat_to_string(Rat(42)) == "42");
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99991);
    for (int i = 0; i < 200; ++i) {
        const Rat r(num(rng), den(rng));
        CHECK(rat_from_string(rat_to_string(r)) == r);
    }
    CHECK(rat_from_string("3646072432125") == Rat(Int("3646072432125")));
}

TEST_CASE("bit sizes") {
    CHECK(bit_size(Int(0)) == 1);
    CHECK(bit_size(Int(1)) == 1);
    CHECK(bit_size(Int(-8)) == 4);
    CHECK(bit_size(Rat(1023, 7)) == 10);
}
