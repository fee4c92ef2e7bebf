#include <doctest.h>

#include "prodeq/exact.hpp"

using namespace prodeq;

TEST_CASE("ExactCount arithmetic and decimal serialization") {
    ExactCount a(123456789);
    ExactCount b(1000000000);
    CHECK((a * b).str() == "123456789000000000");
    CHECK((a + b).str() == "1123456789");
    CHECK(ExactCount(0).str() == "0");

    // a value beyond 64 bits
    ExactCount big = checked_pow(10, 25);
    CHECK(big.str() == "10000000000000000000000000");
    CHECK(big > ExactCount(~u64(0)));
}

TEST_CASE("ExactCount overflow is an error, never a wrap") {
    ExactCount max = ExactCount::from_raw(~u128(0));
    CHECK_THROWS_AS(max + ExactCount(1), std::overflow_error);
    ExactCount half = checked_pow(2, 127);
    CHECK_THROWS_AS(half * ExactCount(2), std::overflow_error);
    CHECK_THROWS_AS(ExactCount(1) - ExactCount(2), std::underflow_error);
    CHECK_THROWS_AS(checked_pow(10, 40), std::overflow_error);
}

TEST_CASE("Rat reduces and compares exactly") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(3, 2) + Rat(1, 6) == Rat(5, 3));
    CHECK(Rat(1, 3) * Rat(3, 7) == Rat(1, 7));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(7, 3).str() == "7/3");
    CHECK(Rat::integer(-4).str() == "-4");
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0, 5), std::invalid_argument);
}

TEST_CASE("Rat to_double") {
    CHECK(Rat(3, 2).to_double() == doctest::Approx(1.5));
    CHECK((Rat(1, 3) + Rat(1, 6)).to_double() == doctest::Approx(0.5));
}
