#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "prodeq/constants.hpp"
#include "prodeq/fc_sets.hpp"

using namespace prodeq;

TEST_CASE("closure and validation") {
    CHECK(FcSet::closure({1}).elements() == std::vector<u64>{1});
    CHECK(FcSet::closure({6}).elements() == std::vector<u64>{1, 2, 3, 6});
    CHECK(FcSet::closure({4, 6}).elements() == std::vector<u64>{1, 2, 3, 4, 6});
    CHECK(FcSet::closure({}).elements() == std::vector<u64>{1});
    CHECK_NOTHROW(FcSet::checked({1, 2, 3, 6}));
    CHECK_THROWS_WITH_AS(FcSet::checked({1, 2, 6}), doctest::Contains("3"),
                         std::invalid_argument);
    CHECK_THROWS_AS(FcSet::checked({2, 4}), std::invalid_argument);  // missing 1
}

TEST_CASE("prime family basics") {
    PrimeFamily fam({2, 3});
    CHECK(fam.k() == 2);
    CHECK(fam.primorial() == 6);
    CHECK(fam.induced_set().elements() == std::vector<u64>{1, 2, 3, 6});
    CHECK(fam.member(6));
    CHECK(!fam.member(4));
    CHECK(!fam.member(5));
    CHECK(fam.omega_in_family(6) == 2);
    CHECK_THROWS_AS(PrimeFamily({4}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFamily({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFamily({}), std::invalid_argument);
}

TEST_CASE("N(B,F) all three routes") {
    FcSet F6 = FcSet::checked({1, 2, 3, 6});
    CHECK(count_nbf_oracle(6, F6).str() == "50");
    CHECK(count_nbf_formula(6, F6).str() == "50");
    CHECK(count_nbf_prime_family(6, PrimeFamily({2, 3})).str() == "50");

    FcSet F4 = FcSet::checked({1, 2, 4});
    CHECK(count_nbf_oracle(4, F4).str() == "22");
    CHECK(count_nbf_formula(4, F4).str() == "22");

    FcSet unit = FcSet::checked({1});
    for (u64 B : {u64(1), u64(7), u64(100)}) {
        CHECK(count_nbf_oracle(B, unit) == ExactCount(B));
        CHECK(count_nbf_formula(B, unit) == ExactCount(B));
    }

    CHECK(count_nbf_prime_family(2, PrimeFamily({2})).str() == "6");
    CHECK(count_nbf_prime_family(1, PrimeFamily({2, 3})).str() == "4");

    // against raw enumeration
    for (const auto& elems :
         {std::vector<u64>{1, 2}, {1, 3, 9}, {1, 2, 3, 6}, {1, 2, 4, 8}, {1, 2, 3, 4, 6, 12}}) {
        FcSet F = FcSet::checked(elems);
        for (u64 B = 1; B <= 10; ++B) {
            CAPTURE(B);
            u64 brute = oracles::count_nbf_brute(B, elems);
            CHECK(count_nbf_oracle(B, F) == ExactCount(brute));
            CHECK(count_nbf_formula(B, F) == ExactCount(brute));
        }
    }
}

TEST_CASE("sigma for prime families") {
    PrimeFamily f2({2, 3});
    CHECK(sigma_prime_family(1, 1, f2).str() == "4");
    CHECK(sigma_prime_family(2, 3, f2).str() == "1");
    PrimeFamily f3({2, 3, 5});
    CHECK(sigma_prime_family(2, 15, f3).str() == "1");
    CHECK_THROWS_AS(sigma_prime_family(4, 3, f2), std::invalid_argument);   // outside family
    CHECK_THROWS_AS(sigma_prime_family(2, 6, f2), std::invalid_argument);   // not coprime
}

TEST_CASE("sandwich bounds on worked points") {
    PrimeFamily f23({2, 3});
    LowerBoundResult lo6 = np_lower_bound(6, f23);
    CHECK(lo6.exact_value == Rat::integer(46));
    CHECK(lo6.hypothesis_ok);
    CHECK(lo6.value <= 50.0);

    LowerBoundResult lo12 = np_lower_bound(12, f23);
    CHECK(lo12.exact_value == Rat::integer(92));
    CHECK(count_nbf_prime_family(12, f23).to_double() >= 92.0);

    PrimeFamily f2({2});
    LowerBoundResult lo2 = np_lower_bound(2, f2);
    CHECK(lo2.exact_value == Rat::integer(6));
    CHECK(count_nbf_prime_family(2, f2) == ExactCount(6));  // tight here

    CHECK(!np_lower_bound(5, f23).hypothesis_ok);

    CHECK(np_upper_form(6, f23, 0.0) == doctest::Approx(6 * 6.25 + 16));
    CHECK(np_upper_form(6, f23, 0.0) >= 50.0);
    CHECK(np_upper_form(6, f23, 1.0) <= np_upper_form(6, f23, 2.0));

    std::vector<u64> grid{6, 12, 18, 24};
    double c = fit_upper_c(f23, grid);
    CHECK(std::isfinite(c));
    for (u64 B : grid)
        CHECK(count_nbf_prime_family(B, f23).to_double() <= np_upper_form(B, f23, c) + 1e-9);

    FcBoundBracket br = theorem_np_bracket(12, f23, grid);
    CHECK(br.hypothesis_ok);
    CHECK(br.lower <= br.exact.to_double());
    CHECK(br.exact.to_double() <= br.upper_at_fitted_c + 1e-9);
    CHECK(br.fitted_c >= 0.0);
}

TEST_CASE("product identity") {
    PrimeFamily f23({2, 3});
    ProductIdentityResult r1 = product_identity_X(Rat::integer(1), f23);
    CHECK(r1.lhs == Rat::integer(2));
    CHECK(r1.rhs == Rat::integer(2));
    ProductIdentityResult r2 = product_identity_X(Rat::integer(2), f23);
    CHECK(r2.lhs == Rat(35, 24));
    CHECK(r2.rhs == Rat(35, 24));
    ProductIdentityResult rneg = product_identity_X(Rat::integer(-3), f23);
    CHECK(rneg.lhs == rneg.rhs);
    CHECK_THROWS_AS(product_identity_X(Rat(0, 1), f23), std::invalid_argument);
}

TEST_CASE("weierstrass brackets") {
    WeierstrassBracket one = weierstrass_bracket({Rat(1, 4)});
    CHECK(one.lower == Rat(5, 4));
    CHECK(one.product == Rat(5, 4));
    CHECK(one.upper == Rat(4, 3));

    WeierstrassBracket two = weierstrass_bracket({Rat(1, 4), Rat(1, 6)});
    CHECK(two.lower == Rat(17, 12));
    CHECK(two.product == Rat(35, 24));
    CHECK(two.upper == Rat(12, 7));

    WeierstrassBracket tenth = weierstrass_bracket({Rat(1, 10), Rat(1, 10)});
    CHECK(tenth.lower.to_double() == doctest::Approx(1.2));
    CHECK(tenth.product.to_double() == doctest::Approx(1.21));
    CHECK(tenth.upper.to_double() == doctest::Approx(1.25));

    CHECK_THROWS_AS(weierstrass_bracket({}), std::invalid_argument);
    CHECK_THROWS_AS(weierstrass_bracket({Rat(3, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(weierstrass_bracket({Rat(1, 2), Rat(1, 2)}), std::invalid_argument);
}

TEST_CASE("coarse bounds") {
    SieveTable s(1'000, {2});
    FcSet F6 = FcSet::checked({1, 2, 3, 6});
    PropBoundResult p = prop_n_bound(6, F6);
    CHECK(p.value == doctest::Approx(108.0));
    CHECK(p.hypothesis_ok);
    CHECK(!prop_n_bound(3, F6).hypothesis_ok);
    CHECK(prop_n_bound(5, FcSet::checked({1})).value == doctest::Approx(25.0));
    CHECK(prop_n_bound(4, FcSet::checked({1, 2, 4})).value == doctest::Approx(40.0));

    CHECK(otherprop_bound(7, FcSet::checked({1}), s) == doctest::Approx(8 * kPi * 7 + 1));
    CHECK(otherprop_bound(6, F6, s) == doctest::Approx(768 * kPi + 36));
}

TEST_CASE("product-set family bound") {
    NfCheckResult r = theorem_nf_check(4, 0.5);
    CHECK(r.f_elements == std::vector<u64>{1, 2, 4});
    CHECK(r.exact.str() == "22");
    CHECK(r.bound == doctest::Approx((1 + 12 / (kPi * kPi) + 0.5) * 16));
    CHECK(r.exact.to_double() <= r.bound);

    NfCheckResult r0 = theorem_nf_check(9, 0.0);
    CHECK(r0.f_elements == std::vector<u64>{1});
    CHECK(r0.exact == ExactCount(9));
    CHECK(r0.exact.to_double() <= r0.bound);

    CHECK_THROWS_AS(theorem_nf_check(4, 0.7), std::invalid_argument);
}

TEST_CASE("all FC subsets enumeration") {
    auto subs = all_fc_subsets(6);
    for (const FcSet& F : subs) {
        CHECK(F.contains(1));
        for (u64 n : F.elements())
            for (u64 d = 1; d <= n; ++d)
                if (n % d == 0) CHECK(F.contains(d));
    }
    CHECK(subs.size() > 10);
    auto subs12 = all_fc_subsets(12);
    CHECK(subs12.size() == 252);
}
