#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "m2c/factor.hpp"

using namespace m2c;

namespace {

std::set<std::string> factor_strings(const FactorizationOfXnMinus1& fac) {
    std::set<std::string> out;
    for (const auto& f : fac.factors()) out.insert(print_poly(f));
    return out;
}

}  // namespace

TEST_CASE("cyclotomic cosets") {
    auto c7 = cyclotomic_cosets(7);
    REQUIRE(c7.size() == 3);
    CHECK(c7[0].members == std::vector<int>{0});
    CHECK(c7[1].members == std::vector<int>{1, 2, 4});
    CHECK(c7[2].members == std::vector<int>{3, 5, 6});

    auto c5 = cyclotomic_cosets(5);
    REQUIRE(c5.size() == 3);
    CHECK(c5[1].members == std::vector<int>{1, 4});
    CHECK(c5[2].members == std::vector<int>{2, 3});

    auto c1 = cyclotomic_cosets(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].members == std::vector<int>{0});

    CHECK_THROWS_AS(cyclotomic_cosets(4), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_cosets(0), std::invalid_argument);
}

TEST_CASE("order of 4") {
    CHECK(order_of_4(5) == 2);
    CHECK(order_of_4(31) == 5);
    CHECK(order_of_4(3) == 1);
    CHECK(order_of_4(1) == 1);
    CHECK(order_of_4(61) == 30);  // largest case at lengths <= 63
}

TEST_CASE("self-dual existence criterion") {
    CHECK_FALSE(selfdual_exists(5).exists);
    CHECK(selfdual_exists(5).power_j == 1);
    CHECK_FALSE(selfdual_exists(13).exists);
    CHECK(selfdual_exists(13).power_j == 3);
    CHECK(selfdual_exists(15).exists);
    CHECK(selfdual_exists(7).exists);
    CHECK_FALSE(selfdual_exists(29).exists);  // 4^7 = 16384 = -1 (mod 29)
    CHECK(selfdual_exists(29).power_j == 7);

    // agreement with an independent coset-symmetry scan
    for (int n = 1; n <= 201; n += 2) {
        bool any_asym = false;
        for (const auto& cs : cyclotomic_cosets(n)) {
            int neg = (n - cs.representative) % n;
            if (!std::binary_search(cs.members.begin(), cs.members.end(), neg)) any_asym = true;
        }
        CHECK(selfdual_exists(n).exists == any_asym);
    }

    // odd order of 4 implies existence (one-way)
    for (int n = 3; n <= 63; n += 2)
        if (order_of_4(n) % 2 == 1) CHECK(selfdual_exists(n).exists);
}

TEST_CASE("factorization of X^5+1 and X^3+1") {
    auto f5 = factorize_xn_minus_1(5);
    CHECK(factor_strings(f5) == std::set<std::string>{"x+1", "x^2+w*x+1", "x^2+w^2*x+1"});
    auto f3 = factorize_xn_minus_1(3);
    CHECK(factor_strings(f3) == std::set<std::string>{"x+1", "x+w", "x+w^2"});
    auto f1 = factorize_xn_minus_1(1);
    CHECK(factor_strings(f1) == std::set<std::string>{"x+1"});
}

TEST_CASE("named factors at lengths 15, 21, 27, 31") {
    auto s15 = factor_strings(factorize_xn_minus_1(15));
    for (const char* t : {"x^2+x+w", "x^2+x+w^2", "x+w", "x+w^2", "x+1", "x^2+w*x+1", "x^2+w^2*x+1"})
        CHECK(s15.count(t));

    auto s21 = factor_strings(factorize_xn_minus_1(21));
    for (const char* t : {"x^3+x+1", "x^3+w*x+1", "x^3+w^2*x+1", "x+w", "x+w^2", "x+1"}) CHECK(s21.count(t));

    auto s27 = factor_strings(factorize_xn_minus_1(27));
    for (const char* t : {"x+w", "x^3+w", "x^9+w", "x+1"}) CHECK(s27.count(t));

    // the factorization is x+1 times all six irreducible binary quintics;
    // the published list of three named quintics misprints the third one
    // (x^5+x^2+x+1 has root 1), the intended factor being x^5+x^4+x^2+x+1
    auto s31 = factor_strings(factorize_xn_minus_1(31));
    for (const char* t : {"x^5+x^2+1", "x^5+x^3+x^2+x+1", "x^5+x^4+x^2+x+1"}) CHECK(s31.count(t));
    // and their reciprocals
    for (const char* t : {"x^5+x^3+1", "x^5+x^4+x^3+x^2+1", "x^5+x^4+x^3+x+1"}) CHECK(s31.count(t));
    CHECK(parse_poly("x^5+x^2+x+1").eval(F4::one()).is_zero());  // the misprint is reducible
}

TEST_CASE("structural invariants for every odd length up to 63") {
    for (int n = 1; n <= 63; n += 2) {
        auto fac = factorize_xn_minus_1(n);
        CHECK(fac.product() == PolyF4::xn_minus_1(n));

        std::vector<PolyF4> fs = fac.factors();
        for (size_t i = 0; i < fs.size(); ++i) {
            CHECK(fs[i].deg() == static_cast<int>(fac.items[i].coset.members.size()));
            CHECK(fs[i].is_monic());
            if (fs[i].deg() > 1)
                for (int v = 0; v < 4; ++v) CHECK(!fs[i].eval(F4(static_cast<uint8_t>(v))).is_zero());
            for (size_t j = i + 1; j < fs.size(); ++j) CHECK(poly_gcd(fs[i], fs[j]).is_one());
        }

        // reciprocal pairing = coset negation pairing, and it is an involution
        for (size_t i = 0; i < fs.size(); ++i) {
            int p = fac.partner[i];
            CHECK(fac.partner[static_cast<size_t>(p)] == static_cast<int>(i));
            CHECK(reciprocal(fs[i]) == fs[static_cast<size_t>(p)]);
            int neg = (n - fac.items[i].coset.representative) % n;
            const auto& pm = fac.items[static_cast<size_t>(p)].coset.members;
            CHECK(std::binary_search(pm.begin(), pm.end(), neg));
        }

        // the coset {0} yields x+1
        CHECK(print_poly(fac.items[0].factor) == "x+1");

        // existence predicate matches asymmetric-coset presence
        bool any_asym = false;
        for (size_t i = 0; i < fs.size(); ++i)
            if (fac.partner[i] != static_cast<int>(i)) any_asym = true;
        CHECK(selfdual_exists(n).exists == any_asym);
    }
}
