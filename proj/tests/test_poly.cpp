#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "m2c/poly.hpp"

using namespace m2c;

namespace {

PolyF4 random_poly(std::mt19937_64& rng, int max_deg, bool monic = false, bool nonzero_const = false) {
    std::uniform_int_distribution<int> dd(0, max_deg), dc(0, 3);
    int d = dd(rng);
    std::vector<F4> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = F4(static_cast<uint8_t>(dc(rng)));
    if (monic) c.back() = F4::one();
    if (nonzero_const && c[0].is_zero()) c[0] = F4::one();
    return PolyF4(c);
}

}  // namespace

TEST_CASE("product examples with evaluation cross-check") {
    PolyF4 p = parse_poly("x+w") * parse_poly("x+w^2");
    CHECK(p == parse_poly("x^2+x+1"));
    for (int v = 0; v < 4; ++v) {
        F4 x{static_cast<uint8_t>(v)};
        CHECK(p.eval(x) == parse_poly("x+w").eval(x) * parse_poly("x+w^2").eval(x));
    }

    PolyF4 q = parse_poly("x^2+w*x+1") * parse_poly("x^2+w^2*x+1") * parse_poly("x+1");
    CHECK(q == PolyF4::xn_minus_1(5));
}

TEST_CASE("division") {
    auto dm = poly_divmod(PolyF4::xn_minus_1(3), parse_poly("x+1"));
    CHECK(dm.quot == parse_poly("x^2+x+1"));
    CHECK(dm.rem.is_zero());
    CHECK_THROWS_AS(poly_divmod(PolyF4::one(), PolyF4::zero()), std::invalid_argument);

    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 500; ++iter) {
        PolyF4 a = random_poly(rng, 20);
        PolyF4 b = random_poly(rng, 10);
        if (b.is_zero()) continue;
        auto [quot, rem] = poly_divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.deg() < b.deg());
    }
}

TEST_CASE("gcd") {
    CHECK(poly_gcd(parse_poly("x+w"), parse_poly("x+w^2")) == PolyF4::one());
    CHECK(poly_gcd(PolyF4::xn_minus_1(5), parse_poly("x^2+w*x+1")) == parse_poly("x^2+w*x+1"));
    CHECK(poly_gcd(parse_poly("w*x^2+w"), PolyF4::zero()) == parse_poly("x^2+1"));
    CHECK_THROWS_AS(poly_gcd(PolyF4::zero(), PolyF4::zero()), std::invalid_argument);

    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        PolyF4 a = random_poly(rng, 12), b = random_poly(rng, 12);
        if (a.is_zero() && b.is_zero()) continue;
        PolyF4 g = poly_gcd(a, b);
        CHECK(g.is_monic());
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        PolyF4 r = random_poly(rng, 4, true);
        CHECK(poly_gcd(a * r, b * r) == monic(g * r));
    }
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(parse_poly("x+w")) == parse_poly("x+w^2"));
    CHECK(reciprocal(parse_poly("x^2+w*x+1")) == parse_poly("x^2+w*x+1"));
    CHECK(reciprocal(parse_poly("x+1")) == parse_poly("x+1"));
    CHECK_THROWS_AS(reciprocal(parse_poly("x^2+x")), std::invalid_argument);

    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 200; ++iter) {
        PolyF4 p = random_poly(rng, 10, true, true);
        PolyF4 q = random_poly(rng, 10, true, true);
        CHECK(reciprocal(reciprocal(p)) == p);
        CHECK(reciprocal(p * q) == reciprocal(p) * reciprocal(q));
    }
}

TEST_CASE("frobenius twist") {
    CHECK(frobenius(parse_poly("x+w")) == parse_poly("x+w^2"));
    CHECK(frobenius(parse_poly("x^3+x+1")) == parse_poly("x^3+x+1"));
    CHECK(frobenius(parse_poly("x^2+w*x+w^2")) == parse_poly("x^2+w^2*x+w"));

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        PolyF4 p = random_poly(rng, 10), q = random_poly(rng, 10);
        CHECK(frobenius(p * q) == frobenius(p) * frobenius(q));
        CHECK(frobenius(frobenius(p)) == p);
        if (!p.is_zero() && !p.coeff(0).is_zero()) CHECK(frobenius(reciprocal(p)) == reciprocal(frobenius(p)));
    }
}

TEST_CASE("text format") {
    const std::string table_form = "x^5+w*x^4+x^3+x^2+w^2*x+1";
    PolyF4 p = parse_poly(table_form);
    CHECK(p.deg() == 5);
    CHECK(p.coeff(4) == F4::w());
    CHECK(p.coeff(1) == F4::w2());
    CHECK(print_poly(p) == table_form);

    CHECK(print_poly(parse_poly("x+1")) == "x+1");
    CHECK(print_poly(parse_poly("1")) == "1");
    CHECK(print_poly(PolyF4::zero()) == "0");
    CHECK(parse_poly("X^2+X") == parse_poly("x^2+x"));
    CHECK(parse_poly(" x ^2 + w * x ") == parse_poly("x^2+w*x"));
    CHECK(parse_poly("x+x") == PolyF4::zero());  // terms accumulate
    CHECK(parse_poly("0") == PolyF4::zero());

    CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("2*x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);

    // position is reported
    try {
        parse_poly("x^2+q");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }

    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        PolyF4 p = random_poly(rng, 15);
        CHECK(parse_poly(print_poly(p)) == p);
    }
}

TEST_CASE("lexicographic comparison from the constant term") {
    CHECK(PolyF4::lex_less(parse_poly("x+w"), parse_poly("x+w^2")));
    CHECK(!PolyF4::lex_less(parse_poly("x+w^2"), parse_poly("x+w")));
    CHECK(PolyF4::lex_less(parse_poly("1+x"), parse_poly("1+x+x^2")));
}
