#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m2c/ring_a.hpp"

using namespace m2c;

TEST_CASE("GF(4) arithmetic") {
    F4 w = F4::w(), w2 = F4::w2(), one = F4::one();
    CHECK(w * w == w2);
    CHECK(w * w2 == one);
    CHECK(w2 * w2 == w);
    CHECK(w + w2 == one);          // w^2 + w + 1 = 0
    CHECK(f4_pow(w, 3) == one);    // cyclic of order 3
    CHECK(f4_inv(w) == w2);
    CHECK(f4_inv(w2) == w);
    CHECK(f4_inv(one) == one);
    CHECK_THROWS_AS(f4_inv(F4::zero()), std::domain_error);

    // field axioms, exhaustively
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            F4 x{static_cast<uint8_t>(a)}, y{static_cast<uint8_t>(b)};
            CHECK(x * y == y * x);
            CHECK(x + y == y + x);
            for (int c = 0; c < 4; ++c) {
                F4 z{static_cast<uint8_t>(c)};
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
            if (!y.is_zero()) CHECK(y * f4_inv(y) == one);
        }
}

TEST_CASE("Frobenius conjugation on GF(4)") {
    CHECK(f4_conj(F4::w()) == F4::w2());
    CHECK(f4_conj(F4::w2()) == F4::w());
    CHECK(f4_conj(F4::one()) == F4::one());
    CHECK(f4_conj(F4::zero()) == F4::zero());
    for (int a = 0; a < 4; ++a) {
        F4 x{static_cast<uint8_t>(a)};
        CHECK(f4_conj(x) == x * x);
        CHECK(f4_conj(f4_conj(x)) == x);
    }
}

TEST_CASE("matrix model constants") {
    // i = [[0,1],[1,0]], w = [[0,1],[1,1]]
    CHECK(to_matrix(AElem::i()) == MatF2(0, 1, 1, 0));
    CHECK(to_matrix(AElem::scalar(F4::w())) == MatF2(0, 1, 1, 1));
    CHECK(to_matrix(AElem::one()) == MatF2(1, 0, 0, 1));
    CHECK(to_matrix(AElem::u()) == MatF2(1, 1, 1, 1));
}

TEST_CASE("ring multiplication agrees with the matrix model on all 256 pairs") {
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) {
            AElem ax = AElem::from_index(x), ay = AElem::from_index(y);
            CHECK(to_matrix(a_mul(ax, ay)) == to_matrix(ax) * to_matrix(ay));
        }
}

TEST_CASE("constitutive relations") {
    AElem i = AElem::i(), u = AElem::u();
    AElem w = AElem::scalar(F4::w()), w2 = AElem::scalar(F4::w2());
    CHECK(a_mul(i, w) == a_mul(w2, i));           // i w = w^2 i
    CHECK(a_mul(i, i) == AElem::one());           // i^2 = 1
    CHECK(a_mul(u, u) == AElem::zero());          // u nilpotent
    CHECK(a_mul(u, w) != a_mul(w, u));            // non-commutativity witness
    for (int x = 0; x < 16; ++x) {
        AElem ax = AElem::from_index(x);
        CHECK(a_mul(AElem::one(), ax) == ax);
        CHECK(a_mul(ax, AElem::one()) == ax);
    }
}

TEST_CASE("associativity and distributivity, exhaustively") {
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y)
            for (int z = 0; z < 16; ++z) {
                AElem ax = AElem::from_index(x), ay = AElem::from_index(y), az = AElem::from_index(z);
                CHECK(a_mul(a_mul(ax, ay), az) == a_mul(ax, a_mul(ay, az)));
                CHECK(a_mul(ax, ay + az) == a_mul(ax, ay) + a_mul(ax, az));
                CHECK(a_mul(ax + ay, az) == a_mul(ax, az) + a_mul(ay, az));
            }
}

TEST_CASE("conjugation is an involutive anti-automorphism with the norm law") {
    CHECK(a_conj({F4::w(), F4::zero()}) == AElem{F4::w2(), F4::zero()});
    CHECK(a_conj(AElem::i()) == AElem::i());
    for (int x = 0; x < 16; ++x) {
        AElem ax = AElem::from_index(x);
        CHECK(a_conj(a_conj(ax)) == ax);
        AElem norm = a_mul(ax, a_conj(ax));
        int det = to_matrix(ax).det();
        CHECK(norm == (det ? AElem::one() : AElem::zero()));
        for (int y = 0; y < 16; ++y) {
            AElem ay = AElem::from_index(y);
            CHECK(a_conj(a_mul(ax, ay)) == a_mul(a_conj(ay), a_conj(ax)));
        }
    }
}

TEST_CASE("Bachoc weight: singular/regular rule and Hamming equivalence") {
    CHECK(bachoc_weight(AElem::zero()) == 0);
    CHECK(bachoc_weight(AElem::u()) == 2);
    CHECK(bachoc_weight(AElem::scalar(F4::w())) == 1);
    for (int x = 0; x < 16; ++x) {
        AElem ax = AElem::from_index(x);
        MatF2 m = to_matrix(ax);
        int expected = m.is_zero() ? 0 : (m.det() == 1 ? 1 : 2);
        CHECK(bachoc_weight(ax) == expected);
        int hamming = (ax.a.is_zero() ? 0 : 1) + (ax.b.is_zero() ? 0 : 1);
        CHECK(bachoc_weight(ax) == hamming);
    }
}

TEST_CASE("representation round trips") {
    // u = 0 + u*1, i = 1 + u*1, w = w + u*0
    CHECK(to_u_coords(AElem::u()) == std::array<F4, 2>{F4::zero(), F4::one()});
    CHECK(to_u_coords(AElem::i()) == std::array<F4, 2>{F4::one(), F4::one()});
    CHECK(to_u_coords(AElem::scalar(F4::w())) == std::array<F4, 2>{F4::w(), F4::zero()});
    for (int x = 0; x < 16; ++x) {
        AElem ax = AElem::from_index(x);
        auto [ap, bp] = to_u_coords(ax);
        CHECK(from_u_coords(ap, bp) == ax);
        CHECK(from_matrix(to_matrix(ax)) == ax);
    }
}

TEST_CASE("element text round trips") {
    for (int x = 0; x < 16; ++x) {
        AElem ax = AElem::from_index(x);
        CHECK(a_parse(a_str(ax)) == ax);
        CHECK(a_parse(a_str_u(ax)) == ax);
    }
    CHECK(a_parse("1+i*1") == AElem::i() + AElem::one());
    CHECK(a_parse("0+u*1") == AElem::u());
    CHECK(a_parse("i") == AElem::i());
    CHECK(a_parse("u") == AElem::u());
    CHECK(a_parse(" w^2 + i*w ") == AElem{F4::w2(), F4::w()});
    CHECK_THROWS_AS(a_parse("i*w+u*1"), std::invalid_argument);
    CHECK_THROWS_AS(a_parse("q"), std::invalid_argument);
}
