#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "m2c/f4.hpp"

namespace m2c {

// 2x2 matrix over F2, packed row-major into 4 bits: m00 | m01<<1 | m10<<2 | m11<<3.
struct MatF2 {
    uint8_t bits{0};

    constexpr MatF2() = default;
    constexpr explicit MatF2(uint8_t b) : bits(static_cast<uint8_t>(b & 0xf)) {}
    constexpr MatF2(int m00, int m01, int m10, int m11)
        : bits(static_cast<uint8_t>((m00 & 1) | (m01 & 1) << 1 | (m10 & 1) << 2 | (m11 & 1) << 3)) {}

    constexpr int at(int r, int c) const { return (bits >> (2 * r + c)) & 1; }

    friend constexpr bool operator==(MatF2 x, MatF2 y) { return x.bits == y.bits; }
    friend constexpr bool operator!=(MatF2 x, MatF2 y) { return x.bits != y.bits; }

    friend constexpr MatF2 operator+(MatF2 x, MatF2 y) { return MatF2(static_cast<uint8_t>(x.bits ^ y.bits)); }

    friend constexpr MatF2 operator*(MatF2 x, MatF2 y) {
        int a = x.at(0, 0), b = x.at(0, 1), c = x.at(1, 0), d = x.at(1, 1);
        int e = y.at(0, 0), f = y.at(0, 1), g = y.at(1, 0), h = y.at(1, 1);
        return MatF2((a & e) ^ (b & g), (a & f) ^ (b & h), (c & e) ^ (d & g), (c & f) ^ (d & h));
    }

    constexpr int det() const { return (at(0, 0) & at(1, 1)) ^ (at(0, 1) & at(1, 0)); }
    constexpr bool is_zero() const { return bits == 0; }
};

// The ring A = M2(F2) of order 16, held as a pair (a, b) meaning a + i*b with
// a, b in GF(4).  Constitutive relations: i*w = w^2*i and i^2 = 1, making
// u = 1 + i nilpotent (u^2 = 0).  Multiplication is the i-left expansion
//   (a + ib)(c + id) = (ac + conj(b)d) + i(conj(a)d + bc),
// frozen once from the relations; the matrix model below is kept as an
// independent oracle.
struct AElem {
    F4 a, b;  // a + i*b

    constexpr AElem() = default;
    constexpr AElem(F4 a_, F4 b_) : a(a_), b(b_) {}

    static constexpr AElem zero() { return {F4(0), F4(0)}; }
    static constexpr AElem one() { return {F4(1), F4(0)}; }
    static constexpr AElem i() { return {F4(0), F4(1)}; }
    static constexpr AElem u() { return {F4(1), F4(1)}; }  // 1 + i
    static constexpr AElem scalar(F4 s) { return {s, F4(0)}; }

    constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }

    constexpr int index() const { return a.v | (b.v << 2); }
    static constexpr AElem from_index(int k) { return {F4(static_cast<uint8_t>(k & 3)), F4(static_cast<uint8_t>((k >> 2) & 3))}; }

    friend constexpr bool operator==(AElem x, AElem y) { return x.a == y.a && x.b == y.b; }
    friend constexpr bool operator!=(AElem x, AElem y) { return !(x == y); }

    friend constexpr AElem operator+(AElem x, AElem y) { return {x.a + y.a, x.b + y.b}; }
};

constexpr AElem a_mul(AElem x, AElem y) {
    return {x.a * y.a + f4_conj(x.b) * y.b, f4_conj(x.a) * y.b + x.b * y.a};
}

constexpr AElem operator*(AElem x, AElem y) { return a_mul(x, y); }

// conj(a + ib) = conj(a) + ib; an involutive anti-automorphism with
// x * conj(x) = det(x) * 1 (checked exhaustively in the test suite).
constexpr AElem a_conj(AElem x) { return {f4_conj(x.a), x.b}; }

// u-coordinates: a + ib = a' + u*b' with a' = a + b, b' = b.
constexpr std::array<F4, 2> to_u_coords(AElem x) { return {x.a + x.b, x.b}; }
constexpr AElem from_u_coords(F4 ap, F4 bp) { return {ap + bp, bp}; }

// Matrix model with i = [[0,1],[1,0]], w = [[0,1],[1,1]].
constexpr MatF2 mat_of_f4(F4 x) {
    // 0, 1, w, w^2 = 1 + w
    constexpr uint8_t m[4] = {
        0x0,                       // 0
        0x9,                       // identity
        0xe,                       // [[0,1],[1,1]]
        0x7,                       // [[1,1],[1,0]]
    };
    return MatF2(m[x.v]);
}

constexpr MatF2 to_matrix(AElem x) {
    constexpr MatF2 mi(0, 1, 1, 0);
    return mat_of_f4(x.a) + mi * mat_of_f4(x.b);
}

inline AElem from_matrix(MatF2 m) {
    for (int k = 0; k < 16; ++k) {
        AElem x = AElem::from_index(k);
        if (to_matrix(x) == m) return x;
    }
    throw std::logic_error("from_matrix: unreachable");
}

// Bachoc weight: 0 for zero, 1 for invertible, 2 for singular nonzero.
// Coincides with the Hamming weight of the pair (a, b); both routes are
// checked against each other exhaustively in tests.
constexpr int bachoc_weight(AElem x) {
    if (x.is_zero()) return 0;
    return to_matrix(x).det() == 1 ? 1 : 2;
}

std::string a_str(AElem x);          // canonical "a+i*b" form
std::string a_str_u(AElem x);        // "a+u*b" view
AElem a_parse(const std::string& s); // accepts both forms

}  // namespace m2c
