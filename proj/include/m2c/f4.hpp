#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace m2c {

// GF(4) = F2[w] with w^2 + w + 1 = 0.  Encoding: bit0 + bit1*w, so
// 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2 (= 1 + w).  Addition is XOR, the
// multiplicative group is cyclic of order 3.
struct F4 {
    uint8_t v{0};

    constexpr F4() = default;
    constexpr explicit F4(uint8_t x) : v(static_cast<uint8_t>(x & 3)) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 w() { return F4(2); }
    static constexpr F4 w2() { return F4(3); }

    constexpr bool is_zero() const { return v == 0; }

    friend constexpr bool operator==(F4 x, F4 y) { return x.v == y.v; }
    friend constexpr bool operator!=(F4 x, F4 y) { return x.v != y.v; }
    friend constexpr bool operator<(F4 x, F4 y) { return x.v < y.v; }

    friend constexpr F4 operator+(F4 x, F4 y) { return F4(static_cast<uint8_t>(x.v ^ y.v)); }
    friend constexpr F4 operator-(F4 x, F4 y) { return x + y; }

    friend constexpr F4 operator*(F4 x, F4 y) {
        // 4x4 table; index x.v*4 + y.v
        constexpr uint8_t tab[16] = {
            0, 0, 0, 0,
            0, 1, 2, 3,
            0, 2, 3, 1,
            0, 3, 1, 2,
        };
        return F4(tab[x.v * 4 + y.v]);
    }

    F4& operator+=(F4 y) { v ^= y.v; return *this; }
    F4& operator*=(F4 y) { *this = *this * y; return *this; }
};

// Frobenius conjugation x -> x^2; fixes F2, swaps w and w^2.
constexpr F4 f4_conj(F4 x) { return x * x; }

inline F4 f4_inv(F4 x) {
    if (x.is_zero()) throw std::domain_error("f4_inv: zero has no inverse");
    constexpr uint8_t inv[4] = {0, 1, 3, 2};
    return F4(inv[x.v]);
}

constexpr F4 f4_pow(F4 x, uint64_t e) {
    if (x.is_zero()) return e == 0 ? F4(1) : F4(0);
    // x has order dividing 3
    switch (e % 3) {
        case 0: return F4(1);
        case 1: return x;
        default: return x * x;
    }
}

inline const char* f4_str(F4 x) {
    constexpr const char* s[4] = {"0", "1", "w", "w^2"};
    return s[x.v];
}

// Accepts "0", "1", "w", "w^2".
inline F4 f4_parse(const std::string& s) {
    if (s == "0") return F4(0);
    if (s == "1") return F4(1);
    if (s == "w") return F4(2);
    if (s == "w^2") return F4(3);
    throw std::invalid_argument("f4_parse: bad element '" + s + "'");
}

}  // namespace m2c
