#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "m2c/poly.hpp"

namespace m2c {

// Length <= 64 vector over GF(4), bitsliced into two planes: bit j of `lo`
// and `hi` are the low/high encoding bits of symbol j.  Symbol addition is
// two XORs; Hamming weight is a popcount of lo|hi.
struct F4Vec {
    uint64_t lo{0}, hi{0};
    int len{0};

    F4Vec() = default;
    F4Vec(uint64_t lo_, uint64_t hi_, int len_) : lo(lo_), hi(hi_), len(len_) {}
    explicit F4Vec(int len_) : len(len_) {
        if (len_ < 0 || len_ > 64) throw std::invalid_argument("F4Vec: length out of range");
    }

    F4 get(int j) const { return F4(static_cast<uint8_t>(((lo >> j) & 1) | (((hi >> j) & 1) << 1))); }

    void set(int j, F4 v) {
        uint64_t m = uint64_t(1) << j;
        lo = (lo & ~m) | (uint64_t(v.v & 1) << j);
        hi = (hi & ~m) | (uint64_t((v.v >> 1) & 1) << j);
    }

    bool is_zero() const { return lo == 0 && hi == 0; }
    int weight() const { return std::popcount(lo | hi); }

    friend F4Vec operator+(F4Vec x, F4Vec y) { return {x.lo ^ y.lo, x.hi ^ y.hi, x.len}; }
    friend bool operator==(F4Vec x, F4Vec y) { return x.lo == y.lo && x.hi == y.hi && x.len == y.len; }
    friend bool operator!=(F4Vec x, F4Vec y) { return !(x == y); }
    friend bool operator<(F4Vec x, F4Vec y) {  // for canonical ordering of rows
        if (x.hi != y.hi || x.lo != y.lo) {
            // compare symbol-wise from position 0: interleave is overkill, use lo-major
            for (int j = 0; j < x.len; ++j) {
                F4 a = x.get(j), b = y.get(j);
                if (a != b) return a < b;
            }
        }
        return false;
    }

    // w*(c0 + c1 w) = c1 + (c0+c1) w and similarly for w^2; scalar 0/1 trivial.
    F4Vec scaled(F4 s) const {
        switch (s.v) {
            case 0: return {0, 0, len};
            case 1: return *this;
            case 2: return {hi, lo ^ hi, len};
            default: return {lo ^ hi, lo, len};
        }
    }

    F4Vec shift_cyclic() const {  // multiply by X mod X^len - 1
        uint64_t mask = (len == 64) ? ~uint64_t(0) : ((uint64_t(1) << len) - 1);
        auto rot = [&](uint64_t v) { return ((v << 1) | (v >> (len - 1))) & mask; };
        return {rot(lo), rot(hi), len};
    }
};

inline F4Vec vec_from_poly(const PolyF4& p, int len) {
    if (p.deg() >= len) throw std::invalid_argument("vec_from_poly: polynomial degree exceeds length");
    F4Vec v(len);
    for (int j = 0; j <= p.deg(); ++j) v.set(j, p.coeff(j));
    return v;
}

inline PolyF4 poly_from_vec(const F4Vec& v) {
    std::vector<F4> c(static_cast<size_t>(v.len), F4(0));
    for (int j = 0; j < v.len; ++j) c[static_cast<size_t>(j)] = v.get(j);
    return PolyF4(std::move(c));
}

}  // namespace m2c
