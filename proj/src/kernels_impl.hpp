#pragma once

// Internals shared by the scalar and AVX2 kernel translation units.

#include <array>
#include <cstdint>
#include <vector>

#include "m2c/kernels.hpp"

namespace m2c::detail {

// mult[j*4 + s] = s * row_j, so a digit change a -> b XORs mult[j*4 + (a^b)].
// Scalar multiplication on planes: w*(lo,hi) = (hi, lo^hi), w^2*(lo,hi) = (lo^hi, lo).
struct MultTable {
    int k = 0;
    std::vector<std::array<uint64_t, 2>> m;

    static std::array<uint64_t, 2> scale(const std::array<uint64_t, 2>& r, int s) {
        switch (s) {
            case 0: return {0, 0};
            case 1: return r;
            case 2: return {r[1], r[0] ^ r[1]};
            default: return {r[0] ^ r[1], r[0]};
        }
    }

    explicit MultTable(const std::vector<std::array<uint64_t, 2>>& rows) {
        k = static_cast<int>(rows.size());
        m.resize(static_cast<size_t>(k) * 4);
        for (int j = 0; j < k; ++j)
            for (int s = 0; s < 4; ++s) m[static_cast<size_t>(j) * 4 + static_cast<size_t>(s)] = scale(rows[static_cast<size_t>(j)], s);
    }
};

// Same layout with four planes per entry (a-pair then b-pair).
struct BweMultTable {
    int k = 0;
    std::vector<std::array<uint64_t, 4>> m;

    BweMultTable(const std::vector<std::array<uint64_t, 2>>& r_rows,
                 const std::vector<std::array<uint64_t, 2>>& t_rows) {
        k = static_cast<int>(r_rows.size() + t_rows.size());
        m.resize(static_cast<size_t>(k) * 4);
        int j = 0;
        for (const auto& r : r_rows) {
            for (int s = 0; s < 4; ++s) {
                auto p = MultTable::scale(r, s);
                m[static_cast<size_t>(j) * 4 + static_cast<size_t>(s)] = {p[0], p[1], 0, 0};
            }
            ++j;
        }
        for (const auto& t : t_rows) {
            for (int s = 0; s < 4; ++s) {
                auto p = MultTable::scale(t, s);
                m[static_cast<size_t>(j) * 4 + static_cast<size_t>(s)] = {p[0], p[1], p[0], p[1]};
            }
            ++j;
        }
    }
};

// Digits of idx in base 4 into dig[0..k-1], XORing the encoded word into the planes.
template <typename XorRow>
inline void encode_start(uint64_t idx, int k, uint8_t* dig, XorRow&& xr) {
    for (int j = 0; j < k; ++j) {
        dig[j] = static_cast<uint8_t>(idx & 3);
        idx >>= 2;
        if (dig[j]) xr(j, dig[j]);
    }
}

int scalar_min_range(const MultTable& mt, uint64_t begin, uint64_t end, int early_exit);
void scalar_hist_range(const MultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist65);
void scalar_bwe_range(const BweMultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist);

#if defined(__x86_64__) || defined(_M_X64)
#define M2C_X86 1
// Ranges are over the low-digit space 4^(k-1); the top digit runs across SIMD lanes.
int avx2_min_range(const MultTable& mt, uint64_t begin, uint64_t end, int early_exit);
void avx2_hist_range(const MultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist65);
void avx2_bwe_range(const BweMultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist);
#endif

}  // namespace m2c::detail
