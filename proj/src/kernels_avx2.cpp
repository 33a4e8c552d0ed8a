// AVX2 kernel variants.  Four codewords travel per step: the top message
// digit is spread across the four 64-bit lanes of a register pair, the lower
// digits run through the same radix-4 odometer as the scalar kernel, and each
// delta is broadcast-XORed into all lanes.  Compiled with -mavx2 and gated at
// runtime by kernel_resolve.

#include "kernels_impl.hpp"

#if defined(M2C_X86)

#include <immintrin.h>

#include <bit>
#include <climits>

namespace m2c::detail {

namespace {

constexpr int kMaxRows = 33;

inline __m256i popcnt64x4(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i m = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, m);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), m);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline uint64_t hmin64x4(__m256i v) {
    alignas(32) uint64_t t[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(t), v);
    uint64_t m = t[0];
    for (int i = 1; i < 4; ++i)
        if (t[i] < m) m = t[i];
    return m;
}

struct LaneState {
    __m256i lo, hi;

    // dig holds the low k-1 digits; the top digit is the lane index.
    static LaneState init(const MultTable& mt, uint64_t low_begin, uint8_t* dig) {
        const int kl = mt.k - 1;
        uint64_t slo = 0, shi = 0;
        encode_start(low_begin, kl, dig, [&](int j, int d) {
            const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(d)];
            slo ^= mm[0];
            shi ^= mm[1];
        });
        const auto& r1 = mt.m[static_cast<size_t>(kl) * 4 + 1];
        const auto& r2 = mt.m[static_cast<size_t>(kl) * 4 + 2];
        const auto& r3 = mt.m[static_cast<size_t>(kl) * 4 + 3];
        LaneState st;
        st.lo = _mm256_xor_si256(_mm256_set1_epi64x(static_cast<int64_t>(slo)),
                                 _mm256_setr_epi64x(0, static_cast<int64_t>(r1[0]), static_cast<int64_t>(r2[0]),
                                                    static_cast<int64_t>(r3[0])));
        st.hi = _mm256_xor_si256(_mm256_set1_epi64x(static_cast<int64_t>(shi)),
                                 _mm256_setr_epi64x(0, static_cast<int64_t>(r1[1]), static_cast<int64_t>(r2[1]),
                                                    static_cast<int64_t>(r3[1])));
        return st;
    }

    inline void step(const MultTable& mt, uint8_t* dig) {
        int j = 0;
        uint64_t dlo = 0, dhi = 0;
        while (dig[j] == 3) {
            dig[j] = 0;
            const auto& mm = mt.m[static_cast<size_t>(j) * 4 + 3];
            dlo ^= mm[0];
            dhi ^= mm[1];
            ++j;
        }
        uint8_t a = dig[j];
        dig[j] = static_cast<uint8_t>(a + 1);
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(a ^ (a + 1))];
        dlo ^= mm[0];
        dhi ^= mm[1];
        lo = _mm256_xor_si256(lo, _mm256_set1_epi64x(static_cast<int64_t>(dlo)));
        hi = _mm256_xor_si256(hi, _mm256_set1_epi64x(static_cast<int64_t>(dhi)));
    }
};

}  // namespace

int avx2_min_range(const MultTable& mt, uint64_t begin, uint64_t end, int early_exit) {
    uint8_t dig[kMaxRows] = {0};
    LaneState st = LaneState::init(mt, begin, dig);
    const __m256i zero = _mm256_setzero_si256();
    __m256i bestv = _mm256_set1_epi64x(INT_MAX);
    uint64_t idx = begin;
    uint64_t until_check = 8192;
    for (;;) {
        __m256i w = popcnt64x4(_mm256_or_si256(st.lo, st.hi));
        // zero-weight lanes are the zero codeword; never take them
        __m256i take = _mm256_and_si256(_mm256_cmpgt_epi64(bestv, w), _mm256_cmpgt_epi64(w, zero));
        bestv = _mm256_blendv_epi8(bestv, w, take);
        if (++idx >= end) break;
        if (--until_check == 0) {
            until_check = 8192;
            uint64_t cur = hmin64x4(bestv);
            if (cur < static_cast<uint64_t>(INT_MAX) && static_cast<int>(cur) <= early_exit)
                return static_cast<int>(cur);
        }
        st.step(mt, dig);
    }
    uint64_t cur = hmin64x4(bestv);
    return cur < static_cast<uint64_t>(INT_MAX) ? static_cast<int>(cur) : INT_MAX;
}

void avx2_hist_range(const MultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist65) {
    uint8_t dig[kMaxRows] = {0};
    LaneState st = LaneState::init(mt, begin, dig);
    alignas(32) uint64_t w[4];
    uint64_t idx = begin;
    for (;;) {
        _mm256_store_si256(reinterpret_cast<__m256i*>(w), popcnt64x4(_mm256_or_si256(st.lo, st.hi)));
        ++hist65[w[0]];
        ++hist65[w[1]];
        ++hist65[w[2]];
        ++hist65[w[3]];
        if (++idx >= end) break;
        st.step(mt, dig);
    }
}

void avx2_bwe_range(const BweMultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist) {
    const int kl = mt.k - 1;
    uint8_t dig[kMaxRows] = {0};

    uint64_t s[4] = {0, 0, 0, 0};
    encode_start(begin, kl, dig, [&](int j, int d) {
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(d)];
        for (int p = 0; p < 4; ++p) s[p] ^= mm[p];
    });
    const auto& r1 = mt.m[static_cast<size_t>(kl) * 4 + 1];
    const auto& r2 = mt.m[static_cast<size_t>(kl) * 4 + 2];
    const auto& r3 = mt.m[static_cast<size_t>(kl) * 4 + 3];
    __m256i plane[4];
    for (int p = 0; p < 4; ++p)
        plane[p] = _mm256_xor_si256(
            _mm256_set1_epi64x(static_cast<int64_t>(s[p])),
            _mm256_setr_epi64x(0, static_cast<int64_t>(r1[p]), static_cast<int64_t>(r2[p]), static_cast<int64_t>(r3[p])));

    alignas(32) uint64_t n1[4], n2[4];
    uint64_t idx = begin;
    for (;;) {
        __m256i nza = _mm256_or_si256(plane[0], plane[1]);
        __m256i nzb = _mm256_or_si256(plane[2], plane[3]);
        _mm256_store_si256(reinterpret_cast<__m256i*>(n1), popcnt64x4(_mm256_xor_si256(nza, nzb)));
        _mm256_store_si256(reinterpret_cast<__m256i*>(n2), popcnt64x4(_mm256_and_si256(nza, nzb)));
        ++hist[n1[0] * 65 + n2[0]];
        ++hist[n1[1] * 65 + n2[1]];
        ++hist[n1[2] * 65 + n2[2]];
        ++hist[n1[3] * 65 + n2[3]];
        if (++idx >= end) break;

        int j = 0;
        uint64_t d[4] = {0, 0, 0, 0};
        while (dig[j] == 3) {
            dig[j] = 0;
            const auto& mm = mt.m[static_cast<size_t>(j) * 4 + 3];
            for (int p = 0; p < 4; ++p) d[p] ^= mm[p];
            ++j;
        }
        uint8_t a = dig[j];
        dig[j] = static_cast<uint8_t>(a + 1);
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(a ^ (a + 1))];
        for (int p = 0; p < 4; ++p) d[p] ^= mm[p];
        for (int p = 0; p < 4; ++p) plane[p] = _mm256_xor_si256(plane[p], _mm256_set1_epi64x(static_cast<int64_t>(d[p])));
    }
}

}  // namespace m2c::detail

#endif  // M2C_X86
