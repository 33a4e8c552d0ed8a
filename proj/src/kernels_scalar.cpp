// Scalar reference kernels.  These define the semantics the SIMD variants
// must reproduce; keep them straightforward.

#include <bit>
#include <climits>

#include "kernels_impl.hpp"

namespace m2c::detail {

namespace {
constexpr int kMaxRows = 33;
}

int scalar_min_range(const MultTable& mt, uint64_t begin, uint64_t end, int early_exit) {
    const int k = mt.k;
    uint64_t lo = 0, hi = 0;
    uint8_t dig[kMaxRows] = {0};
    encode_start(begin, k, dig, [&](int j, int d) {
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(d)];
        lo ^= mm[0];
        hi ^= mm[1];
    });

    int best = INT_MAX;
    uint64_t idx = begin;
    for (;;) {
        int w = std::popcount(lo | hi);
        if (w && w < best) {  // w == 0 is the zero codeword, excluded
            best = w;
            if (best <= early_exit) return best;
        }
        if (++idx >= end) break;
        int j = 0;
        while (dig[j] == 3) {
            dig[j] = 0;
            const auto& mm = mt.m[static_cast<size_t>(j) * 4 + 3];
            lo ^= mm[0];
            hi ^= mm[1];
            ++j;
        }
        uint8_t a = dig[j];
        dig[j] = static_cast<uint8_t>(a + 1);
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(a ^ (a + 1))];
        lo ^= mm[0];
        hi ^= mm[1];
    }
    return best;
}

void scalar_hist_range(const MultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist65) {
    const int k = mt.k;
    uint64_t lo = 0, hi = 0;
    uint8_t dig[kMaxRows] = {0};
    encode_start(begin, k, dig, [&](int j, int d) {
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(d)];
        lo ^= mm[0];
        hi ^= mm[1];
    });

    uint64_t idx = begin;
    for (;;) {
        ++hist65[std::popcount(lo | hi)];
        if (++idx >= end) break;
        int j = 0;
        while (dig[j] == 3) {
            dig[j] = 0;
            const auto& mm = mt.m[static_cast<size_t>(j) * 4 + 3];
            lo ^= mm[0];
            hi ^= mm[1];
            ++j;
        }
        uint8_t a = dig[j];
        dig[j] = static_cast<uint8_t>(a + 1);
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(a ^ (a + 1))];
        lo ^= mm[0];
        hi ^= mm[1];
    }
}

void scalar_bwe_range(const BweMultTable& mt, uint64_t begin, uint64_t end, uint64_t* hist) {
    const int k = mt.k;
    uint64_t alo = 0, ahi = 0, blo = 0, bhi = 0;
    uint8_t dig[kMaxRows] = {0};
    auto xr = [&](int j, int d) {
        const auto& mm = mt.m[static_cast<size_t>(j) * 4 + static_cast<size_t>(d)];
        alo ^= mm[0];
        ahi ^= mm[1];
        blo ^= mm[2];
        bhi ^= mm[3];
    };
    encode_start(begin, k, dig, xr);

    uint64_t idx = begin;
    for (;;) {
        uint64_t nza = alo | ahi, nzb = blo | bhi;
        int n1 = std::popcount(nza ^ nzb);
        int n2 = std::popcount(nza & nzb);
        ++hist[n1 * 65 + n2];
        if (++idx >= end) break;
        int j = 0;
        while (dig[j] == 3) {
            dig[j] = 0;
            xr(j, 3);
            ++j;
        }
        uint8_t a = dig[j];
        dig[j] = static_cast<uint8_t>(a + 1);
        xr(j, a ^ (a + 1));
    }
}

}  // namespace m2c::detail
