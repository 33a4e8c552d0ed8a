#pragma once

#include <map>
#include <string>

#include "m2c/bigint.hpp"

namespace m2c {

// Exact Hamming weight enumerator of a quaternary code: counts[w] = number of
// codewords of weight w, as arbitrary-precision integers.
struct WeightEnumerator {
    int length = 0;
    std::map<int, BigInt> counts;

    BigInt cardinality() const {
        BigInt s = 0;
        for (const auto& [w, c] : counts) s += c;
        return s;
    }

    int min_nonzero_weight() const {  // -1 when the code is {0}
        for (const auto& [w, c] : counts)
            if (w > 0 && c > 0) return w;
        return -1;
    }

    friend bool operator==(const WeightEnumerator& x, const WeightEnumerator& y) {
        return x.length == y.length && x.counts == y.counts;
    }
};

// Dual enumerator: coefficients of (1/|C|) W(x + 3y, x - y), computed exactly
// via q=4 Krawtchouk sums.  Throws std::domain_error if any coefficient fails
// to be a nonnegative integer (the input was not a code's enumerator).
WeightEnumerator macwilliams_transform(const WeightEnumerator& we, const BigInt& cardinality);

bool is_formally_self_dual(const WeightEnumerator& we);

}  // namespace m2c
