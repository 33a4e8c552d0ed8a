#pragma once

#include <map>
#include <utility>

#include "m2c/acode.hpp"
#include "m2c/qcode.hpp"

namespace m2c {

// Exact joint enumerator of symbol weights over A: counts[(n1, n2)] is the
// number of codewords with n1 coordinates of weight 1 (invertible entries)
// and n2 of weight 2 (singular nonzero entries).
struct BachocEnumerator {
    int length = 0;  // over A
    std::map<std::pair<int, int>, BigInt> counts;

    BigInt cardinality() const {
        BigInt s = 0;
        for (const auto& [k, v] : counts) s += v;
        return s;
    }

    // W(x, y) = bwe(x^2, xy, y^2): image Hamming enumerator of length 2n,
    // weight n1 + 2*n2.
    WeightEnumerator substitute_hamming() const;

    friend bool operator==(const BachocEnumerator& x, const BachocEnumerator& y) {
        return x.length == y.length && x.counts == y.counts;
    }
};

// The isometry A -> F4^2, a + ib -> (a, b), extended componentwise: the first
// block collects the a-parts, the second the b-parts.  Hamming weight of the
// image equals the total symbol weight of the input.
F4Vec bachoc_map(const AVector& v);

// phi(C) as a quaternary [2n, deg g + (deg g + deg h)] linear code; exactly
// the half-block swap of plotkin_sum(torsion, residue).
LinearCodeQ bachoc_image(const ACyclicCode& c);

LinearCodeQ swap_halves(const LinearCodeQ& c);

BachocEnumerator bachoc_weight_enumerator(const ACyclicCode& c, Budget b = {}, EngineOptions opt = {});

// Dual enumerator via the trivariate substitution
//   (1/|C|) * bwe(a + 6b + 9c, a + 2b - 3c, a - 2b + c),
// expanded exactly over the integers.  Throws std::domain_error when a
// coefficient fails to be a nonnegative integer.
BachocEnumerator bwe_macwilliams(const BachocEnumerator& bwe, const BigInt& cardinality);

// The cyclic code of length 2n with generator f^2 h; its weight enumerator
// coincides with that of the Bachoc image (checked, never assumed).
QCyclicCode doubled_cyclic_image(const ACyclicCode& c);

}  // namespace m2c
