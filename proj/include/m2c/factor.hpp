#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "m2c/poly.hpp"

namespace m2c {

// Orbit of a residue under multiplication by 4 mod n.
struct CyclotomicCoset {
    int representative = 0;       // smallest member
    std::vector<int> members;     // sorted
};

// Partition of Z_n into 4-cyclotomic cosets, ordered by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(int n);

// Smallest j >= 1 with 4^j = 1 (mod n); 1 for n = 1.
int order_of_4(int n);

// Nontrivial self-dual cyclic codes over A exist at odd length n iff -1 is
// not a power of 4 mod n, equivalently iff some coset is non-symmetric.
// Carries the deciding witness either way.
struct SelfDualExistence {
    bool exists = false;
    std::optional<int> power_j;               // 4^j = -1 (mod n) when !exists
    std::optional<CyclotomicCoset> asymmetric; // a non-symmetric coset when exists
};

SelfDualExistence selfdual_exists(int n);

// Complete factorization of X^n - 1 over GF(4) for odd n, via minimal
// polynomials of beta^s over an explicit extension field F_{4^m},
// m = ord_n(4).  Items are in coset order; partner[i] is the index of the
// item whose factor is the reciprocal of item i's factor (negation of its
// coset), an involution.
struct FactorizationOfXnMinus1 {
    int n = 0;
    struct Item {
        CyclotomicCoset coset;
        PolyF4 factor;
    };
    std::vector<Item> items;
    std::vector<int> partner;

    PolyF4 product() const;
    std::vector<PolyF4> factors() const;
};

FactorizationOfXnMinus1 factorize_xn_minus_1(int n);

}  // namespace m2c
