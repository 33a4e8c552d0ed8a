#pragma once

#include <string>
#include <vector>

#include "m2c/bigint.hpp"
#include "m2c/f4vec.hpp"
#include "m2c/qcode.hpp"
#include "m2c/ring_a.hpp"

namespace m2c {

// Vector over A = M2(F2), bitsliced: symbol j is a.get(j) + i*b.get(j).
struct AVector {
    F4Vec a, b;

    AVector() = default;
    explicit AVector(int len) : a(len), b(len) {}

    int len() const { return a.len; }
    AElem get(int j) const { return {a.get(j), b.get(j)}; }
    void set(int j, AElem v) {
        a.set(j, v.a);
        b.set(j, v.b);
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    // u-decomposition: symbol = c1_j + u*c2_j with c1 = a + b, c2 = b.
    F4Vec u_first() const { return {a.lo ^ b.lo, a.hi ^ b.hi, a.len}; }
    F4Vec u_second() const { return b; }
    static AVector from_u_pair(const F4Vec& c1, const F4Vec& c2) {
        AVector v;
        v.a = {c1.lo ^ c2.lo, c1.hi ^ c2.hi, c1.len};
        v.b = c2;
        return v;
    }

    AVector shift_cyclic() const {
        AVector v;
        v.a = a.shift_cyclic();
        v.b = b.shift_cyclic();
        return v;
    }

    friend AVector operator+(const AVector& x, const AVector& y) {
        AVector v;
        v.a = x.a + y.a;
        v.b = x.b + y.b;
        return v;
    }
    friend bool operator==(const AVector& x, const AVector& y) { return x.a == y.a && x.b == y.b; }

    AVector scaled_right(AElem s) const;  // symbol-wise v_j * s
    AVector scaled_left(AElem s) const;   // symbol-wise s * v_j
    std::string str() const;
};

// Cyclic code over A of odd length n, parametrized by a monic factor triple
// f*g*h = X^n - 1 (pairwise coprime).  The codeword set is
//   { c1 + u*c2 : fh | c1, f | c2 },
// i.e. the residue code (generator fh) in the F4 component plus u times the
// torsion code (generator f).  A-scalar closure of this set is not assumed;
// it is measured by audit_claims.
struct ACyclicCode {
    int n = 0;
    PolyF4 f, g, h;

    static ACyclicCode build(const PolyF4& f, const PolyF4& g, const PolyF4& h, int n);

    QCyclicCode residue() const { return QCyclicCode::make(n, f * h); }
    QCyclicCode torsion() const { return QCyclicCode::make(n, f); }

    int log4_cardinality() const { return 2 * g.deg() + h.deg(); }
    BigInt cardinality() const { return big_pow(4, static_cast<unsigned>(log4_cardinality())); }

    bool contains(const AVector& v) const;
};

ACyclicCode predicted_dual(const ACyclicCode& c);  // triple (g*, f*, h*)
bool is_self_dual_triple(const ACyclicCode& c);    // h = h* and g = f*

AElem euclidean_form(const AVector& x, const AVector& y);  // sum x_j y_j
AElem hermitian_form(const AVector& x, const AVector& y);  // sum x_j conj(y_j)

// The same forms evaluated in the u-central model: u is treated as a central
// nilpotent over F4 (components multiply as in F4[u]/(u^2)), which is the
// commutative shadow in which the generator-level duality formulas hold
// exactly.  Value is (F4 part, u part).
std::array<F4, 2> euclidean_form_u_central(const AVector& x, const AVector& y);
std::array<F4, 2> hermitian_form_u_central(const AVector& x, const AVector& y);

// F2-additive generator set of the codeword set (rows times 1 and w).
std::vector<AVector> additive_generators(const ACyclicCode& c);

enum class AuditScope { Fast, Full };

struct AuditClaim {
    std::string id;
    std::string claim;    // the statement being measured, self-contained
    std::string model;    // "matrix_ring" | "u_central" | "trace_character"
    std::string method;   // "exhaustive" | "generator_basis" | "skipped"
    std::string verdict;  // "PASS" | "FAIL" | "SKIP"
    std::string details;
    std::vector<std::string> counterexample;
};

struct AuditReport {
    int n = 0;
    PolyF4 f, g, h;
    bool self_dual_triple = false;
    bool trivial = false;  // f = g = 1
    std::vector<AuditClaim> claims;

    bool has_fail() const {
        for (const auto& c : claims)
            if (c.verdict == "FAIL") return true;
        return false;
    }
    const AuditClaim* find(const std::string& id, const std::string& model) const {
        for (const auto& c : claims)
            if (c.id == id && c.model == model) return &c;
        return nullptr;
    }
};

AuditReport audit_claims(const ACyclicCode& c, AuditScope scope = AuditScope::Full, Budget budget = {});

}  // namespace m2c
