// Factorization of X^n - 1 over GF(4) for odd n.
//
// Route: m = ord_n(4); build F_{4^m} = F4[Y]/(p) for the first monic
// irreducible p of degree m in coefficient-lexicographic order (Rabin test);
// find the least field generator g by order testing against the prime
// factorization of 4^m - 1; take beta = g^((4^m-1)/n) as the primitive n-th
// root; the factor attached to a coset S with representative s is the minimal
// polynomial prod_{j in S} (X - beta^j), whose coefficients are checked to
// land in GF(4).  Everything is exact; the construction self-verifies the
// product and the reciprocal pairing before returning.

#include "m2c/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace m2c {

namespace {

void require_odd(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("length must be a positive odd integer");
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// F_{4^m} with elements bitsliced into two planes (bit j = coefficient of Y^j).
struct ExtField {
    int m = 0;
    PolyF4 modulus;
    struct Elem {
        uint64_t lo = 0, hi = 0;
        friend bool operator==(Elem a, Elem b) { return a.lo == b.lo && a.hi == b.hi; }
    };
    std::vector<Elem> red;  // red[j] = Y^(m+j) mod p

    static Elem scale(Elem e, int c) {
        switch (c) {
            case 0: return {0, 0};
            case 1: return e;
            case 2: return {e.hi, e.lo ^ e.hi};
            default: return {e.lo ^ e.hi, e.lo};
        }
    }

    static int coeff_of(Elem e, int j) { return static_cast<int>(((e.lo >> j) & 1) | (((e.hi >> j) & 1) << 1)); }

    explicit ExtField(PolyF4 p) : m(p.deg()), modulus(std::move(p)) {
        Elem base{0, 0};  // Y^m mod p = p - leading term
        for (int j = 0; j < m; ++j) {
            F4 c = modulus.coeff(j);
            base.lo |= static_cast<uint64_t>(c.v & 1) << j;
            base.hi |= static_cast<uint64_t>((c.v >> 1) & 1) << j;
        }
        red.push_back(base);
        for (int j = 1; j < m; ++j) {
            Elem prev = red.back();
            Elem next{prev.lo << 1, prev.hi << 1};
            int top = coeff_of(next, m);
            if (top) {
                next.lo &= ~(uint64_t(1) << m);
                next.hi &= ~(uint64_t(1) << m);
                Elem s = scale(base, top);
                next.lo ^= s.lo;
                next.hi ^= s.hi;
            }
            red.push_back(next);
        }
    }

    Elem one() const { return {1, 0}; }

    Elem from_f4(F4 v) const { return {static_cast<uint64_t>(v.v & 1), static_cast<uint64_t>((v.v >> 1) & 1)}; }

    Elem add(Elem a, Elem b) const { return {a.lo ^ b.lo, a.hi ^ b.hi}; }

    Elem mul(Elem a, Elem b) const {
        uint64_t lo = 0, hi = 0;
        for (int j = 0; j < m; ++j) {
            int c = coeff_of(a, j);
            if (!c) continue;
            Elem s = scale(b, c);
            lo ^= s.lo << j;
            hi ^= s.hi << j;
        }
        for (int j = 2 * m - 2; j >= m; --j) {
            int c = static_cast<int>(((lo >> j) & 1) | (((hi >> j) & 1) << 1));
            if (!c) continue;
            lo &= ~(uint64_t(1) << j);
            hi &= ~(uint64_t(1) << j);
            Elem s = scale(red[static_cast<size_t>(j - m)], c);
            lo ^= s.lo;
            hi ^= s.hi;
        }
        return {lo, hi};
    }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    bool in_f4(Elem e) const { return (e.lo | e.hi) < 2; }
    F4 to_f4(Elem e) const { return F4(static_cast<uint8_t>((e.lo & 1) | ((e.hi & 1) << 1))); }
};

// Rabin irreducibility over GF(4) using plain polynomial arithmetic.
PolyF4 x_pow_4e_mod(const PolyF4& p, int e) {
    PolyF4 h = PolyF4::x();
    for (int i = 0; i < 2 * e; ++i) h = poly_mod(h * h, p);  // 4^e = 2^(2e)
    return h;
}

bool irreducible(const PolyF4& p) {
    const int m = p.deg();
    if (m == 1) return true;
    if (p.coeff(0).is_zero()) return false;
    PolyF4 xm = x_pow_4e_mod(p, m);
    if (xm != poly_mod(PolyF4::x(), p)) return false;
    for (uint64_t r : prime_factors(static_cast<uint64_t>(m))) {
        PolyF4 h = x_pow_4e_mod(p, m / static_cast<int>(r)) + PolyF4::x();
        if (poly_gcd(h, p).deg() != 0) return false;
    }
    return true;
}

// First monic irreducible of degree m, coefficients scanned lexicographically
// from the constant term (0 < 1 < w < w^2).  A zero constant term is
// reducible for m >= 2, so the scan starts at the first candidate with
// constant term 1 (the counter's top radix-4 digit is the constant term).
PolyF4 least_irreducible(int m) {
    if (m == 1) return PolyF4::x();
    uint64_t total = uint64_t(1) << (2 * m);
    for (uint64_t z = uint64_t(1) << (2 * (m - 1)); z < total; ++z) {
        std::vector<F4> c(static_cast<size_t>(m) + 1, F4(0));
        c[static_cast<size_t>(m)] = F4::one();
        for (int j = 0; j < m; ++j)
            c[static_cast<size_t>(j)] = F4(static_cast<uint8_t>((z >> (2 * (m - 1 - j))) & 3));
        PolyF4 p{std::move(c)};
        if (irreducible(p)) return p;
    }
    throw std::logic_error("least_irreducible: none found");
}

ExtField::Elem least_generator(const ExtField& F, const std::vector<uint64_t>& group_prime_factors, uint64_t group_order) {
    uint64_t total = uint64_t(1) << (2 * F.m);
    for (uint64_t z = 1; z < total; ++z) {
        ExtField::Elem g{0, 0};
        for (int j = 0; j < F.m; ++j) {
            int c = static_cast<int>((z >> (2 * j)) & 3);
            g.lo |= static_cast<uint64_t>(c & 1) << j;
            g.hi |= static_cast<uint64_t>((c >> 1) & 1) << j;
        }
        bool ok = true;
        for (uint64_t p : group_prime_factors)
            if (F.pow(g, group_order / p) == F.one()) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("least_generator: none found");
}

}  // namespace

std::vector<CyclotomicCoset> cyclotomic_cosets(int n) {
    require_odd(n);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<CyclotomicCoset> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        CyclotomicCoset cs;
        cs.representative = s;
        int x = s;
        do {
            cs.members.push_back(x);
            seen[static_cast<size_t>(x)] = true;
            x = static_cast<int>((static_cast<int64_t>(x) * 4) % n);
        } while (x != s);
        std::sort(cs.members.begin(), cs.members.end());
        out.push_back(std::move(cs));
    }
    return out;
}

int order_of_4(int n) {
    require_odd(n);
    if (n == 1) return 1;
    int64_t acc = 4 % n;
    for (int j = 1;; ++j) {
        if (acc == 1) return j;
        acc = (acc * 4) % n;
    }
}

SelfDualExistence selfdual_exists(int n) {
    require_odd(n);
    SelfDualExistence r;
    if (n == 1) {
        r.exists = false;
        r.power_j = 1;  // 4 = -1 = 0 (mod 1)
        return r;
    }
    int64_t acc = 1;
    int ord = order_of_4(n);
    for (int j = 1; j <= ord; ++j) {
        acc = (acc * 4) % n;
        if (acc == n - 1) {
            r.exists = false;
            r.power_j = j;
            return r;
        }
    }
    r.exists = true;
    for (const auto& cs : cyclotomic_cosets(n)) {
        int neg = (n - cs.representative) % n;
        if (!std::binary_search(cs.members.begin(), cs.members.end(), neg)) {
            r.asymmetric = cs;
            break;
        }
    }
    if (!r.asymmetric) throw std::logic_error("selfdual_exists: criterion and coset scan disagree");
    return r;
}

PolyF4 FactorizationOfXnMinus1::product() const {
    PolyF4 p = PolyF4::one();
    for (const auto& it : items) p = p * it.factor;
    return p;
}

std::vector<PolyF4> FactorizationOfXnMinus1::factors() const {
    std::vector<PolyF4> out;
    out.reserve(items.size());
    for (const auto& it : items) out.push_back(it.factor);
    return out;
}

FactorizationOfXnMinus1 factorize_xn_minus_1(int n) {
    require_odd(n);
    const int m = order_of_4(n);
    ExtField F(least_irreducible(m));

    uint64_t group_order = (uint64_t(1) << (2 * m)) - 1;
    std::vector<uint64_t> gpf = prime_factors((uint64_t(1) << m) - 1);
    for (uint64_t p : prime_factors((uint64_t(1) << m) + 1))
        if (std::find(gpf.begin(), gpf.end(), p) == gpf.end()) gpf.push_back(p);

    ExtField::Elem g = least_generator(F, gpf, group_order);
    ExtField::Elem beta = F.pow(g, group_order / static_cast<uint64_t>(n));

    FactorizationOfXnMinus1 out;
    out.n = n;
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (const auto& cs : cyclotomic_cosets(n)) {
        // minimal polynomial of beta^rep: prod over the coset of (X - beta^j)
        std::vector<ExtField::Elem> poly{F.one()};
        for (int j : cs.members) {
            ExtField::Elem root = F.pow(beta, static_cast<uint64_t>(j));
            std::vector<ExtField::Elem> next(poly.size() + 1, ExtField::Elem{0, 0});
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = F.add(next[i + 1], poly[i]);
                next[i] = F.add(next[i], F.mul(poly[i], root));  // char 2: -root = root
            }
            poly = std::move(next);
        }
        std::vector<F4> coeffs;
        coeffs.reserve(poly.size());
        for (const auto& e : poly) {
            if (!F.in_f4(e)) throw std::logic_error("factorize_xn_minus_1: coefficient escaped GF(4)");
            coeffs.push_back(F.to_f4(e));
        }
        for (int v : cs.members) owner[static_cast<size_t>(v)] = static_cast<int>(out.items.size());
        out.items.push_back({cs, PolyF4(std::move(coeffs))});
    }

    out.partner.resize(out.items.size());
    for (size_t i = 0; i < out.items.size(); ++i) {
        int neg = (n - out.items[i].coset.representative) % n;
        int j = owner[static_cast<size_t>(neg)];
        out.partner[i] = j;
        if (reciprocal(out.items[i].factor) != out.items[static_cast<size_t>(j)].factor)
            throw std::logic_error("factorize_xn_minus_1: reciprocal pairing mismatch");
    }
    if (out.product() != PolyF4::xn_minus_1(n))
        throw std::logic_error("factorize_xn_minus_1: product check failed");
    return out;
}

}  // namespace m2c
