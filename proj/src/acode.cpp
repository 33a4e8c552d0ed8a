#include "m2c/acode.hpp"

#include <stdexcept>

namespace m2c {

namespace {

// 16x16 product table over AElem indices.
struct MulTable {
    uint8_t t[256];
    MulTable() {
        for (int x = 0; x < 16; ++x)
            for (int y = 0; y < 16; ++y)
                t[x * 16 + y] = static_cast<uint8_t>(a_mul(AElem::from_index(x), AElem::from_index(y)).index());
    }
};

const MulTable& mul_table() {
    static const MulTable t;
    return t;
}

}  // namespace

AVector AVector::scaled_right(AElem s) const {
    const auto& T = mul_table().t;
    AVector out(len());
    for (int j = 0; j < len(); ++j) out.set(j, AElem::from_index(T[get(j).index() * 16 + s.index()]));
    return out;
}

AVector AVector::scaled_left(AElem s) const {
    const auto& T = mul_table().t;
    AVector out(len());
    for (int j = 0; j < len(); ++j) out.set(j, AElem::from_index(T[s.index() * 16 + get(j).index()]));
    return out;
}

std::string AVector::str() const {
    std::string out = "(";
    for (int j = 0; j < len(); ++j) {
        if (j) out += ", ";
        out += a_str(get(j));
    }
    return out + ")";
}

ACyclicCode ACyclicCode::build(const PolyF4& f, const PolyF4& g, const PolyF4& h, int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("A-cyclic code: length must be a positive odd integer");
    if (f.is_zero() || g.is_zero() || h.is_zero() || !f.is_monic() || !g.is_monic() || !h.is_monic())
        throw std::invalid_argument("A-cyclic code: factors must be monic");
    if (f * g * h != PolyF4::xn_minus_1(n))
        throw std::invalid_argument("A-cyclic code: f*g*h != X^n-1");
    auto coprime = [](const PolyF4& p, const PolyF4& q) { return poly_gcd(p, q).deg() == 0; };
    if (!coprime(f, g) || !coprime(f, h) || !coprime(g, h))
        throw std::invalid_argument("A-cyclic code: factors are not pairwise coprime");
    return {n, f, g, h};
}

bool ACyclicCode::contains(const AVector& v) const {
    if (v.len() != n) return false;
    return divides(f * h, poly_from_vec(v.u_first())) && divides(f, poly_from_vec(v.u_second()));
}

ACyclicCode predicted_dual(const ACyclicCode& c) {
    return ACyclicCode::build(reciprocal(c.g), reciprocal(c.f), reciprocal(c.h), c.n);
}

bool is_self_dual_triple(const ACyclicCode& c) {
    return reciprocal(c.h) == c.h && reciprocal(c.f) == c.g;
}

AElem euclidean_form(const AVector& x, const AVector& y) {
    if (x.len() != y.len()) throw std::invalid_argument("euclidean_form: length mismatch");
    const auto& T = mul_table().t;
    int acc = 0;
    for (int j = 0; j < x.len(); ++j) acc ^= T[x.get(j).index() * 16 + y.get(j).index()];
    return AElem::from_index(acc);
}

AElem hermitian_form(const AVector& x, const AVector& y) {
    if (x.len() != y.len()) throw std::invalid_argument("hermitian_form: length mismatch");
    const auto& T = mul_table().t;
    int acc = 0;
    for (int j = 0; j < x.len(); ++j) acc ^= T[x.get(j).index() * 16 + a_conj(y.get(j)).index()];
    return AElem::from_index(acc);
}

std::array<F4, 2> euclidean_form_u_central(const AVector& x, const AVector& y) {
    if (x.len() != y.len()) throw std::invalid_argument("euclidean_form_u_central: length mismatch");
    F4Vec c1 = x.u_first(), c2 = x.u_second(), d1 = y.u_first(), d2 = y.u_second();
    F4 p0(0), p1(0);
    for (int j = 0; j < x.len(); ++j) {
        p0 += c1.get(j) * d1.get(j);
        p1 += c1.get(j) * d2.get(j) + c2.get(j) * d1.get(j);
    }
    return {p0, p1};
}

std::array<F4, 2> hermitian_form_u_central(const AVector& x, const AVector& y) {
    if (x.len() != y.len()) throw std::invalid_argument("hermitian_form_u_central: length mismatch");
    F4Vec c1 = x.u_first(), c2 = x.u_second(), d1 = y.u_first(), d2 = y.u_second();
    F4 p0(0), p1(0);
    for (int j = 0; j < x.len(); ++j) {
        F4 e1 = f4_conj(d1.get(j)), e2 = f4_conj(d2.get(j));
        p0 += c1.get(j) * e1;
        p1 += c1.get(j) * e2 + c2.get(j) * e1;
    }
    return {p0, p1};
}

std::vector<AVector> additive_generators(const ACyclicCode& c) {
    std::vector<AVector> gens;
    for (const auto& r : cyclic_generator_rows(c.f * c.h, c.n))
        for (F4 s : {F4::one(), F4::w()}) gens.push_back(AVector::from_u_pair(r.scaled(s), F4Vec(c.n)));
    for (const auto& t : cyclic_generator_rows(c.f, c.n))
        for (F4 s : {F4::one(), F4::w()}) gens.push_back(AVector::from_u_pair(F4Vec(c.n), t.scaled(s)));
    return gens;
}

}  // namespace m2c
