#include "m2c/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace m2c {

PolyF4 PolyF4::constant(F4 v) {
    if (v.is_zero()) return PolyF4();
    return PolyF4(std::vector<F4>{v});
}

PolyF4 PolyF4::x() { return monomial(F4::one(), 1); }

PolyF4 PolyF4::monomial(F4 v, int d) {
    if (v.is_zero()) return PolyF4();
    std::vector<F4> c(static_cast<size_t>(d) + 1, F4(0));
    c.back() = v;
    return PolyF4(std::move(c));
}

PolyF4 PolyF4::xn_minus_1(int n) {
    std::vector<F4> c(static_cast<size_t>(n) + 1, F4(0));
    c[0] = F4::one();
    c.back() = F4::one();
    return PolyF4(std::move(c));
}

int PolyF4::weight() const {
    int w = 0;
    for (F4 v : c_)
        if (!v.is_zero()) ++w;
    return w;
}

F4 PolyF4::eval(F4 x) const {
    F4 acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyF4 operator+(const PolyF4& p, const PolyF4& q) {
    std::vector<F4> c(std::max(p.c_.size(), q.c_.size()), F4(0));
    for (size_t i = 0; i < c.size(); ++i) {
        F4 v(0);
        if (i < p.c_.size()) v += p.c_[i];
        if (i < q.c_.size()) v += q.c_[i];
        c[i] = v;
    }
    return PolyF4(std::move(c));
}

PolyF4 operator*(const PolyF4& p, const PolyF4& q) {
    if (p.is_zero() || q.is_zero()) return PolyF4();
    std::vector<F4> c(p.c_.size() + q.c_.size() - 1, F4(0));
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero()) continue;
        for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    }
    return PolyF4(std::move(c));
}

PolyF4 PolyF4::scaled(F4 s) const {
    std::vector<F4> c(c_);
    for (F4& v : c) v *= s;
    return PolyF4(std::move(c));
}

PolyF4 PolyF4::shifted(int k) const {
    if (is_zero()) return PolyF4();
    std::vector<F4> c(c_.size() + static_cast<size_t>(k), F4(0));
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return PolyF4(std::move(c));
}

bool PolyF4::lex_less(const PolyF4& p, const PolyF4& q) {
    size_t n = std::max(p.c_.size(), q.c_.size());
    for (size_t i = 0; i < n; ++i) {
        F4 a = p.coeff(static_cast<int>(i)), b = q.coeff(static_cast<int>(i));
        if (a != b) return a < b;
    }
    return p.c_.size() < q.c_.size();
}

DivMod poly_divmod(const PolyF4& dividend, const PolyF4& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    if (dividend.deg() < divisor.deg()) return {PolyF4(), dividend};

    std::vector<F4> rem(dividend.coeffs());
    std::vector<F4> quot(static_cast<size_t>(dividend.deg() - divisor.deg()) + 1, F4(0));
    F4 inv_lead = f4_inv(divisor.lead());
    for (int d = dividend.deg(); d >= divisor.deg(); --d) {
        F4 c = rem[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        F4 q = c * inv_lead;
        quot[static_cast<size_t>(d - divisor.deg())] = q;
        for (int j = 0; j <= divisor.deg(); ++j)
            rem[static_cast<size_t>(d - divisor.deg() + j)] += q * divisor.coeff(j);
    }
    return {PolyF4(std::move(quot)), PolyF4(std::move(rem))};
}

PolyF4 poly_mod(const PolyF4& p, const PolyF4& m) { return poly_divmod(p, m).rem; }

bool divides(const PolyF4& d, const PolyF4& p) {
    if (d.is_zero()) return p.is_zero();
    return poly_mod(p, d).is_zero();
}

PolyF4 monic(const PolyF4& p) {
    if (p.is_zero()) return p;
    return p.scaled(f4_inv(p.lead()));
}

PolyF4 poly_gcd(PolyF4 p, PolyF4 q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("poly_gcd: gcd(0, 0) undefined");
    while (!q.is_zero()) {
        PolyF4 r = poly_mod(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    return monic(p);
}

PolyF4 reciprocal(const PolyF4& p) {
    if (p.is_zero() || p.coeff(0).is_zero())
        throw std::invalid_argument("reciprocal: constant term is zero");
    std::vector<F4> c(p.coeffs().rbegin(), p.coeffs().rend());
    PolyF4 rev{std::move(c)};
    return rev.scaled(f4_inv(p.coeff(0)));
}

PolyF4 frobenius(const PolyF4& p) {
    std::vector<F4> c(p.coeffs());
    for (F4& v : c) v = f4_conj(v);
    return PolyF4(std::move(c));
}

std::string print_poly(const PolyF4& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.deg(); d >= 0; --d) {
        F4 c = p.coeff(d);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
            out += f4_str(c);
            continue;
        }
        if (c != F4::one()) {
            out += f4_str(c);
            out += "*";
        }
        out += "x";
        if (d > 1) out += "^" + std::to_string(d);
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_poly: " + what + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool peek_x() {
        skip_ws();
        return pos < s.size() && (s[pos] == 'x' || s[pos] == 'X');
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    unsigned take_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
        unsigned v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned>(s[pos] - '0');
            if (v > 100000) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    // coeff := '0' | '1' | 'w' | 'w^2'
    F4 take_coeff() {
        skip_ws();
        if (pos >= s.size()) fail("expected coefficient");
        char c = s[pos];
        if (c == '0' || c == '1') {
            ++pos;
            return F4(static_cast<uint8_t>(c - '0'));
        }
        if (c == 'w') {
            ++pos;
            if (peek('^')) {
                ++pos;
                skip_ws();
                if (pos < s.size() && s[pos] == '2') {
                    ++pos;
                    return F4::w2();
                }
                fail("expected 'w^2'");
            }
            return F4::w();
        }
        fail("expected coefficient");
    }

    // mono := 'x' | 'x^' uint
    unsigned take_mono() {
        skip_ws();
        if (!peek_x()) fail("expected 'x'");
        ++pos;
        if (peek('^')) {
            ++pos;
            return take_uint();
        }
        return 1;
    }

    // term := coeff | coeff '*' mono | mono
    PolyF4 take_term() {
        skip_ws();
        if (peek_x()) return PolyF4::monomial(F4::one(), static_cast<int>(take_mono()));
        F4 c = take_coeff();
        if (peek('*')) {
            ++pos;
            return PolyF4::monomial(c, static_cast<int>(take_mono()));
        }
        return PolyF4::constant(c);
    }

    PolyF4 run() {
        PolyF4 acc = take_term();
        skip_ws();
        while (pos < s.size()) {
            expect('+');
            acc = acc + take_term();
            skip_ws();
        }
        return acc;
    }
};

}  // namespace

PolyF4 parse_poly(const std::string& text) {
    Parser p{text};
    return p.run();
}

}  // namespace m2c
