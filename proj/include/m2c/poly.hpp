#pragma once

#include <string>
#include <vector>

#include "m2c/f4.hpp"

namespace m2c {

// Dense univariate polynomial over GF(4), coefficients lowest degree first.
// Normalized form has no trailing zeros; the zero polynomial is the empty
// coefficient vector, with degree reported as -1.
class PolyF4 {
  public:
    PolyF4() = default;
    explicit PolyF4(std::vector<F4> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyF4 zero() { return PolyF4(); }
    static PolyF4 one() { return constant(F4::one()); }
    static PolyF4 constant(F4 v);
    static PolyF4 x();                   // the monomial X
    static PolyF4 monomial(F4 v, int d); // v * X^d
    static PolyF4 xn_minus_1(int n);     // X^n + 1 (characteristic 2)

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == F4::one(); }
    bool is_monic() const { return !c_.empty() && c_.back() == F4::one(); }

    F4 coeff(int d) const { return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(d)] : F4(0); }
    const std::vector<F4>& coeffs() const { return c_; }

    F4 lead() const { return c_.empty() ? F4(0) : c_.back(); }
    int weight() const;  // number of nonzero coefficients

    F4 eval(F4 x) const;

    friend bool operator==(const PolyF4& p, const PolyF4& q) { return p.c_ == q.c_; }
    friend bool operator!=(const PolyF4& p, const PolyF4& q) { return !(p == q); }

    friend PolyF4 operator+(const PolyF4& p, const PolyF4& q);
    friend PolyF4 operator*(const PolyF4& p, const PolyF4& q);
    PolyF4 scaled(F4 s) const;
    PolyF4 shifted(int k) const;  // * X^k

    // Compares coefficient sequences from the constant term, 0 < 1 < w < w^2,
    // shorter (lower-degree) polynomial first on ties.
    static bool lex_less(const PolyF4& p, const PolyF4& q);

  private:
    std::vector<F4> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

struct DivMod {
    PolyF4 quot, rem;
};

DivMod poly_divmod(const PolyF4& dividend, const PolyF4& divisor);
PolyF4 poly_mod(const PolyF4& p, const PolyF4& m);
bool divides(const PolyF4& d, const PolyF4& p);
PolyF4 poly_gcd(PolyF4 p, PolyF4 q);  // monic
PolyF4 monic(const PolyF4& p);

// p*(X) = p(0)^-1 * X^deg(p) * p(1/X); requires p(0) != 0.
PolyF4 reciprocal(const PolyF4& p);

// Coefficient-wise squaring (the Frobenius twist).
PolyF4 frobenius(const PolyF4& p);

// Text format shared by CLI arguments, JSON fields and table output:
//   polynomial := term ('+' term)*
//   term       := coeff | coeff '*' mono | mono
//   mono       := 'x' | 'x^' uint
//   coeff      := '0' | '1' | 'w' | 'w^2'
// Whitespace is ignored; 'X' is accepted on input.
std::string print_poly(const PolyF4& p);
PolyF4 parse_poly(const std::string& text);

}  // namespace m2c
