#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "m2c/factor.hpp"
#include "oracles.hpp"

using namespace m2c;
using namespace m2c_test;

namespace {

ACyclicCode triple(int n, const char* f, const char* h) {
    PolyF4 pf = parse_poly(f), ph = parse_poly(h);
    PolyF4 g = poly_divmod(PolyF4::xn_minus_1(n), pf * ph).quot;
    return ACyclicCode::build(pf, g, ph, n);
}

uint64_t key_of(const AVector& v) {
    uint64_t k = 0;
    for (int j = v.len() - 1; j >= 0; --j) k = (k << 4) | static_cast<uint64_t>(v.get(j).index());
    return k;
}

}  // namespace

TEST_CASE("construction and cardinality") {
    ACyclicCode c3 = triple(3, "x+w", "x+1");
    CHECK(c3.g == parse_poly("x+w^2"));
    CHECK(c3.log4_cardinality() == 3);  // |C| = 4^3

    ACyclicCode triv = ACyclicCode::build(PolyF4::one(), PolyF4::one(), PolyF4::xn_minus_1(3), 3);
    CHECK(triv.log4_cardinality() == 3);  // 4^n

    ACyclicCode c7 = triple(7, "x^3+x+1", "x+1");
    CHECK(c7.g == parse_poly("x^3+x^2+1"));
    CHECK(c7.g == reciprocal(c7.f));

    CHECK_THROWS_AS(ACyclicCode::build(parse_poly("x+1"), parse_poly("x+1"), parse_poly("x+w"), 3),
                    std::invalid_argument);  // wrong product and not coprime
    CHECK_THROWS_AS(triple(4, "x+1", "x+1"), std::invalid_argument);  // even length
}

TEST_CASE("codeword sets: cardinality and shift closure by direct enumeration") {
    for (auto [n, f, h] : {std::tuple{3, "x+w", "x+1"}, {5, "x^2+w*x+1", "x+1"}, {7, "x^3+x+1", "x+1"},
                           {7, "x^3+x+1", "1"}, {3, "1", "x+1"}}) {
        ACyclicCode c = triple(n, f, h);
        auto words = all_codewords(c);
        std::set<uint64_t> seen;
        for (const auto& wv : words) seen.insert(key_of(wv));
        CHECK(BigInt(seen.size()) == c.cardinality());
        for (const auto& wv : words) CHECK(c.contains(wv.shift_cyclic()));
    }
}

TEST_CASE("residue and torsion from the codeword set agree with the generator-level answer") {
    for (auto [n, f, h] : {std::tuple{3, "x+w", "x+1"}, {5, "x^2+w*x+1", "x+1"}, {7, "x^3+x+1", "x+1"}}) {
        ACyclicCode c = triple(n, f, h);
        auto words = all_codewords(c);

        // mu(C): first u-coordinates of all codewords
        std::set<uint64_t> mu;
        for (const auto& wv : words) {
            F4Vec c1 = wv.u_first();
            mu.insert(c1.lo | (uint64_t(c1.hi) << 32));
        }
        std::set<uint64_t> res;
        for (const auto& wv : all_words(to_linear(c.residue()))) res.insert(wv.lo | (uint64_t(wv.hi) << 32));
        CHECK(mu == res);

        // {d : u d in C}
        std::set<uint64_t> tor_expected;
        for (const auto& wv : all_words(to_linear(c.torsion()))) tor_expected.insert(wv.lo | (uint64_t(wv.hi) << 32));
        std::set<uint64_t> tor;
        for (uint64_t idx = 0; idx < (uint64_t(1) << (2 * n)); ++idx) {
            F4Vec d = vec_from_index(idx, n);
            AVector ud = AVector::from_u_pair(F4Vec(n), d);  // u*d = 0 + u*d
            if (c.contains(ud)) tor.insert(d.lo | (uint64_t(d.hi) << 32));
        }
        CHECK(tor == tor_expected);

        CHECK(c.residue().dim == c.g.deg());
        CHECK(c.torsion().dim == c.g.deg() + c.h.deg());
    }

    // degenerate triple: residue = zero code, torsion = full space
    ACyclicCode triv = ACyclicCode::build(PolyF4::one(), PolyF4::one(), PolyF4::xn_minus_1(3), 3);
    CHECK(triv.residue().dim == 0);
    CHECK(triv.torsion().dim == 3);
}

TEST_CASE("forms") {
    AVector x(3);
    x.set(0, AElem::u());
    CHECK(euclidean_form(x, x).is_zero());  // u^2 = 0

    AVector y(1), z(1);
    y.set(0, AElem::scalar(F4::w()));
    z.set(0, AElem::scalar(F4::w()));
    CHECK(euclidean_form(y, z) == AElem::scalar(F4::w2()));
    CHECK(hermitian_form(y, z) == AElem::one());  // w * conj(w) = w * w^2

    CHECK_THROWS_AS(euclidean_form(x, y), std::invalid_argument);

    // the product identity x * conj(y) in the fixed representation, exhaustively
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            AElem xa = AElem::from_index(a), yb = AElem::from_index(b);
            AElem lhs = a_mul(xa, a_conj(yb));
            AElem expect{xa.a * f4_conj(yb.a) + f4_conj(xa.b) * yb.b,
                         f4_conj(xa.a) * yb.b + xa.b * f4_conj(yb.a)};
            CHECK(lhs == expect);
        }
}

TEST_CASE("predicted dual and the self-duality predicate") {
    ACyclicCode c3 = triple(3, "x+w", "x+1");
    ACyclicCode d3 = predicted_dual(c3);
    CHECK(d3.f == c3.f);
    CHECK(d3.g == c3.g);
    CHECK(d3.h == c3.h);
    CHECK(is_self_dual_triple(c3));
    CHECK(is_self_dual_triple(triple(3, "x+w^2", "x+1")));  // the reversal partner

    ACyclicCode triv = ACyclicCode::build(PolyF4::one(), PolyF4::one(), PolyF4::xn_minus_1(5), 5);
    ACyclicCode dtriv = predicted_dual(triv);
    CHECK(dtriv.f == triv.f);
    CHECK(dtriv.h == triv.h);
    CHECK(is_self_dual_triple(triple(7, "x^3+x+1", "x+1")));
    CHECK_FALSE(is_self_dual_triple(triple(7, "x^3+x+1", "1")));

    // involution and cardinality pairing over all triples at small lengths
    for (int n : {3, 7}) {
        auto fac = factorize_xn_minus_1(n);
        auto fs = fac.factors();
        uint64_t total = 1;
        for (size_t i = 0; i < fs.size(); ++i) total *= 3;
        for (uint64_t a = 0; a < total; ++a) {
            PolyF4 f = PolyF4::one(), g = PolyF4::one(), h = PolyF4::one();
            uint64_t rest = a;
            for (const auto& p : fs) {
                switch (rest % 3) {
                    case 0: f = f * p; break;
                    case 1: g = g * p; break;
                    default: h = h * p; break;
                }
                rest /= 3;
            }
            ACyclicCode c = ACyclicCode::build(f, g, h, n);
            ACyclicCode d = predicted_dual(c);
            CHECK(c.log4_cardinality() + d.log4_cardinality() == 2 * n);  // |C| |C'| = 16^n
            ACyclicCode dd = predicted_dual(d);
            CHECK(dd.f == c.f);
            CHECK(dd.g == c.g);
            CHECK(dd.h == c.h);
            CHECK(is_self_dual_triple(c) == (d.f == c.f && d.g == c.g && d.h == c.h));
        }
    }
}

TEST_CASE("audit: n = 1 trivial triple") {
    ACyclicCode triv = ACyclicCode::build(PolyF4::one(), PolyF4::one(), PolyF4::xn_minus_1(1), 1);
    AuditReport rep = audit_claims(triv, AuditScope::Full);
    CHECK(rep.trivial);
    CHECK(rep.find("shift_closure", "matrix_ring")->verdict == "PASS");
    CHECK(rep.find("scalar_closure_right", "matrix_ring")->verdict == "PASS");
    // left multiplication by w already escapes the set
    CHECK(rep.find("scalar_closure_left", "matrix_ring")->verdict == "FAIL");
    // in the u-central shadow the annihilator is the predicted dual
    CHECK(rep.find("dual_formula_annihilator", "u_central")->verdict == "PASS");
    // the raw right annihilator of u*F4 is {0}, not the code itself
    CHECK(rep.find("dual_formula_annihilator_right", "matrix_ring")->verdict == "FAIL");
    // the trivial triple is Hermitian self-dual in the u-central shadow only
    CHECK(rep.find("hermitian_self_dual", "u_central")->verdict == "PASS");
    CHECK(rep.find("hermitian_self_dual", "matrix_ring")->verdict == "FAIL");
}

TEST_CASE("audit: n = 3 self-dual triple") {
    ACyclicCode c3 = triple(3, "x+w", "x+1");
    AuditReport rep = audit_claims(c3, AuditScope::Full);
    CHECK(rep.self_dual_triple);
    CHECK(rep.find("shift_closure", "matrix_ring")->verdict == "PASS");
    CHECK(rep.find("self_orthogonal_euclidean", "u_central")->verdict == "PASS");
    CHECK(rep.find("dual_formula_annihilator", "u_central")->verdict == "PASS");
    CHECK(rep.find("hermitian_self_dual", "matrix_ring")->verdict == "FAIL");
    CHECK(rep.find("hermitian_self_dual", "u_central")->verdict == "FAIL");
    // the sigma twist: literal self-orthogonality fails, with a counterexample
    const AuditClaim* so = rep.find("self_orthogonal_euclidean", "matrix_ring");
    CHECK(so->verdict == "FAIL");
    CHECK(!so->counterexample.empty());
    // chain-count claim at the degree-1 moduli is measured (and fails)
    const AuditClaim* chain = rep.find("submodule_chain_count", "matrix_ring");
    REQUIRE(chain != nullptr);
    CHECK(chain->verdict == "FAIL");
}

TEST_CASE("audit scope fast skips ambient scans but still reports closures") {
    ACyclicCode c7 = triple(7, "x^3+x+1", "x+1");
    AuditReport rep = audit_claims(c7, AuditScope::Fast);
    CHECK(rep.find("shift_closure", "matrix_ring")->verdict == "PASS");
    CHECK(rep.find("dual_formula_annihilator", "u_central")->verdict == "SKIP");
    CHECK(rep.find("hermitian_self_dual", "matrix_ring")->verdict == "FAIL");
}

TEST_CASE("u-central annihilator equals the predicted dual set by raw scan") {
    // verified inside audit for n = 3; repeat here independently at n = 3 for
    // a non-self-dual triple
    ACyclicCode c = triple(3, "x+w", "1");
    ACyclicCode pred = predicted_dual(c);
    auto gens = additive_generators(c);
    std::set<uint64_t> annih;
    for (uint64_t idx = 0; idx < (uint64_t(1) << (4 * 3)); ++idx) {
        AVector y = avector_from_index(idx, 3);
        bool ok = true;
        for (const auto& g : gens) {
            auto v = euclidean_form_u_central(g, y);
            if (!v[0].is_zero() || !v[1].is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) annih.insert(key_of(y));
    }
    std::set<uint64_t> predset;
    for (const auto& wv : all_codewords(pred)) predset.insert(key_of(wv));
    CHECK(annih == predset);
}
