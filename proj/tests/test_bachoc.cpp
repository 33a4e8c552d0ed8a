#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "m2c/classify.hpp"
#include "oracles.hpp"

using namespace m2c;
using namespace m2c_test;

namespace {

ACyclicCode triple(int n, const char* f, const char* h) {
    PolyF4 pf = parse_poly(f), ph = parse_poly(h);
    PolyF4 g = poly_divmod(PolyF4::xn_minus_1(n), pf * ph).quot;
    return ACyclicCode::build(pf, g, ph, n);
}

}  // namespace

TEST_CASE("componentwise map and weight preservation") {
    AVector v(1);
    v.set(0, AElem::u());
    F4Vec img = bachoc_map(v);
    CHECK(img.get(0) == F4::one());
    CHECK(img.get(1) == F4::one());
    CHECK(img.weight() == 2);

    AVector w(1);
    w.set(0, AElem::scalar(F4::w()));
    F4Vec imgw = bachoc_map(w);
    CHECK(imgw.get(0) == F4::w());
    CHECK(imgw.get(1) == F4::zero());
    CHECK(imgw.weight() == 1);

    CHECK(bachoc_map(AVector(5)).is_zero());

    // exhaustive at length 1, sampled at length 6
    for (int x = 0; x < 16; ++x) {
        AVector s(1);
        s.set(0, AElem::from_index(x));
        CHECK(bachoc_map(s).weight() == bachoc_weight(AElem::from_index(x)));
    }
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        AVector s(6);
        int total = 0;
        for (int j = 0; j < 6; ++j) {
            AElem e = AElem::from_index(static_cast<int>(rng() % 16));
            s.set(j, e);
            total += bachoc_weight(e);
        }
        CHECK(bachoc_map(s).weight() == total);
    }
}

TEST_CASE("image equals the half-swapped Plotkin sum, exactly") {
    for (auto [n, f, h] : {std::tuple{3, "x+w", "x+1"}, {7, "x^3+x+1", "x+1"}, {5, "x^2+w*x+1", "x+1"},
                           {7, "x^3+x+1", "1"}}) {
        ACyclicCode c = triple(n, f, h);
        LinearCodeQ img = bachoc_image(c);
        LinearCodeQ plot = plotkin_sum(to_linear(c.torsion()), to_linear(c.residue()));
        CHECK(img == swap_halves(plot));
        CHECK(img.dim() == c.residue().dim + c.torsion().dim);
    }

    // image membership agrees with the map on raw codewords
    ACyclicCode c3 = triple(3, "x+w", "x+1");
    LinearCodeQ img = bachoc_image(c3);
    auto words = all_codewords(c3);
    std::set<uint64_t> mapped, spanned;
    for (const auto& wv : words) {
        F4Vec m = bachoc_map(wv);
        mapped.insert(m.lo | (uint64_t(m.hi) << 32));
    }
    for (const auto& wv : all_words(img)) spanned.insert(wv.lo | (uint64_t(wv.hi) << 32));
    CHECK(mapped == spanned);
}

TEST_CASE("image parameters from the published rows") {
    ACyclicCode c3 = triple(3, "x+w", "x+1");
    LinearCodeQ img3 = bachoc_image(c3);
    CHECK(img3.n == 6);
    CHECK(img3.dim() == 3);
    CHECK(min_distance(img3) == 3);

    ACyclicCode c7 = triple(7, "x^3+x+1", "x+1");
    LinearCodeQ img7 = bachoc_image(c7);
    CHECK(img7.n == 14);
    CHECK(img7.dim() == 7);
    CHECK(min_distance(img7) == 4);

    // trivial code: image is {(t, t)}
    ACyclicCode triv = ACyclicCode::build(PolyF4::one(), PolyF4::one(), PolyF4::xn_minus_1(3), 3);
    LinearCodeQ imgt = bachoc_image(triv);
    CHECK(imgt.dim() == 3);
    for (const auto& wv : all_words(imgt))
        for (int j = 0; j < 3; ++j) CHECK(wv.get(j) == wv.get(3 + j));
}

TEST_CASE("joint weight enumerator") {
    // u*F4 at length 1: three singular nonzero words
    ACyclicCode triv1 = ACyclicCode::build(PolyF4::one(), PolyF4::one(), PolyF4::xn_minus_1(1), 1);
    BachocEnumerator bwe = bachoc_weight_enumerator(triv1);
    CHECK(bwe.counts == std::map<std::pair<int, int>, BigInt>{{{0, 0}, 1}, {{0, 1}, 3}});

    // zero code
    ACyclicCode zero = ACyclicCode::build(PolyF4::one(), PolyF4::xn_minus_1(3), PolyF4::one(), 3);
    CHECK(bachoc_weight_enumerator(zero).cardinality() == big_pow(4, 6));  // g = X^n-1: the full space
    ACyclicCode zero2 = ACyclicCode::build(PolyF4::xn_minus_1(3), PolyF4::one(), PolyF4::one(), 3);
    CHECK(bachoc_weight_enumerator(zero2).counts == std::map<std::pair<int, int>, BigInt>{{{0, 0}, 1}});

    // against a raw word-by-word recount
    ACyclicCode c3 = triple(3, "x+w", "x+1");
    CHECK(bachoc_weight_enumerator(c3) == bwe_of_words(all_codewords(c3), 3));

    CHECK_THROWS_AS(bachoc_weight_enumerator(triple(15, "x+w", "x^5+1"), Budget{4}), BudgetExceeded);
}

TEST_CASE("substitution identity against direct image enumeration") {
    for (auto [n, f, h] : {std::tuple{3, "x+w", "x+1"}, {5, "x^2+w*x+1", "x+1"}, {7, "x^3+x+1", "x+1"},
                           {7, "x^3+x+1", "1"}, {3, "1", "x+1"}}) {
        ACyclicCode c = triple(n, f, h);
        WeightEnumerator via_bwe = bachoc_weight_enumerator(c).substitute_hamming();
        WeightEnumerator direct = weight_enumerator(bachoc_image(c), Budget{16});
        CHECK(via_bwe == direct);
    }
}

TEST_CASE("joint-enumerator MacWilliams: fixed points and the trace-character dual") {
    // u*F4 in one coordinate is a fixed point
    ACyclicCode triv1 = ACyclicCode::build(PolyF4::one(), PolyF4::one(), PolyF4::xn_minus_1(1), 1);
    BachocEnumerator bwe1 = bachoc_weight_enumerator(triv1);
    CHECK(bwe_macwilliams(bwe1, bwe1.cardinality()) == bwe1);

    // zero code in one coordinate transforms to the full-space enumerator
    ACyclicCode zero1 = ACyclicCode::build(PolyF4::xn_minus_1(1), PolyF4::one(), PolyF4::one(), 1);
    BachocEnumerator z = bachoc_weight_enumerator(zero1);
    BachocEnumerator full = bwe_macwilliams(z, 1);
    CHECK(full.counts == std::map<std::pair<int, int>, BigInt>{{{0, 0}, 1}, {{1, 0}, 6}, {{0, 1}, 9}});

    // n = 3 self-dual triple: fixed point
    ACyclicCode c3 = triple(3, "x+w", "x+1");
    BachocEnumerator bwe3 = bachoc_weight_enumerator(c3);
    CHECK(bwe_macwilliams(bwe3, bwe3.cardinality()) == bwe3);

    // transform = enumerator of the trace-character annihilator, for every
    // additive subgroup of A in one coordinate (exhaustive desk check)
    int checked = 0;
    for (uint32_t mask = 1; mask < (1u << 16); ++mask) {
        if (!(mask & 1)) continue;
        bool closed = true;
        for (int x = 0; x < 16 && closed; ++x) {
            if (!(mask >> x & 1)) continue;
            for (int y = x; y < 16; ++y)
                if ((mask >> y & 1) && !(mask >> (x ^ y) & 1)) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        ++checked;
        std::vector<AVector> words;
        for (int x = 0; x < 16; ++x)
            if (mask >> x & 1) {
                AVector v(1);
                v.set(0, AElem::from_index(x));
                words.push_back(v);
            }
        BachocEnumerator bwe = bwe_of_words(words, 1);
        BachocEnumerator dual_direct = bwe_of_words(trace_dual_words(words, 1), 1);
        CHECK(bwe_macwilliams(bwe, BigInt(words.size())) == dual_direct);
    }
    CHECK(checked == 67);  // number of additive subgroups of a 16-element elementary group

    // and for the A-cyclic codes at length 3 (sampled factor triples)
    for (auto [n, f, h] : {std::tuple{3, "x+w", "x+1"}, {3, "x+w", "1"}, {3, "1", "x+1"}}) {
        ACyclicCode c = triple(n, f, h);
        auto words = all_codewords(c);
        BachocEnumerator bwe = bwe_of_words(words, n);
        BachocEnumerator dual_direct = bwe_of_words(trace_dual_words(additive_generators(c), n), n);
        CHECK(bwe_macwilliams(bwe, bwe.cardinality()) == dual_direct);
    }
}

TEST_CASE("doubled cyclic code has the image enumerator") {
    for (auto [n, f, h] :
         {std::tuple{3, "x+w", "x+1"}, {7, "x^3+x+1", "x+1"}, {3, "1", "x+1"}, {5, "x^2+w*x+1", "x+1"}}) {
        ACyclicCode c = triple(n, f, h);
        QCyclicCode dbl = doubled_cyclic_image(c);
        CHECK(dbl.n == 2 * n);
        CHECK(dbl.gen == c.f * c.f * c.h);
        CHECK(weight_enumerator(dbl, Budget{16}) == weight_enumerator(bachoc_image(c), Budget{16}));
    }
}

TEST_CASE("hermitian transfer to the image on self-orthogonal inputs") {
    // additive spans that are self-orthogonal for sum x_j conj(y_j), found by
    // scanning pairs of generators at length 2
    std::mt19937_64 rng(99);
    int found = 0;
    while (found < 25) {
        AVector g1(2), g2(2);
        for (int j = 0; j < 2; ++j) {
            g1.set(j, AElem::from_index(static_cast<int>(rng() % 16)));
            g2.set(j, AElem::from_index(static_cast<int>(rng() % 16)));
        }
        bool orth = hermitian_form(g1, g1).is_zero() && hermitian_form(g1, g2).is_zero() &&
                    hermitian_form(g2, g1).is_zero() && hermitian_form(g2, g2).is_zero();
        if (!orth) continue;
        ++found;
        // spanned words (F2-additive span of the two generators)
        std::vector<AVector> words{AVector(2), g1, g2, g1 + g2};
        for (const auto& x : words)
            for (const auto& y : words) {
                // quaternary Hermitian form of the images, with the second
                // block conjugated (the form the fixed representation
                // transfers to; verified here rather than assumed)
                F4Vec ix = bachoc_map(x), iy = bachoc_map(y);
                F4 acc(0);
                for (int j = 0; j < 2; ++j) acc += ix.get(j) * f4_conj(iy.get(j));
                for (int j = 2; j < 4; ++j) acc += f4_conj(ix.get(j)) * iy.get(j);
                CHECK(acc.is_zero());
            }
    }
}
