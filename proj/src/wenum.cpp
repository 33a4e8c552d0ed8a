#include "m2c/wenum.hpp"

#include <stdexcept>
#include <vector>

namespace m2c {

namespace {

// Pascal triangle up to N over BigInt.
std::vector<std::vector<BigInt>> binomials(int N) {
    std::vector<std::vector<BigInt>> b(static_cast<size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        b[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 0);
        b[static_cast<size_t>(i)][0] = 1;
        for (int j = 1; j <= i; ++j)
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                (j <= i - 1 ? b[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] : BigInt(0));
    }
    return b;
}

}  // namespace

WeightEnumerator macwilliams_transform(const WeightEnumerator& we, const BigInt& cardinality) {
    const int N = we.length;
    if (cardinality <= 0) throw std::domain_error("macwilliams_transform: nonpositive cardinality");
    if (we.cardinality() != cardinality)
        throw std::domain_error("macwilliams_transform: cardinality does not match the enumerator");

    auto C = binomials(N);
    std::vector<BigInt> pow3(static_cast<size_t>(N) + 1);
    pow3[0] = 1;
    for (int i = 1; i <= N; ++i) pow3[static_cast<size_t>(i)] = pow3[static_cast<size_t>(i - 1)] * 3;

    WeightEnumerator out;
    out.length = N;
    for (int j = 0; j <= N; ++j) {
        // K_j(w) = sum_i (-1)^i 3^(j-i) C(w, i) C(N-w, j-i)
        BigInt acc = 0;
        for (const auto& [w, Aw] : we.counts) {
            if (Aw == 0) continue;
            BigInt kr = 0;
            for (int i = 0; i <= j; ++i) {
                if (i > w || j - i > N - w) continue;
                BigInt term = C[static_cast<size_t>(w)][static_cast<size_t>(i)] *
                              C[static_cast<size_t>(N - w)][static_cast<size_t>(j - i)] *
                              pow3[static_cast<size_t>(j - i)];
                if (i & 1)
                    kr -= term;
                else
                    kr += term;
            }
            acc += Aw * kr;
        }
        BigInt q = acc / cardinality, r = acc % cardinality;
        if (r != 0 || q < 0)
            throw std::domain_error("macwilliams_transform: transform coefficient for weight " + std::to_string(j) +
                                    " is not a nonnegative integer; input is not a code enumerator");
        if (q != 0) out.counts[j] = q;
    }
    return out;
}

bool is_formally_self_dual(const WeightEnumerator& we) {
    return macwilliams_transform(we, we.cardinality()) == we;
}

}  // namespace m2c
