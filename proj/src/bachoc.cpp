#include "m2c/bachoc.hpp"

#include <stdexcept>

namespace m2c {

WeightEnumerator BachocEnumerator::substitute_hamming() const {
    WeightEnumerator we;
    we.length = 2 * length;
    for (const auto& [k, v] : counts) we.counts[k.first + 2 * k.second] += v;
    return we;
}

F4Vec bachoc_map(const AVector& v) {
    const int n = v.len();
    if (2 * n > 64) throw std::invalid_argument("bachoc_map: doubled length exceeds 64");
    F4Vec out(2 * n);
    for (int j = 0; j < n; ++j) {
        AElem s = v.get(j);
        out.set(j, s.a);
        out.set(n + j, s.b);
    }
    return out;
}

LinearCodeQ bachoc_image(const ACyclicCode& c) {
    const int n = c.n, N = 2 * n;
    if (N > 64) throw std::invalid_argument("bachoc_image: doubled length exceeds 64");
    std::vector<F4Vec> rows;
    for (const auto& r : cyclic_generator_rows(c.f * c.h, n)) {
        F4Vec row(N);
        for (int p = 0; p < n; ++p) row.set(p, r.get(p));
        rows.push_back(row);
    }
    for (const auto& t : cyclic_generator_rows(c.f, n)) {
        F4Vec row(N);
        for (int p = 0; p < n; ++p) {
            row.set(p, t.get(p));
            row.set(n + p, t.get(p));
        }
        rows.push_back(row);
    }
    return LinearCodeQ::from_rows(N, std::move(rows));
}

LinearCodeQ swap_halves(const LinearCodeQ& c) {
    if (c.n % 2) throw std::invalid_argument("swap_halves: odd length");
    const int h = c.n / 2;
    std::vector<F4Vec> rows;
    rows.reserve(c.rows.size());
    for (const auto& r : c.rows) {
        F4Vec s(c.n);
        for (int j = 0; j < h; ++j) {
            s.set(j, r.get(h + j));
            s.set(h + j, r.get(j));
        }
        rows.push_back(s);
    }
    return LinearCodeQ::from_rows(c.n, std::move(rows));
}

BachocEnumerator bachoc_weight_enumerator(const ACyclicCode& c, Budget b, EngineOptions opt) {
    const int k = c.log4_cardinality();
    if (!b.allows(k))
        throw BudgetExceeded("bachoc_weight_enumerator: 4^" + std::to_string(k) + " codewords exceed cap 4^" +
                             std::to_string(b.max_exponent));
    BweJob job;
    job.n = c.n;
    for (const auto& r : cyclic_generator_rows(c.f * c.h, c.n)) job.r_rows.push_back({r.lo, r.hi});
    for (const auto& t : cyclic_generator_rows(c.f, c.n)) job.t_rows.push_back({t.lo, t.hi});
    int parts = opt.partitions > 0 ? opt.partitions : default_partitions();
    auto hist = bwe_hist(job, parts, opt.kernel);
    BachocEnumerator bwe;
    bwe.length = c.n;
    for (int n1 = 0; n1 <= c.n; ++n1)
        for (int n2 = 0; n2 + n1 <= c.n; ++n2) {
            uint64_t v = hist[static_cast<size_t>(n1) * 65 + static_cast<size_t>(n2)];
            if (v) bwe.counts[{n1, n2}] = v;
        }
    return bwe;
}

namespace {

// Homogeneous trivariate polynomials in (a, b, c), keyed by the (b, c)
// exponents; the a exponent is degree - j - k.
using TriPoly = std::map<std::pair<int, int>, BigInt>;

TriPoly mul_linear(const TriPoly& p, const BigInt& ca, const BigInt& cb, const BigInt& cc) {
    TriPoly out;
    for (const auto& [e, v] : p) {
        if (ca != 0) out[{e.first, e.second}] += v * ca;
        if (cb != 0) out[{e.first + 1, e.second}] += v * cb;
        if (cc != 0) out[{e.first, e.second + 1}] += v * cc;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

BachocEnumerator bwe_macwilliams(const BachocEnumerator& bwe, const BigInt& cardinality) {
    if (cardinality <= 0) throw std::domain_error("bwe_macwilliams: nonpositive cardinality");
    if (bwe.cardinality() != cardinality)
        throw std::domain_error("bwe_macwilliams: cardinality does not match the enumerator");
    const int n = bwe.length;

    // powers of the three substituted linear forms
    std::vector<TriPoly> p0(static_cast<size_t>(n) + 1), p1(static_cast<size_t>(n) + 1), p2(static_cast<size_t>(n) + 1);
    p0[0] = p1[0] = p2[0] = TriPoly{{{0, 0}, 1}};
    for (int e = 1; e <= n; ++e) {
        p0[static_cast<size_t>(e)] = mul_linear(p0[static_cast<size_t>(e - 1)], 1, 6, 9);
        p1[static_cast<size_t>(e)] = mul_linear(p1[static_cast<size_t>(e - 1)], 1, 2, -3);
        p2[static_cast<size_t>(e)] = mul_linear(p2[static_cast<size_t>(e - 1)], 1, -2, 1);
    }

    TriPoly acc;
    for (const auto& [key, cnt] : bwe.counts) {
        const int n1 = key.first, n2 = key.second, n0 = n - n1 - n2;
        // product of the three power polynomials
        const TriPoly& prod = p0[static_cast<size_t>(n0)];
        TriPoly tmp;
        for (const auto& [ea, va] : prod)
            for (const auto& [eb, vb] : p1[static_cast<size_t>(n1)])
                tmp[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
        TriPoly full;
        for (const auto& [ea, va] : tmp)
            for (const auto& [eb, vb] : p2[static_cast<size_t>(n2)])
                full[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
        for (const auto& [e, v] : full) acc[e] += cnt * v;
    }

    BachocEnumerator out;
    out.length = n;
    for (const auto& [e, v] : acc) {
        if (v == 0) continue;
        BigInt q = v / cardinality, r = v % cardinality;
        if (r != 0 || q < 0)
            throw std::domain_error("bwe_macwilliams: coefficient (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") is not a nonnegative integer multiple");
        if (q != 0) out.counts[{e.first, e.second}] = q;
    }
    return out;
}

QCyclicCode doubled_cyclic_image(const ACyclicCode& c) { return QCyclicCode::make(2 * c.n, c.f * c.f * c.h); }

}  // namespace m2c
