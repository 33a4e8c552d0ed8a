#include "m2c/qcode.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace m2c {

QCyclicCode QCyclicCode::make(int n, const PolyF4& gen) {
    if (n < 1 || n > 64) throw std::invalid_argument("cyclic code: length out of range");
    if (gen.is_zero() || !gen.is_monic()) throw std::invalid_argument("cyclic code: generator must be monic");
    if (!divides(gen, PolyF4::xn_minus_1(n)))
        throw std::invalid_argument("cyclic code: generator does not divide X^n-1");
    return {n, gen, n - gen.deg()};
}

PolyF4 dual_generator(const QCyclicCode& c) {
    return reciprocal(poly_divmod(PolyF4::xn_minus_1(c.n), c.gen).quot);
}

namespace {

// In-place reduced row echelon form; returns rank.
int rref(std::vector<F4Vec>& rows, int n) {
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[static_cast<size_t>(r)].get(col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        F4 inv = f4_inv(rows[static_cast<size_t>(rank)].get(col));
        rows[static_cast<size_t>(rank)] = rows[static_cast<size_t>(rank)].scaled(inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            F4 c = rows[static_cast<size_t>(r)].get(col);
            if (!c.is_zero())
                rows[static_cast<size_t>(r)] = rows[static_cast<size_t>(r)] + rows[static_cast<size_t>(rank)].scaled(c);
        }
        ++rank;
    }
    rows.resize(static_cast<size_t>(rank));
    return rank;
}

}  // namespace

LinearCodeQ LinearCodeQ::from_rows(int n, std::vector<F4Vec> rows) {
    if (n < 1 || n > 64) throw std::invalid_argument("linear code: length out of range");
    for (const auto& r : rows)
        if (r.len != n) throw std::invalid_argument("linear code: row length mismatch");
    rref(rows, n);
    return {n, std::move(rows)};
}

std::vector<F4Vec> cyclic_generator_rows(const PolyF4& gen, int n) {
    std::vector<F4Vec> rows;
    const int k = n - gen.deg();
    if (k <= 0) return rows;
    rows.reserve(static_cast<size_t>(k));
    F4Vec g = vec_from_poly(gen, n);
    for (int j = 0; j < k; ++j) {
        rows.push_back(g);
        g = g.shift_cyclic();
    }
    return rows;
}

LinearCodeQ to_linear(const QCyclicCode& c) { return LinearCodeQ::from_rows(c.n, cyclic_generator_rows(c.gen, c.n)); }

LinearCodeQ nullspace(const LinearCodeQ& c) {
    // Orthogonal complement under sum x_j y_j: pivot/free column split of the RREF.
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(c.n), false);
    for (const auto& r : c.rows) {
        for (int j = 0; j < c.n; ++j)
            if (!r.get(j).is_zero()) {
                pivot_col.push_back(j);
                is_pivot[static_cast<size_t>(j)] = true;
                break;
            }
    }
    std::vector<F4Vec> out;
    for (int j = 0; j < c.n; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        F4Vec v(c.n);
        v.set(j, F4::one());
        for (size_t r = 0; r < c.rows.size(); ++r) v.set(pivot_col[r], c.rows[r].get(j));
        out.push_back(v);
    }
    return LinearCodeQ::from_rows(c.n, std::move(out));
}

EnumJob enum_job(const QCyclicCode& c) {
    EnumJob job;
    job.n = c.n;
    for (const auto& r : cyclic_generator_rows(c.gen, c.n)) job.rows.push_back({r.lo, r.hi});
    return job;
}

EnumJob enum_job(const LinearCodeQ& c) {
    EnumJob job;
    job.n = c.n;
    for (const auto& r : c.rows) job.rows.push_back({r.lo, r.hi});
    return job;
}

int default_partitions() {
    if (const char* e = std::getenv("M2CODES_PARTITIONS")) {
        int v = std::atoi(e);
        if (v >= 1 && v <= 256) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp<unsigned>(hc, 1, 8));
}

namespace {

int resolve_partitions(const EngineOptions& opt) { return opt.partitions > 0 ? opt.partitions : default_partitions(); }

WeightEnumerator hist_to_enumerator(const std::array<uint64_t, 65>& h, int n) {
    WeightEnumerator we;
    we.length = n;
    for (int w = 0; w <= n; ++w)
        if (h[static_cast<size_t>(w)]) we.counts[w] = h[static_cast<size_t>(w)];
    return we;
}

// Shared route selection: exhaust the primal (k) or the dual (n-k), whichever
// is cheaper, refusing if neither fits the budget.
template <typename MakeJob, typename MakeDualJob>
WeightEnumerator enumerator_route(int n, int k, Budget b, const EngineOptions& opt, MakeJob&& primal,
                                  MakeDualJob&& dual) {
    const int kd = n - k;
    const bool can_primal = b.allows(k);
    const bool can_dual = b.allows(kd);
    if (!can_primal && !can_dual)
        throw BudgetExceeded("enumeration budget exceeded: 4^" + std::to_string(std::min(k, kd)) +
                             " steps needed, cap is 4^" + std::to_string(b.max_exponent));
    const bool use_primal = can_primal && (!can_dual || k <= kd);
    int parts = resolve_partitions(opt);
    if (use_primal) {
        auto h = weight_hist(primal(), parts, opt.kernel);
        return hist_to_enumerator(h, n);
    }
    auto h = weight_hist(dual(), parts, opt.kernel);
    WeightEnumerator dual_we = hist_to_enumerator(h, n);
    return macwilliams_transform(dual_we, big_pow(4, static_cast<unsigned>(kd)));
}

}  // namespace

WeightEnumerator weight_enumerator(const QCyclicCode& c, Budget b, EngineOptions opt) {
    return enumerator_route(
        c.n, c.dim, b, opt, [&] { return enum_job(c); },
        [&] { return enum_job(QCyclicCode::make(c.n, dual_generator(c))); });
}

WeightEnumerator weight_enumerator(const LinearCodeQ& c, Budget b, EngineOptions opt) {
    return enumerator_route(
        c.n, c.dim(), b, opt, [&] { return enum_job(c); }, [&] { return enum_job(nullspace(c)); });
}

namespace {

template <typename Code>
int min_distance_impl(const Code& c, int n, int k, Budget b, const EngineOptions& opt) {
    if (k < 1) throw std::invalid_argument("min_distance: dimension must be at least 1");
    const int kd = n - k;
    if (b.allows(k) && (k <= kd || !b.allows(kd)))
        return min_weight(enum_job(c), resolve_partitions(opt), opt.kernel);
    WeightEnumerator we = weight_enumerator(c, b, opt);  // picks the dual route
    return we.min_nonzero_weight();
}

}  // namespace

int min_distance(const QCyclicCode& c, Budget b, EngineOptions opt) { return min_distance_impl(c, c.n, c.dim, b, opt); }

int min_distance(const LinearCodeQ& c, Budget b, EngineOptions opt) {
    return min_distance_impl(c, c.n, c.dim(), b, opt);
}

LinearCodeQ plotkin_sum(const LinearCodeQ& c1, const LinearCodeQ& c2) {
    if (c1.n != c2.n) throw std::invalid_argument("plotkin_sum: length mismatch");
    const int n = c1.n, N = 2 * n;
    if (N > 64) throw std::invalid_argument("plotkin_sum: doubled length exceeds 64");
    std::vector<F4Vec> rows;
    for (const auto& u : c1.rows) {
        F4Vec r(N);
        for (int j = 0; j < n; ++j) {
            r.set(j, u.get(j));
            r.set(n + j, u.get(j));
        }
        rows.push_back(r);
    }
    for (const auto& v : c2.rows) {
        F4Vec r(N);
        for (int j = 0; j < n; ++j) r.set(n + j, v.get(j));
        rows.push_back(r);
    }
    return LinearCodeQ::from_rows(N, std::move(rows));
}

QCyclicCode repeated_root_double(const PolyF4& g1, const PolyF4& g2, int n) {
    if (n % 2 == 0) throw std::invalid_argument("repeated_root_double: length must be odd");
    if (!divides(g1 * g2, PolyF4::xn_minus_1(n)))
        throw std::invalid_argument("repeated_root_double: g1*g2 does not divide X^n-1");
    return QCyclicCode::make(2 * n, g1 * g1 * g2);
}

}  // namespace m2c
