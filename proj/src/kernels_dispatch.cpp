#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "kernels_impl.hpp"

namespace m2c {

namespace {

using detail::BweMultTable;
using detail::MultTable;

Kernel env_kernel() {
    const char* e = std::getenv("M2CODES_KERNEL");
    if (!e) return Kernel::Auto;
    std::string s(e);
    if (s == "scalar") return Kernel::Scalar;
    if (s == "avx2") return Kernel::Avx2;
    return Kernel::Auto;
}

std::vector<std::pair<uint64_t, uint64_t>> split_range(uint64_t total, int parts) {
    if (parts < 1) parts = 1;
    if (static_cast<uint64_t>(parts) > total) parts = static_cast<int>(std::max<uint64_t>(1, total));
    std::vector<std::pair<uint64_t, uint64_t>> out;
    out.reserve(static_cast<size_t>(parts));
    for (int i = 0; i < parts; ++i) {
        uint64_t b = total / static_cast<uint64_t>(parts) * static_cast<uint64_t>(i) +
                     std::min<uint64_t>(static_cast<uint64_t>(i), total % static_cast<uint64_t>(parts));
        uint64_t e = total / static_cast<uint64_t>(parts) * static_cast<uint64_t>(i + 1) +
                     std::min<uint64_t>(static_cast<uint64_t>(i + 1), total % static_cast<uint64_t>(parts));
        if (b < e) out.emplace_back(b, e);
    }
    return out;
}

// Runs worker(chunk_index, begin, end) over all chunks, on threads when useful.
template <typename Worker>
void run_chunks(const std::vector<std::pair<uint64_t, uint64_t>>& chunks, uint64_t total, Worker&& worker) {
    if (chunks.size() <= 1 || total < (uint64_t(1) << 18)) {
        for (size_t i = 0; i < chunks.size(); ++i) worker(i, chunks[i].first, chunks[i].second);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks.size());
    for (size_t i = 0; i < chunks.size(); ++i)
        pool.emplace_back([&, i] { worker(i, chunks[i].first, chunks[i].second); });
    for (auto& t : pool) t.join();
}

void validate(int n, size_t k) {
    if (n < 1 || n > 64) throw std::invalid_argument("enumeration kernel: length out of range");
    if (k > 31) throw std::invalid_argument("enumeration kernel: too many generator rows");
}

}  // namespace

bool kernel_avx2_supported() {
#if defined(M2C_X86)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Kernel kernel_resolve(Kernel k) {
    if (k == Kernel::Auto) {
        Kernel e = env_kernel();
        if (e != Kernel::Auto) k = e;
    }
    if (k == Kernel::Auto) return kernel_avx2_supported() ? Kernel::Avx2 : Kernel::Scalar;
    if (k == Kernel::Avx2 && !kernel_avx2_supported())
        throw std::runtime_error("AVX2 kernel requested but not supported on this CPU");
    return k;
}

std::string kernel_name(Kernel k) {
    switch (kernel_resolve(k)) {
        case Kernel::Avx2: return "avx2";
        default: return "scalar";
    }
}

int min_weight(const EnumJob& job, int partitions, Kernel k, int early_exit) {
    validate(job.n, job.rows.size());
    if (job.rows.empty()) throw std::invalid_argument("min_weight: empty code");
    k = kernel_resolve(k);
    MultTable mt(job.rows);

    uint64_t total;
    bool avx2 = false;
#if defined(M2C_X86)
    avx2 = (k == Kernel::Avx2);
#endif
    total = avx2 ? (uint64_t(1) << (2 * (mt.k - 1))) : (uint64_t(1) << (2 * mt.k));

    auto chunks = split_range(total, partitions);
    std::vector<int> results(chunks.size(), INT_MAX);
    run_chunks(chunks, total, [&](size_t i, uint64_t b, uint64_t e) {
#if defined(M2C_X86)
        if (avx2) {
            results[i] = detail::avx2_min_range(mt, b, e, early_exit);
            return;
        }
#endif
        results[i] = detail::scalar_min_range(mt, b, e, early_exit);
    });
    int best = INT_MAX;
    for (int r : results) best = std::min(best, r);
    return best;
}

std::array<uint64_t, 65> weight_hist(const EnumJob& job, int partitions, Kernel k) {
    validate(job.n, job.rows.size());
    std::array<uint64_t, 65> out{};
    if (job.rows.empty()) {
        out[0] = 1;
        return out;
    }
    k = kernel_resolve(k);
    MultTable mt(job.rows);

    bool avx2 = false;
#if defined(M2C_X86)
    avx2 = (k == Kernel::Avx2);
#endif
    uint64_t total = avx2 ? (uint64_t(1) << (2 * (mt.k - 1))) : (uint64_t(1) << (2 * mt.k));

    auto chunks = split_range(total, partitions);
    std::vector<std::array<uint64_t, 65>> parts(chunks.size());
    for (auto& p : parts) p.fill(0);
    run_chunks(chunks, total, [&](size_t i, uint64_t b, uint64_t e) {
#if defined(M2C_X86)
        if (avx2) {
            detail::avx2_hist_range(mt, b, e, parts[i].data());
            return;
        }
#endif
        detail::scalar_hist_range(mt, b, e, parts[i].data());
    });
    for (const auto& p : parts)
        for (int w = 0; w < 65; ++w) out[static_cast<size_t>(w)] += p[static_cast<size_t>(w)];
    return out;
}

std::vector<uint64_t> bwe_hist(const BweJob& job, int partitions, Kernel k) {
    validate(job.n, job.r_rows.size() + job.t_rows.size());
    std::vector<uint64_t> out(65 * 65, 0);
    if (job.r_rows.empty() && job.t_rows.empty()) {
        out[0] = 1;
        return out;
    }
    k = kernel_resolve(k);
    BweMultTable mt(job.r_rows, job.t_rows);

    bool avx2 = false;
#if defined(M2C_X86)
    avx2 = (k == Kernel::Avx2);
#endif
    uint64_t total = avx2 ? (uint64_t(1) << (2 * (mt.k - 1))) : (uint64_t(1) << (2 * mt.k));

    auto chunks = split_range(total, partitions);
    std::vector<std::vector<uint64_t>> parts(chunks.size(), std::vector<uint64_t>(65 * 65, 0));
    run_chunks(chunks, total, [&](size_t i, uint64_t b, uint64_t e) {
#if defined(M2C_X86)
        if (avx2) {
            detail::avx2_bwe_range(mt, b, e, parts[i].data());
            return;
        }
#endif
        detail::scalar_bwe_range(mt, b, e, parts[i].data());
    });
    for (const auto& p : parts)
        for (size_t j = 0; j < out.size(); ++j) out[j] += p[j];
    return out;
}

}  // namespace m2c
