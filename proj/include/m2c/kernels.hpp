#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace m2c {

// Exhaustive-enumeration kernels behind the distance and enumerator engines.
// A scalar reference implementation always exists; an AVX2 variant is
// selected at runtime when the CPU supports it (override with the
// M2CODES_KERNEL environment variable: auto|scalar|avx2).  Both variants
// enumerate the same message space with incremental radix-4 odometer
// updates, so results are identical by construction and are additionally
// equivalence-tested.
enum class Kernel { Auto, Scalar, Avx2 };

bool kernel_avx2_supported();
Kernel kernel_resolve(Kernel k);
std::string kernel_name(Kernel k);

// A linear enumeration job: k generator rows over GF(4), each bitsliced into
// two 64-bit planes (lo, hi); messages range over all 4^k combinations.
struct EnumJob {
    int n = 0;                                     // symbols per word, <= 64
    std::vector<std::array<uint64_t, 2>> rows;     // k <= 31 rows
};

// Exact minimum weight over the 4^k - 1 nonzero codewords.  If early_exit > 0
// and a weight <= early_exit is seen, enumeration stops; the result is exact
// whenever early_exit is a valid lower bound on the code distance.
int min_weight(const EnumJob& job, int partitions = 1, Kernel k = Kernel::Auto, int early_exit = 0);

// Weight histogram over all 4^k codewords (the zero word included).
std::array<uint64_t, 65> weight_hist(const EnumJob& job, int partitions = 1, Kernel k = Kernel::Auto);

// Joint Bachoc-weight histogram for codes over A = M2(F2) presented in
// u-coordinates: residue rows feed the first plane pair only, torsion rows
// feed both (a torsion message symbol t contributes u*t = t + i*t).
// Entry (n1, n2) counts words with n1 symbols of weight 1 and n2 of weight 2;
// the result is indexed n1 * 65 + n2.
struct BweJob {
    int n = 0;
    std::vector<std::array<uint64_t, 2>> r_rows;
    std::vector<std::array<uint64_t, 2>> t_rows;
};

std::vector<uint64_t> bwe_hist(const BweJob& job, int partitions = 1, Kernel k = Kernel::Auto);

}  // namespace m2c
