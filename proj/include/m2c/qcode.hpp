#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "m2c/f4vec.hpp"
#include "m2c/kernels.hpp"
#include "m2c/poly.hpp"
#include "m2c/wenum.hpp"

namespace m2c {

// Enumeration refused because it would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Budgets are exponents: at most 4^max_exponent enumeration steps.
struct Budget {
    int max_exponent = 14;

    bool allows(int k) const { return k <= max_exponent; }
};

// Quaternary cyclic code of length n with monic generator dividing X^n - 1.
struct QCyclicCode {
    int n = 0;
    PolyF4 gen;
    int dim = 0;

    static QCyclicCode make(int n, const PolyF4& gen);
};

// Generator of the Euclidean dual: reciprocal((X^n - 1) / gen).
PolyF4 dual_generator(const QCyclicCode& c);

// General quaternary linear code held as a generator matrix; rows are kept in
// reduced row echelon form, which is the canonical representative of the row
// space (two codes are equal iff their normalized rows are).
struct LinearCodeQ {
    int n = 0;
    std::vector<F4Vec> rows;  // RREF, rank = rows.size()

    static LinearCodeQ from_rows(int n, std::vector<F4Vec> rows);
    int dim() const { return static_cast<int>(rows.size()); }

    friend bool operator==(const LinearCodeQ& a, const LinearCodeQ& b) { return a.n == b.n && a.rows == b.rows; }
};

LinearCodeQ to_linear(const QCyclicCode& c);
LinearCodeQ nullspace(const LinearCodeQ& c);  // the Euclidean dual code

// The n - deg(gen) cyclic shifts of gen (empty for the zero code).
std::vector<F4Vec> cyclic_generator_rows(const PolyF4& gen, int n);

EnumJob enum_job(const QCyclicCode& c);
EnumJob enum_job(const LinearCodeQ& c);

struct EngineOptions {
    int partitions = 0;  // 0 = default (M2CODES_PARTITIONS env or hardware)
    Kernel kernel = Kernel::Auto;
};

int default_partitions();

// Exact minimum distance.  Direct exhaustive enumeration when 4^k fits the
// budget; otherwise, if the dual fits, the dual's exact weight distribution
// is enumerated and transformed back (still exact).  Refuses otherwise.
int min_distance(const QCyclicCode& c, Budget b = {}, EngineOptions opt = {});
int min_distance(const LinearCodeQ& c, Budget b = {}, EngineOptions opt = {});

// Exact weight enumerator, with the same direct/dual route policy.
WeightEnumerator weight_enumerator(const QCyclicCode& c, Budget b = {}, EngineOptions opt = {});
WeightEnumerator weight_enumerator(const LinearCodeQ& c, Budget b = {}, EngineOptions opt = {});

// {(u, u+v)} construction; lengths must match.
LinearCodeQ plotkin_sum(const LinearCodeQ& c1, const LinearCodeQ& c2);

// Length-2n cyclic code with generator g1^2 * g2, where g1*g2 | X^n - 1.
QCyclicCode repeated_root_double(const PolyF4& g1, const PolyF4& g2, int n);

}  // namespace m2c
