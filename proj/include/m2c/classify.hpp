#pragma once

#include <optional>
#include <string>
#include <vector>

#include "m2c/acode.hpp"
#include "m2c/factor.hpp"
#include "m2c/qcode.hpp"

namespace m2c {

// One Euclidean self-dual class: h = h*, g = f*, with the reversal symmetry
// (f, g, h) <-> (g, f, h) optionally quotiented out.  The canonical class
// representative has the lexicographically smaller printed f among {f, g}
// (coefficients from the constant term, 0 < 1 < w < w^2).
struct SelfDualClass {
    int n = 0;
    PolyF4 f, g, h;
    int dim_R = 0, dim_T = 0;
    std::optional<int> d_R, d_T, min_val;
};

// All nontrivial triples (3^t - 1 of them, t = number of asymmetric coset
// pairs), or (3^t - 1)/2 canonical class representatives when up_to_reversal.
std::vector<SelfDualClass> enumerate_selfdual(int n, bool up_to_reversal);

// Fills d_R, d_T, min(2 d_T, d_R); rows whose enumeration exceeds the budget
// keep nullopt.  Cheap rows are computed first.
void compute_distances(std::vector<SelfDualClass>& classes, Budget b = {}, EngineOptions opt = {});

// Comparison against the bundled published tables.
struct CompareRowResult {
    std::string h_label, f_label;
    int class_index = -1;                  // matched class, -1 if absent
    std::string status;                    // "match" | "mismatch" | "absent-class"
    std::vector<std::string> notes;        // documented corrections, etc.
    std::vector<std::string> mismatches;   // unexplained cell disagreements
};

struct CompareReport {
    int n = 0;
    bool has_reference = false;
    bool generator_only = false;
    std::vector<CompareRowResult> rows;
    std::vector<int> unlisted_classes;  // enumerated classes with no published row
    std::vector<std::string> notes;
    bool any_unexplained_mismatch = false;

    std::string class_status(int index) const;  // "match|mismatch|absent|no-ref" for a class
};

CompareReport compare_with_paper(int n, const std::vector<SelfDualClass>& classes);

}  // namespace m2c
