#pragma once

#include <utility>
#include <vector>

#include "m2c/poly.hpp"

namespace m2c {

// Bundled reference tables for the classified self-dual classes (regression
// baselines).  Row labels are space-separated products of named factors; a
// trailing '*' takes the reciprocal; tokens that are not names parse as
// polynomial literals.
struct RefRow {
    const char* h_label;
    const char* f_label;
    int d_R, d_T, min_v;
};

struct RefTable {
    int n;
    std::vector<std::pair<const char*, const char*>> named;  // name -> polynomial text
    std::vector<RefRow> rows;
    const char* note = "";  // nonempty when the published data needed a documented correction
};

// Lengths for which only a generator polynomial is published.
struct RefGeneratorEntry {
    int n;
    const char* f_text;
    const char* note;  // nonempty when the entry is known to be inconsistent
};

// Documented corrections: cells where the published value disagrees with the
// exhaustively computed one.  field is "d_R", "d_T" or "min".
struct RefCorrection {
    int n;
    const char* h_label;
    const char* f_label;
    const char* field;
    int published;
    int computed;
    const char* note;
};

const std::vector<RefTable>& reference_tables();
const std::vector<RefGeneratorEntry>& reference_generator_entries();
const std::vector<RefCorrection>& reference_corrections();

const RefTable* reference_table_for(int n);
const RefGeneratorEntry* reference_generator_for(int n);

PolyF4 resolve_label(const RefTable& table, const char* label);

inline const char* reference_data_version() { return "1"; }

}  // namespace m2c
