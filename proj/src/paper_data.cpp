#include "m2c/paper_data.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace m2c {

const std::vector<RefTable>& reference_tables() {
    static const std::vector<RefTable> tables = {
        {3, {}, {{"x+1", "x+w", 3, 2, 3}}},
        {7, {}, {{"x+1", "x^3+x+1", 4, 3, 4}}},
        {11, {}, {{"x+1", "x^5+w*x^4+x^3+x^2+w^2*x+1", 6, 5, 6}}},
        {15,
         {{"f1", "x^2+x+w"}, {"f2", "x^2+x+w^2"}, {"f3", "x+w"}},
         {
             {"x^5+1", "f1 f2 f3", 8, 3, 6},
             {"x^5+1", "f1 f2 f3*", 8, 3, 6},
             {"x^5+1", "f1 f2* f3", 6, 3, 6},
             {"x^5+1", "f1 f2* f3*", 3, 2, 3},
             {"x^5+1 f1 f1*", "f2 f3", 9, 2, 4},
             {"x^5+1 f1 f1*", "f2 f3*", 11, 3, 6},
             {"x^5+1 f2 f2*", "f1 f3", 11, 3, 6},
             {"x^5+1 f2 f2*", "f1 f3*", 9, 2, 4},
             {"x^5+1 f3 f3*", "f1 f2", 8, 3, 6},
             {"x^5+1 f3 f3*", "f1 f2*", 6, 2, 4},
             {"x^5+1 f1 f1* f2 f2*", "f3", 15, 2, 4},
             {"x^5+1 f1 f1* f3 f3*", "f2", 12, 2, 4},
             {"x^5+1 f2 f2* f3 f3*", "f1", 12, 2, 4},
         }},
        {21,
         {{"f0", "x^3+x+1"}, {"f1", "x^3+w*x+1"}, {"f2", "x^3+w^2*x+1"}},
         {
             {"x^3+1", "f0 f1 f2", 4, 3, 4},
             {"x^3+1", "f0 f1 f2*", 6, 3, 6},
             {"x^3+1", "f0 f1* f2", 6, 3, 6},
             {"x^3+1", "f0 f1* f2*", 8, 5, 8},
             {"x^3+1 f0 f0*", "f1 f2", 8, 3, 6},
             {"x^3+1 f0 f0*", "f1 f2*", 6, 2, 4},
             {"x^3+1 f1 f1*", "f0 f2", 8, 3, 6},
             {"x^3+1 f1 f1*", "f0 f2*", 12, 3, 6},
             {"x^3+1 f2 f2*", "f0 f1", 8, 3, 6},
             {"x^3+1 f2 f2*", "f0 f1*", 12, 3, 6},
             {"x^3+1 f0 f0* f1 f1*", "f2", 12, 2, 4},
             {"x^3+1 f0 f0* f2 f2*", "f1", 12, 2, 4},
             {"x^3+1 f1 f1* f2 f2*", "f0", 12, 2, 4},
             {"x+1", "x+w f0 f1 f2", 4, 4, 4},
             {"x+1", "x+w f0 f1 f2*", 6, 6, 6},
             {"x+1", "x+w f0 f1* f2", 3, 3, 3},
             {"x+1", "x+w f0 f1* f2*", 8, 5, 8},
             {"x+1", "x+w f0* f1 f2", 8, 5, 8},
             {"x+1", "x+w f0* f1 f2*", 6, 6, 6},
             {"x+1", "x+w f0* f1* f2", 3, 3, 3},
             {"x+1", "x+w f0* f1* f2*", 4, 4, 4},
         }},
        {27,
         {{"f1", "x+w"}, {"f2", "x^3+w"}, {"f3", "x^9+w"}},
         {
             {"x+1", "f1 f2 f3", 3, 3, 3},
             {"x+1", "f1 f2 f3*", 3, 3, 3},
             {"x+1", "f1 f2* f3", 3, 3, 3},
             {"x+1", "f1 f2* f3*", 3, 3, 3},
             {"x+1 f1 f1*", "f2 f3", 3, 3, 3},
             {"x+1 f1 f1*", "f2 f3*", 3, 3, 3},
             {"x+1 f2 f2*", "f1 f3", 3, 3, 3},
             {"x+1 f2 f2*", "f1 f3*", 3, 3, 3},
             {"x+1 f3 f3*", "f1 f2", 9, 2, 4},
             {"x+1 f3 f3*", "f1 f2*", 9, 2, 4},
             {"x+1 f1 f1* f2 f2*", "f3", 3, 2, 3},
             {"x+1 f1 f1* f3 f3*", "f2", 9, 2, 4},
             {"x+1 f2 f2* f3 f3*", "f1", 27, 2, 4},
         }},
        {31,
         {{"f1", "x^5+x^2+1"}, {"f2", "x^5+x^3+x^2+x+1"}, {"f3", "x^5+x^4+x^2+x+1"}},
         {
             {"x+1", "f1 f2 f3", 6, 6, 6},
             {"x+1", "f1 f2 f3*", 6, 6, 6},
             {"x+1", "f1 f2* f3", 6, 6, 6},
             {"x+1", "f1 f2* f3*", 6, 6, 6},
             {"x+1 f1 f1*", "f2 f3", 8, 4, 8},
             {"x+1 f1 f1*", "f2 f3*", 8, 4, 8},
             {"x+1 f2 f2*", "f1 f3", 6, 4, 6},
             {"x+1 f2 f2*", "f1 f3*", 6, 4, 6},
             {"x+1 f3 f3*", "f1 f2", 6, 5, 6},
             {"x+1 f3 f3*", "f1 f2*", 6, 5, 6},
             {"x+1 f1 f1* f2 f2*", "f3", 10, 2, 4},
             {"x+1 f1 f1* f3 f3*", "f2", 8, 3, 6},
             {"x+1 f2 f2* f3 f3*", "f1", 6, 3, 6},
         },
         "f3 is misprinted as x^5+x^2+x+1 in the published table; that polynomial is divisible by x+1, so it is "
         "not an irreducible factor of X^31-1.  The intended factor is x^5+x^4+x^2+x+1 (the remaining reciprocal "
         "pair of quintics); the swap f3 <-> f3* does not change any published row value."},
    };
    return tables;
}

const std::vector<RefGeneratorEntry>& reference_generator_entries() {
    static const std::vector<RefGeneratorEntry> entries = {
        {19, "x^9+w*x^8+w*x^6+w*x^5+w^2*x^4+w^2*x^3+w^2*x+1", ""},
        {23, "x^11+x^9+x^7+x^6+x^5+x+1", ""},
        {29, "x^14+w*x^13+w*x^11+w^2*x^10+x^9+w^2*x^8+w*x^7+w^2*x^6+x^5+w^2*x^4+w*x^3+w*x+1",
         "inconsistent entry: 4^7 = -1 (mod 29), so no nontrivial self-dual cyclic code of length 29 exists (the "
         "published generator is a palindrome, forcing f = f* and hence f = g)"},
    };
    return entries;
}

const std::vector<RefCorrection>& reference_corrections() {
    // Filled only where exhaustive recomputation contradicts a published cell.
    static const std::vector<RefCorrection> corrections = {};
    return corrections;
}

const RefTable* reference_table_for(int n) {
    for (const auto& t : reference_tables())
        if (t.n == n) return &t;
    return nullptr;
}

const RefGeneratorEntry* reference_generator_for(int n) {
    for (const auto& e : reference_generator_entries())
        if (e.n == n) return &e;
    return nullptr;
}

PolyF4 resolve_label(const RefTable& table, const char* label) {
    std::map<std::string, PolyF4> named;
    for (const auto& [name, text] : table.named) named.emplace(name, parse_poly(text));

    PolyF4 acc = PolyF4::one();
    std::istringstream ss{std::string(label)};
    std::string tok;
    while (ss >> tok) {
        bool rec = !tok.empty() && tok.back() == '*';
        if (rec) tok.pop_back();
        PolyF4 p;
        auto it = named.find(tok);
        if (it != named.end())
            p = it->second;
        else
            p = parse_poly(tok);
        if (rec) p = reciprocal(p);
        acc = acc * p;
    }
    return acc;
}

}  // namespace m2c
