#include "m2c/classify.hpp"

#include <algorithm>
#include <numeric>

#include "m2c/paper_data.hpp"

namespace m2c {

std::vector<SelfDualClass> enumerate_selfdual(int n, bool up_to_reversal) {
    FactorizationOfXnMinus1 fac = factorize_xn_minus_1(n);

    PolyF4 h_base = PolyF4::one();
    std::vector<std::pair<int, int>> pairs;  // asymmetric (i, partner) with i < partner
    for (size_t i = 0; i < fac.items.size(); ++i) {
        int j = fac.partner[i];
        if (j == static_cast<int>(i))
            h_base = h_base * fac.items[i].factor;
        else if (static_cast<int>(i) < j)
            pairs.emplace_back(static_cast<int>(i), j);
    }

    const int t = static_cast<int>(pairs.size());
    std::vector<SelfDualClass> out;
    uint64_t total = 1;
    for (int i = 0; i < t; ++i) total *= 3;

    for (uint64_t a = 1; a < total; ++a) {  // 0 = all pairs into h = trivial triple
        PolyF4 f = PolyF4::one(), g = PolyF4::one(), h = h_base;
        uint64_t rest = a;
        for (int i = 0; i < t; ++i) {
            int choice = static_cast<int>(rest % 3);
            rest /= 3;
            const PolyF4& p = fac.items[static_cast<size_t>(pairs[static_cast<size_t>(i)].first)].factor;
            const PolyF4& q = fac.items[static_cast<size_t>(pairs[static_cast<size_t>(i)].second)].factor;
            switch (choice) {
                case 0: h = h * p * q; break;
                case 1: f = f * p; g = g * q; break;
                default: f = f * q; g = g * p; break;
            }
        }
        if (up_to_reversal && !PolyF4::lex_less(f, g)) continue;
        ACyclicCode code = ACyclicCode::build(f, g, h, n);
        if (!is_self_dual_triple(code)) throw std::logic_error("enumerate_selfdual: constructed triple not self-dual");
        SelfDualClass cls;
        cls.n = n;
        cls.f = f;
        cls.g = g;
        cls.h = h;
        cls.dim_R = g.deg();
        cls.dim_T = g.deg() + h.deg();
        out.push_back(std::move(cls));
    }

    std::sort(out.begin(), out.end(), [](const SelfDualClass& x, const SelfDualClass& y) {
        if (x.h.deg() != y.h.deg()) return x.h.deg() < y.h.deg();
        if (x.h != y.h) return PolyF4::lex_less(x.h, y.h);
        return PolyF4::lex_less(x.f, y.f);
    });
    return out;
}

void compute_distances(std::vector<SelfDualClass>& classes, Budget b, EngineOptions opt) {
    // cheapest enumerations first
    std::vector<size_t> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    auto cost = [&](const SelfDualClass& c) {
        int kR = std::min(c.dim_R, c.n - c.dim_R);
        int kT = std::min(c.dim_T, c.n - c.dim_T);
        return std::max(kR, kT);
    };
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return cost(classes[i]) < cost(classes[j]); });

    for (size_t idx : order) {
        SelfDualClass& cls = classes[idx];
        try {
            QCyclicCode R = QCyclicCode::make(cls.n, cls.f * cls.h);
            QCyclicCode T = QCyclicCode::make(cls.n, cls.f);
            cls.d_R = min_distance(R, b, opt);
            cls.d_T = min_distance(T, b, opt);
            cls.min_val = std::min(2 * *cls.d_T, *cls.d_R);
        } catch (const BudgetExceeded&) {
            cls.d_R.reset();
            cls.d_T.reset();
            cls.min_val.reset();
        }
    }
}

std::string CompareReport::class_status(int index) const {
    if (!has_reference) return "no-ref";
    for (const auto& r : rows)
        if (r.class_index == index) return r.status == "match" ? "match" : "mismatch";
    return "absent";
}

CompareReport compare_with_paper(int n, const std::vector<SelfDualClass>& classes) {
    CompareReport rep;
    rep.n = n;

    const RefTable* table = reference_table_for(n);
    const RefGeneratorEntry* gen_entry = reference_generator_for(n);
    if (!table && !gen_entry) {
        rep.has_reference = false;
        rep.notes.push_back("no reference table for this length");
        rep.unlisted_classes.resize(classes.size());
        std::iota(rep.unlisted_classes.begin(), rep.unlisted_classes.end(), 0);
        return rep;
    }
    rep.has_reference = true;

    std::vector<bool> listed(classes.size(), false);

    if (gen_entry) {
        rep.generator_only = true;
        PolyF4 f = parse_poly(gen_entry->f_text);
        CompareRowResult row;
        row.h_label = "x+1";
        row.f_label = gen_entry->f_text;
        row.status = "absent-class";
        if (gen_entry->note[0]) {
            row.notes.push_back(gen_entry->note);
            rep.notes.push_back(gen_entry->note);
        }
        for (size_t i = 0; i < classes.size(); ++i)
            if (classes[i].f == f || classes[i].g == f) {
                row.class_index = static_cast<int>(i);
                row.status = "match";
                listed[i] = true;
                break;
            }
        if (row.status == "absent-class" && !gen_entry->note[0]) {
            rep.any_unexplained_mismatch = true;
            row.mismatches.push_back("published generator not found among enumerated classes");
        }
        rep.rows.push_back(std::move(row));
    }

    if (table) {
        for (const auto& ref : table->rows) {
            CompareRowResult row;
            row.h_label = ref.h_label;
            row.f_label = ref.f_label;
            PolyF4 h = resolve_label(*table, ref.h_label);
            PolyF4 f = resolve_label(*table, ref.f_label);

            int found = -1;
            for (size_t i = 0; i < classes.size(); ++i)
                if (classes[i].h == h && (classes[i].f == f || classes[i].g == f)) {
                    found = static_cast<int>(i);
                    break;
                }
            row.class_index = found;
            if (found < 0) {
                row.status = "absent-class";
                row.mismatches.push_back("published row has no matching enumerated class");
                rep.any_unexplained_mismatch = true;
                rep.rows.push_back(std::move(row));
                continue;
            }
            listed[static_cast<size_t>(found)] = true;

            const SelfDualClass& cls = classes[static_cast<size_t>(found)];
            row.status = "match";
            struct Cell {
                const char* field;
                int published;
                std::optional<int> computed;
            };
            Cell cells[3] = {{"d_R", ref.d_R, cls.d_R}, {"d_T", ref.d_T, cls.d_T}, {"min", ref.min_v, cls.min_val}};
            for (const auto& cell : cells) {
                if (!cell.computed) continue;  // distances not requested/available: structural match only
                if (*cell.computed == cell.published) continue;
                const RefCorrection* corr = nullptr;
                for (const auto& c : reference_corrections())
                    if (c.n == n && row.h_label == c.h_label && row.f_label == c.f_label &&
                        std::string(cell.field) == c.field && c.published == cell.published &&
                        c.computed == *cell.computed)
                        corr = &c;
                if (corr) {
                    row.notes.push_back(std::string(cell.field) + ": published " + std::to_string(cell.published) +
                                        ", computed " + std::to_string(*cell.computed) + " (documented correction: " +
                                        corr->note + ")");
                } else {
                    row.status = "mismatch";
                    row.mismatches.push_back(std::string(cell.field) + ": published " + std::to_string(cell.published) +
                                             ", computed " + std::to_string(*cell.computed));
                    rep.any_unexplained_mismatch = true;
                }
            }
            rep.rows.push_back(std::move(row));
        }
    }

    for (size_t i = 0; i < classes.size(); ++i)
        if (!listed[i]) rep.unlisted_classes.push_back(static_cast<int>(i));
    return rep;
}

}  // namespace m2c
