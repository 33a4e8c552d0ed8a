#include "m2c/reports.hpp"

#include <sstream>

#include "m2c/paper_data.hpp"

namespace m2c {

Json enumerator_json(const WeightEnumerator& we) {
    Json j;
    j["length"] = we.length;
    j["cardinality"] = we.cardinality().str();
    Json counts = Json::object();
    for (const auto& [w, c] : we.counts) counts[std::to_string(w)] = c.str();
    j["counts"] = counts;
    return j;
}

WeightEnumerator enumerator_from_json(const Json& j) {
    WeightEnumerator we;
    we.length = j.at("length").get<int>();
    for (const auto& [k, v] : j.at("counts").items()) {
        int w = std::stoi(k);
        BigInt c(v.get<std::string>());
        if (c < 0) throw std::invalid_argument("enumerator: negative count");
        if (c != 0) we.counts[w] = c;
    }
    if (j.contains("cardinality") && BigInt(j.at("cardinality").get<std::string>()) != we.cardinality())
        throw std::invalid_argument("enumerator: cardinality does not match counts");
    return we;
}

Json bachoc_enumerator_json(const BachocEnumerator& bwe) {
    Json j;
    j["length"] = bwe.length;
    j["cardinality"] = bwe.cardinality().str();
    Json counts = Json::object();
    for (const auto& [k, c] : bwe.counts)
        counts[std::to_string(k.first) + "," + std::to_string(k.second)] = c.str();
    j["counts"] = counts;
    return j;
}

Json factor_report(int n) {
    Json j;
    j["schema"] = "m2codes/factor/v1";
    j["n"] = n;
    int ord = order_of_4(n);
    j["order_of_4"] = ord;
    SelfDualExistence ex = selfdual_exists(n);
    j["selfdual_exists"] = ex.exists;
    if (ex.power_j) j["minus_one_power"] = *ex.power_j;
    if (ex.asymmetric) j["asymmetric_coset"] = ex.asymmetric->representative;
    if (ex.exists && ord % 2 == 0)
        j["note"] =
            "order of 4 mod n is even, yet -1 is not a power of 4; the odd-order sufficient condition is one-way";

    FactorizationOfXnMinus1 fac = factorize_xn_minus_1(n);
    Json items = Json::array();
    for (size_t i = 0; i < fac.items.size(); ++i) {
        Json it;
        it["representative"] = fac.items[i].coset.representative;
        it["coset"] = fac.items[i].coset.members;
        it["factor"] = print_poly(fac.items[i].factor);
        it["reciprocal_partner"] = fac.items[static_cast<size_t>(fac.partner[i])].coset.representative;
        items.push_back(std::move(it));
    }
    j["factors"] = items;
    return j;
}

Json distance_report(int n, const PolyF4& gen, Budget b, EngineOptions opt) {
    QCyclicCode c = QCyclicCode::make(n, gen);
    Json j;
    j["schema"] = "m2codes/distance/v1";
    j["n"] = n;
    j["gen"] = print_poly(c.gen);
    j["dimension"] = c.dim;
    if (c.dim == 0) {
        j["distance"] = nullptr;
        j["note"] = "zero code";
        return j;
    }
    j["distance"] = min_distance(c, b, opt);
    return j;
}

Json wenum_report(int n, const PolyF4& gen, Budget b, EngineOptions opt) {
    QCyclicCode c = QCyclicCode::make(n, gen);
    Json j;
    j["schema"] = "m2codes/wenum/v1";
    j["n"] = n;
    j["gen"] = print_poly(c.gen);
    j["dimension"] = c.dim;
    j["enumerator"] = enumerator_json(weight_enumerator(c, b, opt));
    return j;
}

Json macwilliams_report(const Json& input, bool check_fsd) {
    WeightEnumerator we = enumerator_from_json(input);
    Json j;
    j["schema"] = "m2codes/macwilliams/v1";
    WeightEnumerator dual = macwilliams_transform(we, we.cardinality());
    j["input"] = enumerator_json(we);
    j["dual"] = enumerator_json(dual);
    if (check_fsd) j["formally_self_dual"] = (dual == we);
    return j;
}

Json classify_report(const ClassifyConfig& cfg) {
    Json j;
    j["schema"] = "m2codes/classify/v1";
    j["n"] = cfg.n;
    j["reference_data_version"] = reference_data_version();
    SelfDualExistence ex = selfdual_exists(cfg.n);
    j["selfdual_exists"] = ex.exists;

    auto classes = enumerate_selfdual(cfg.n, cfg.up_to_reversal);
    j["count"] = classes.size();
    j["up_to_reversal"] = cfg.up_to_reversal;
    if (!ex.exists) j["note"] = "no nontrivial self-dual cyclic codes at this length: -1 is a power of 4 mod n";

    if (cfg.distances) compute_distances(classes, cfg.budget, cfg.engine);

    CompareReport cmp;
    if (cfg.compare) cmp = compare_with_paper(cfg.n, classes);

    Json rows = Json::array();
    for (size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        Json r;
        r["n"] = c.n;
        r["h"] = print_poly(c.h);
        r["f"] = print_poly(c.f);
        r["g"] = print_poly(c.g);
        r["dim_R"] = c.dim_R;
        r["dim_T"] = c.dim_T;
        r["d_R"] = c.d_R ? Json(*c.d_R) : Json(nullptr);
        r["d_T"] = c.d_T ? Json(*c.d_T) : Json(nullptr);
        r["min"] = c.min_val ? Json(*c.min_val) : Json(nullptr);
        if (cfg.compare) r["paper"] = cmp.class_status(static_cast<int>(i));
        rows.push_back(std::move(r));
    }
    j["classes"] = rows;

    if (cfg.compare) {
        Json cj;
        cj["has_reference"] = cmp.has_reference;
        cj["generator_only"] = cmp.generator_only;
        Json crows = Json::array();
        for (const auto& r : cmp.rows) {
            Json cr;
            cr["h"] = r.h_label;
            cr["f"] = r.f_label;
            cr["class_index"] = r.class_index;
            cr["status"] = r.status;
            if (!r.notes.empty()) cr["notes"] = r.notes;
            if (!r.mismatches.empty()) cr["mismatches"] = r.mismatches;
            crows.push_back(std::move(cr));
        }
        cj["rows"] = crows;
        cj["unlisted_classes"] = cmp.unlisted_classes;
        if (!cmp.notes.empty()) cj["notes"] = cmp.notes;
        cj["unexplained_mismatches"] = cmp.any_unexplained_mismatch;
        j["compare"] = cj;
    }
    return j;
}

Json audit_report_json(const AuditReport& rep) {
    Json j;
    j["schema"] = "m2codes/audit/v1";
    j["n"] = rep.n;
    j["f"] = print_poly(rep.f);
    j["g"] = print_poly(rep.g);
    j["h"] = print_poly(rep.h);
    j["self_dual_triple"] = rep.self_dual_triple;
    j["trivial"] = rep.trivial;
    Json claims = Json::array();
    for (const auto& c : rep.claims) {
        Json cj;
        cj["id"] = c.id;
        cj["claim"] = c.claim;
        cj["model"] = c.model;
        cj["method"] = c.method;
        cj["verdict"] = c.verdict;
        cj["details"] = c.details;
        if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
        claims.push_back(std::move(cj));
    }
    j["claims"] = claims;
    return j;
}

Json bachoc_report(const ACyclicCode& code, BachocMode mode, Budget b, EngineOptions opt) {
    Json j;
    j["schema"] = "m2codes/bachoc/v1";
    j["n"] = code.n;
    j["f"] = print_poly(code.f);
    j["g"] = print_poly(code.g);
    j["h"] = print_poly(code.h);
    switch (mode) {
        case BachocMode::Image: {
            LinearCodeQ img = bachoc_image(code);
            j["mode"] = "image";
            j["length"] = img.n;
            j["dimension"] = img.dim();
            j["distance"] = min_distance(img, b, opt);
            Json rows = Json::array();
            for (const auto& r : img.rows) rows.push_back(print_poly(poly_from_vec(r)));
            j["generator_rows"] = rows;
            break;
        }
        case BachocMode::Bwe: {
            j["mode"] = "bwe";
            j["bwe"] = bachoc_enumerator_json(bachoc_weight_enumerator(code, b, opt));
            break;
        }
        case BachocMode::Doubled: {
            QCyclicCode dbl = doubled_cyclic_image(code);
            j["mode"] = "doubled";
            j["length"] = dbl.n;
            j["gen"] = print_poly(dbl.gen);
            j["dimension"] = dbl.dim;
            j["enumerator"] = enumerator_json(weight_enumerator(dbl, b, opt));
            break;
        }
    }
    return j;
}

namespace {

std::string cell(const Json& v) { return v.is_null() ? std::string("-") : std::to_string(v.get<int>()); }

}  // namespace

std::string render_classify_table(const Json& report) {
    std::ostringstream os;
    os << "n = " << report.at("n").get<int>() << ", classes = " << report.at("classes").size()
       << (report.at("up_to_reversal").get<bool>() ? " (up to reversal)" : " (all triples)") << "\n";
    if (report.contains("note")) os << report.at("note").get<std::string>() << "\n";
    if (report.at("classes").empty()) return os.str();

    os << "h | f | dim_R | dim_T | d_R | d_T | min";
    bool has_paper = report.at("classes").front().contains("paper");
    if (has_paper) os << " | ref";
    os << "\n";
    for (const auto& r : report.at("classes")) {
        os << r.at("h").get<std::string>() << " | " << r.at("f").get<std::string>() << " | "
           << r.at("dim_R").get<int>() << " | " << r.at("dim_T").get<int>() << " | " << cell(r.at("d_R")) << " | "
           << cell(r.at("d_T")) << " | " << cell(r.at("min"));
        if (has_paper) os << " | " << r.at("paper").get<std::string>();
        os << "\n";
    }
    if (report.contains("compare")) {
        const auto& cmp = report.at("compare");
        if (cmp.contains("notes"))
            for (const auto& n : cmp.at("notes")) os << "note: " << n.get<std::string>() << "\n";
        for (const auto& row : cmp.at("rows"))
            if (row.contains("mismatches"))
                for (const auto& m : row.at("mismatches"))
                    os << "VALUE-MISMATCH " << row.at("h").get<std::string>() << " / " << row.at("f").get<std::string>()
                       << ": " << m.get<std::string>() << "\n";
        os << "unlisted classes: " << cmp.at("unlisted_classes").size() << "\n";
    }
    return os.str();
}

std::string render_classify_csv(const Json& report) {
    std::ostringstream os;
    bool has_paper = !report.at("classes").empty() && report.at("classes").front().contains("paper");
    os << "n,h,f,g,dim_R,dim_T,d_R,d_T,min" << (has_paper ? ",ref" : "") << "\n";
    for (const auto& r : report.at("classes")) {
        os << r.at("n").get<int>() << ",\"" << r.at("h").get<std::string>() << "\",\"" << r.at("f").get<std::string>()
           << "\",\"" << r.at("g").get<std::string>() << "\"," << r.at("dim_R").get<int>() << ","
           << r.at("dim_T").get<int>() << "," << cell(r.at("d_R")) << "," << cell(r.at("d_T")) << ","
           << cell(r.at("min"));
        if (has_paper) os << "," << r.at("paper").get<std::string>();
        os << "\n";
    }
    return os.str();
}

}  // namespace m2c
