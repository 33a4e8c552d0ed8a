// Command-line front end: factor / distance / wenum / macwilliams / classify
// / audit / bachoc.  Exit codes: 0 success, 2 precondition violation (even
// length, malformed polynomial, non-divisor generator), 3 enumeration budget
// refusal, 4 regression comparison found unexplained value mismatches.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "m2c/reports.hpp"

namespace {

using m2c::Json;

struct EngineFlags {
    int cap = 14;
    bool slow = false;
    int partitions = 0;
    std::string kernel = "auto";

    m2c::Budget budget() const { return {slow && cap == 14 ? 16 : cap}; }
    m2c::EngineOptions engine() const {
        m2c::EngineOptions opt;
        opt.partitions = partitions;
        if (kernel == "scalar")
            opt.kernel = m2c::Kernel::Scalar;
        else if (kernel == "avx2")
            opt.kernel = m2c::Kernel::Avx2;
        return opt;
    }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& fl) {
    cmd->add_option("--cap", fl.cap, "enumeration cap exponent: at most 4^E steps")->capture_default_str();
    cmd->add_flag("--slow", fl.slow, "raise the default cap to 4^16");
    cmd->add_option("--partitions", fl.partitions, "work partition count (default: M2CODES_PARTITIONS or hardware)");
    cmd->add_option("--kernel", fl.kernel, "enumeration kernel: auto|scalar|avx2")->capture_default_str();
}

// Derives g = (X^n - 1) / (f h), rejecting invalid triples.
m2c::ACyclicCode triple_from_args(int n, const std::string& f_text, const std::string& h_text) {
    m2c::PolyF4 f = m2c::parse_poly(f_text);
    m2c::PolyF4 h = m2c::parse_poly(h_text);
    m2c::PolyF4 fh = f * h;
    auto dm = m2c::poly_divmod(m2c::PolyF4::xn_minus_1(n), fh);
    if (!dm.rem.is_zero()) throw std::invalid_argument("f*h does not divide X^n-1");
    return m2c::ACyclicCode::build(f, dm.quot, h, n);
}

void emit(const Json& j, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for cyclic codes over the 2x2 binary matrix ring"};
    app.require_subcommand(1);

    // factor
    auto* factor_cmd = app.add_subcommand("factor", "factor X^n-1 over GF(4) via 4-cyclotomic cosets");
    int factor_n = 0;
    bool factor_json = false;
    factor_cmd->add_option("--n", factor_n, "odd length")->required();
    factor_cmd->add_flag("--json", factor_json, "machine-readable output");

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "exact minimum distance of a quaternary cyclic code");
    int dist_n = 0;
    std::string dist_gen;
    bool dist_json = false;
    EngineFlags dist_fl;
    dist_cmd->add_option("--n", dist_n, "length")->required();
    dist_cmd->add_option("--gen", dist_gen, "generator polynomial")->required();
    dist_cmd->add_flag("--json", dist_json, "machine-readable output");
    add_engine_flags(dist_cmd, dist_fl);

    // wenum
    auto* wenum_cmd = app.add_subcommand("wenum", "exact weight enumerator of a quaternary cyclic code");
    int wenum_n = 0;
    std::string wenum_gen;
    bool wenum_json = false;
    EngineFlags wenum_fl;
    wenum_cmd->add_option("--n", wenum_n, "length")->required();
    wenum_cmd->add_option("--gen", wenum_gen, "generator polynomial")->required();
    wenum_cmd->add_flag("--json", wenum_json, "machine-readable output");
    add_engine_flags(wenum_cmd, wenum_fl);

    // macwilliams
    auto* mw_cmd = app.add_subcommand("macwilliams", "exact MacWilliams transform of an enumerator JSON file");
    std::string mw_file;
    bool mw_fsd = false;
    mw_cmd->add_option("--json-file", mw_file, "enumerator JSON ('-' for stdin)")->required();
    mw_cmd->add_flag("--check-fsd", mw_fsd, "report whether the enumerator is a MacWilliams fixed point");

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "enumerate Euclidean self-dual cyclic codes over the matrix ring");
    int cls_n = 0;
    bool cls_all = false, cls_rev = false, cls_dist = false, cls_cmp = false;
    std::string cls_format = "table";
    EngineFlags cls_fl;
    cls_cmd->add_option("--n", cls_n, "odd length")->required();
    cls_cmd->add_flag("--all", cls_all, "list all nontrivial triples (both reversal partners)");
    cls_cmd->add_flag("--up-to-reversal", cls_rev, "one representative per reversal class (default)");
    cls_cmd->add_flag("--distances", cls_dist, "compute d_R, d_T and min(2 d_T, d_R)");
    cls_cmd->add_flag("--compare", cls_cmp, "compare against the bundled reference tables");
    cls_cmd->add_option("--format", cls_format, "table|csv|json")->capture_default_str();
    add_engine_flags(cls_cmd, cls_fl);

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "brute-force audit of the structural claims for one factor triple");
    int audit_n = 0;
    std::string audit_f, audit_h, audit_scope = "full";
    bool audit_json = false;
    EngineFlags audit_fl;
    audit_cmd->set_help_flag("--help", "print help");  // frees --h for the factor option
    audit_cmd->add_option("--n", audit_n, "odd length")->required();
    audit_cmd->add_option("--f", audit_f, "torsion generator f")->required();
    audit_cmd->add_option("--h", audit_h, "factor h (g is derived as (X^n-1)/(f h))")->required();
    audit_cmd->add_option("--scope", audit_scope, "full|fast")->capture_default_str();
    audit_cmd->add_flag("--json", audit_json, "machine-readable output");
    add_engine_flags(audit_cmd, audit_fl);

    // bachoc
    auto* bch_cmd = app.add_subcommand("bachoc", "Bachoc image, joint weight enumerator, or doubled cyclic code");
    int bch_n = 0;
    std::string bch_f, bch_h;
    bool bch_image = false, bch_bwe = false, bch_doubled = false, bch_json = false;
    EngineFlags bch_fl;
    bch_cmd->set_help_flag("--help", "print help");  // frees --h for the factor option
    bch_cmd->add_option("--n", bch_n, "odd length")->required();
    bch_cmd->add_option("--f", bch_f, "torsion generator f")->required();
    bch_cmd->add_option("--h", bch_h, "factor h (g is derived)")->required();
    bch_cmd->add_flag("--image", bch_image, "quaternary image code parameters (default)");
    bch_cmd->add_flag("--bwe", bch_bwe, "joint (n1, n2) weight enumerator");
    bch_cmd->add_flag("--doubled", bch_doubled, "length-2n cyclic code with generator f^2 h");
    bch_cmd->add_flag("--json", bch_json, "machine-readable output");
    add_engine_flags(bch_cmd, bch_fl);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*factor_cmd) {
            Json j = m2c::factor_report(factor_n);
            std::string text = "X^" + std::to_string(factor_n) + "-1 over GF(4):\n";
            for (const auto& it : j["factors"])
                text += "  coset " + std::to_string(it["representative"].get<int>()) + ": " +
                        it["factor"].get<std::string>() + " (reciprocal partner: coset " +
                        std::to_string(it["reciprocal_partner"].get<int>()) + ")\n";
            text += std::string("self-dual cyclic codes exist: ") + (j["selfdual_exists"].get<bool>() ? "yes" : "no") +
                    "\n";
            if (j.contains("note")) text += "note: " + j["note"].get<std::string>() + "\n";
            emit(j, factor_json, text);
        } else if (*dist_cmd) {
            Json j = m2c::distance_report(dist_n, m2c::parse_poly(dist_gen), dist_fl.budget(), dist_fl.engine());
            std::string text = "[" + std::to_string(dist_n) + "," + std::to_string(j["dimension"].get<int>()) + "] d = " +
                               (j["distance"].is_null() ? std::string("-") : std::to_string(j["distance"].get<int>())) +
                               "\n";
            emit(j, dist_json, text);
        } else if (*wenum_cmd) {
            Json j = m2c::wenum_report(wenum_n, m2c::parse_poly(wenum_gen), wenum_fl.budget(), wenum_fl.engine());
            emit(j, wenum_json, j["enumerator"].dump(2) + "\n");
        } else if (*mw_cmd) {
            Json input;
            if (mw_file == "-")
                std::cin >> input;
            else {
                std::ifstream in(mw_file);
                if (!in) throw std::invalid_argument("cannot open " + mw_file);
                in >> input;
            }
            if (input.contains("enumerator")) input = input["enumerator"];  // accept wenum output directly
            Json j = m2c::macwilliams_report(input, mw_fsd);
            std::cout << j.dump(2) << "\n";
        } else if (*cls_cmd) {
            m2c::ClassifyConfig cfg;
            cfg.n = cls_n;
            cfg.up_to_reversal = !cls_all || cls_rev;
            cfg.distances = cls_dist;
            cfg.compare = cls_cmp;
            cfg.budget = cls_fl.budget();
            cfg.engine = cls_fl.engine();
            Json j = m2c::classify_report(cfg);
            if (cls_format == "json")
                std::cout << j.dump(2) << "\n";
            else if (cls_format == "csv")
                std::cout << m2c::render_classify_csv(j);
            else
                std::cout << m2c::render_classify_table(j);
            if (cls_cmp && j["compare"]["unexplained_mismatches"].get<bool>()) return 4;
        } else if (*audit_cmd) {
            m2c::ACyclicCode code = triple_from_args(audit_n, audit_f, audit_h);
            m2c::AuditScope scope = audit_scope == "fast" ? m2c::AuditScope::Fast : m2c::AuditScope::Full;
            m2c::AuditReport rep = m2c::audit_claims(code, scope, audit_fl.budget());
            Json j = m2c::audit_report_json(rep);
            std::string text;
            for (const auto& c : j["claims"])
                text += c["verdict"].get<std::string>() + " " + c["id"].get<std::string>() + " [" +
                        c["model"].get<std::string>() + "] " + c["details"].get<std::string>() + "\n";
            emit(j, audit_json, text);
        } else if (*bch_cmd) {
            m2c::ACyclicCode code = triple_from_args(bch_n, bch_f, bch_h);
            m2c::BachocMode mode = m2c::BachocMode::Image;
            if (bch_bwe) mode = m2c::BachocMode::Bwe;
            if (bch_doubled) mode = m2c::BachocMode::Doubled;
            (void)bch_image;
            Json j = m2c::bachoc_report(code, mode, bch_fl.budget(), bch_fl.engine());
            emit(j, bch_json, j.dump(2) + "\n");
        }
    } catch (const m2c::BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
