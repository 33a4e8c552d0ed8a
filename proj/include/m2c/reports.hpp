#pragma once

#include <string>

#include <json.hpp>

#include "m2c/acode.hpp"
#include "m2c/bachoc.hpp"
#include "m2c/classify.hpp"
#include "m2c/factor.hpp"
#include "m2c/qcode.hpp"
#include "m2c/wenum.hpp"

namespace m2c {

// Machine-readable reports behind the CLI subcommands.  All numeric content
// is exact; big integers are serialized as decimal strings.  Reports carry no
// timing, partitioning or host information, so identical configurations
// produce byte-identical output.
using Json = nlohmann::ordered_json;

Json enumerator_json(const WeightEnumerator& we);
WeightEnumerator enumerator_from_json(const Json& j);

Json bachoc_enumerator_json(const BachocEnumerator& bwe);

Json factor_report(int n);

Json distance_report(int n, const PolyF4& gen, Budget b, EngineOptions opt);
Json wenum_report(int n, const PolyF4& gen, Budget b, EngineOptions opt);
Json macwilliams_report(const Json& input, bool check_fsd);

struct ClassifyConfig {
    int n = 0;
    bool up_to_reversal = true;
    bool distances = false;
    bool compare = false;
    Budget budget;
    EngineOptions engine;
};

Json classify_report(const ClassifyConfig& cfg);

Json audit_report_json(const AuditReport& rep);

enum class BachocMode { Image, Bwe, Doubled };
Json bachoc_report(const ACyclicCode& code, BachocMode mode, Budget b, EngineOptions opt);

std::string render_classify_table(const Json& report);
std::string render_classify_csv(const Json& report);

}  // namespace m2c
