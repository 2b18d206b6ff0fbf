// Assembly of per-code reports and their JSON/CSV serialization.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lcdbch/bchcodes.hpp"
#include "lcdbch/dimensions.hpp"
#include "lcdbch/distance.hpp"

namespace lcdbch {

enum class DistanceMode { None, Auto, Witness, Search };

struct ReportOptions {
    bool with_generator = false;
    bool with_prediction = true;
    DistanceMode distance = DistanceMode::None;
    SearchBudget budget;
};

struct CodeReport {
    CodeSpec spec;
    uint64_t n = 0;
    uint64_t k = 0;
    uint64_t designed = 0;
    uint64_t bch = 0;
    bool lcd = false;
    std::optional<Poly> generator;
    std::optional<nlohmann::json> field;  // {p, e, modulus, alpha} when materialized
    DistanceResult distance;
    std::optional<DimPrediction> prediction;
};

// Builds the report; constructs GF(q^m) and the GF(q) embedding on demand when
// the generator or a search/witness verification needs them.
CodeReport build_report(const CodeSpec& spec, const ReportOptions& opt);

nlohmann::json report_to_json(const CodeReport& r);
nlohmann::json field_to_json(const FieldCtx& f);

std::string report_csv_header();
std::string report_csv_row(const CodeReport& r);

}  // namespace lcdbch
