#pragma once

#include <map>
#include <string>
#include <vector>

#include "qbranch/formulas.hpp"

namespace qbranch {

inline constexpr const char* kSchemaVersion = "qbranch/1";

// Echo of a query plus the computed value(s); the stable JSON shape is
// documented in docs/schema.json.
struct QueryResult {
    std::string command;  // mult | twistor | series | classical
    std::string pair;
    int n = 0;                // classical families only
    IVec lambda;
    Int m = -1;               // -1 when not applicable
    std::string variant;      // "beta" | "alpha2" | ""
    std::string provenance;   // formula | kernel | oracle | all
    Int value = 0;
    std::vector<std::pair<std::string, Int>> engine_values;  // engine=all
    bool engines_agree = true;
    std::vector<Condition> conditions;
    std::map<Int, Int> series;  // series command only
};

std::string format_plain(const QueryResult& r);
std::string format_json(const QueryResult& r);
std::string format_csv(const QueryResult& r);

struct TableRow {
    IVec lambda;
    Int d = 0;
    Int mult = 0;
};

std::string format_table(const std::vector<TableRow>& rows, const std::string& fmt,
                         const std::string& pair, const std::string& variant);

// Machine-readable dump of the whole catalog (exceptional records in full,
// classical families as parametric descriptors).
std::string catalog_export_json();

std::string report_json(const Report& rep, const std::string& suite);

}  // namespace qbranch
