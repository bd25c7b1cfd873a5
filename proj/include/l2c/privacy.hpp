#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "l2c/tabular.hpp"

namespace l2c {

// Equivalence classes of released records under exact quasi-identifier tuple
// equality; the predicted label can be folded into the key, treating the
// model's output as one more linkable attribute.
struct EquivalenceClassTable {
    std::vector<std::string> key_features;  // QI names, plus "predicted_label" when folded in
    std::vector<std::vector<int>> keys;     // one key tuple per class
    std::vector<std::vector<int>> members;  // record indices per class
    long record_count = 0;

    std::size_t class_count() const { return members.size(); }
};

// Records hold level indices per schema feature (released, discretized form).
// Throws when the schema declares no quasi-identifiers, or when labels are
// required but not aligned with the records.
EquivalenceClassTable build_classes(const std::vector<std::vector<int>>& records,
                                    const std::vector<int>& predicted_labels,
                                    const DatasetSchema& schema, bool include_label);

// 100 * (#singleton classes / #classes).
double one_anonymity(const EquivalenceClassTable& table);

// Same risk counted over records instead of classes: the share of records
// that sit alone in their class.
double one_anonymity_records(const EquivalenceClassTable& table);

// 100 * (#classes whose sensitive values are all identical / #classes).
// Singleton classes count by definition. Throws on unknown feature.
double l_diversity_violations(const EquivalenceClassTable& table,
                              const std::vector<std::vector<int>>& records,
                              const DatasetSchema& schema, const std::string& sensitive_feature);

struct OneMapResult {
    double pct = 0.0;        // released records matching exactly one attack record
    long matched_once = 0;
    long matched_any = 0;
    bool verifiable = false;  // false when nothing matched at all: unknown, not zero, risk
};

// Linkage against an attack dataset sharing the QI columns (discretized with
// the same discretizer beforehand). Throws when a QI column is absent.
OneMapResult one_map(const std::vector<std::vector<int>>& records, const Dataset& attack,
                     const DatasetSchema& schema);

struct KAnonymityResult {
    std::vector<int> kept;              // indices into the original records
    double validity_retention = 100.0;  // % of valid records surviving the filter
};

// Drops records whose class is smaller than k (k >= 2). valid flags must
// align with the records indexed by the table.
KAnonymityResult k_anonymize_filter(const EquivalenceClassTable& table,
                                    const std::vector<std::uint8_t>& valid, int k);

std::map<std::size_t, long> class_size_histogram(const EquivalenceClassTable& table);

// Full per-release report: anonymity, per-sensitive-attribute diversity
// violations, optional linkage result, and the class-size histogram.
nlohmann::json privacy_report(const std::vector<std::vector<int>>& records,
                              const std::vector<int>& predicted_labels,
                              const DatasetSchema& schema, bool include_label,
                              const Dataset* attack);

}  // namespace l2c
