#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontolink/annotations.hpp"
#include "ontolink/curie.hpp"
#include "ontolink/obo.hpp"

namespace ontolink {

// Shannon entropy in bits over the character frequencies of `s`;
// 0 for empty strings and single-symbol alphabets.
double string_entropy_bits(std::string_view s);

// Entropy of the full canonical identifier text PREFIX:ddddddd.
double identifier_entropy(const Curie& id);

// True iff the first three of the seven digits are 000.
bool leading_000(const Curie& id);

// The nine model predictors for one term, plus the term id for joins.
struct FeatureVector {
    Curie term_id;
    std::uint64_t pmc_terms = 0;
    std::uint64_t pmc_identifiers = 0;
    bool no_annotation = false;  // always annotation_count == 0
    std::uint64_t annotation_count = 0;
    std::uint64_t characters = 0;  // Unicode scalars in the label
    bool leading_000 = false;
    double identifier_entropy = 0.0;
    bool leaf = false;
    std::uint64_t depth = 0;

    bool operator==(const FeatureVector&) const = default;
};

// Resolves a corpus query string to a hit count. Throws MissingFeatureError
// (naming the query) when the value cannot be produced.
using CorpusLookupFn = std::function<std::uint64_t(const std::string& query)>;

FeatureVector build_feature_vector(const TermRecord& term, const OntologyGraph& g,
                                   const AnnotationTable& annotations,
                                   const CorpusLookupFn& corpus);

enum class OntologyKind { HPO, GO_CC };

std::string ontology_kind_name(OntologyKind k);
OntologyKind parse_ontology_kind(std::string_view name);  // ConfigError on junk

struct DatasetRow {
    FeatureVector features;
    bool label = false;  // probe scored correct
};

struct Dataset {
    std::vector<DatasetRow> rows;  // unique term_ids, sorted
    OntologyKind ontology = OntologyKind::HPO;
    std::string model_name;
};

struct JoinReport {
    std::vector<Curie> vectors_without_probe;
    std::vector<Curie> probes_without_vector;
    std::size_t matched = 0;
};

// Inner join of feature vectors with probe correctness flags on term_id.
// Orphans on either side land in `report`; when the orphan fraction
// (relative to the larger input) exceeds max_mismatch_fraction the join
// aborts with Error.
Dataset build_dataset(const std::vector<FeatureVector>& vectors,
                      const std::map<Curie, bool>& probe_correct,
                      OntologyKind ontology, std::string model_name,
                      JoinReport* report = nullptr,
                      double max_mismatch_fraction = 0.1);

// Fixed feature-matrix column order shared by the CSV files and the model.
inline constexpr std::size_t kFeatureCount = 9;
extern const std::array<const char*, kFeatureCount> kFeatureNames;

// Numeric row in kFeatureNames order (booleans as 0/1).
std::array<double, kFeatureCount> feature_values(const FeatureVector& v);

// features.csv: term_id,<nine features>,label — one row per dataset row.
void write_features_csv(const Dataset& ds, const std::filesystem::path& path);
Dataset read_features_csv(const std::filesystem::path& path, OntologyKind ontology,
                          std::string model_name);

}  // namespace ontolink
