#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ontolink/annotations.hpp"
#include "ontolink/features.hpp"
#include "ontolink/obo.hpp"

namespace ontolink {

// Accuracy partitioned by annotation status; "unused" means zero annotations.
struct DesertReport {
    std::size_t unused_count = 0;
    double unused_fraction = 0.0;
    double correct_among_unused = 0.0;  // 0 when there are no unused terms
    double correct_among_used = 0.0;    // 0 when there are no used terms
    std::vector<Curie> unused_terms;
};

DesertReport desert_report(const Dataset& ds);

// One histogram bucket of annotation counts: [lo, hi] inclusive.
struct BinRow {
    std::string label;       // "0", "1", "2-3", ...
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::size_t total = 0;
    std::size_t correct = 0;
    double accuracy = 0.0;  // 0 for empty bins
};

// Default edges: a dedicated zero bin, then power-of-two buckets
// [1],[2-3],[4-7],... wide enough for the data. Custom `upper_edges` (strictly
// increasing inclusive upper bounds after the zero bin) override them.
std::vector<BinRow> annotation_bins(const Dataset& ds,
                                    const std::vector<std::uint64_t>& upper_edges = {});

// Annotation identifiers that are not ontology terms (kept in the table,
// ignored by feature building).
struct ReconciliationReport {
    std::size_t unknown_count = 0;
    std::vector<Curie> samples;  // capped
};

ReconciliationReport reconcile_annotations(const AnnotationTable& table,
                                           const OntologyGraph& g,
                                           std::size_t max_samples = 50);

// Fills the annotation-dependent profile rows (unused %, annotations/term).
void add_annotation_rows(ProfileReport& profile, const OntologyGraph& g,
                         const AnnotationTable& table);

void write_profile_csv(const ProfileReport& p, const std::string& ontology,
                       const std::filesystem::path& path);
void write_profile_text(const ProfileReport& p, const std::string& ontology,
                        const std::filesystem::path& path);
void write_desert_csv(const DesertReport& r, const std::string& ontology,
                      const std::string& model_name, const std::filesystem::path& path);
void write_desert_terms(const DesertReport& r, const std::filesystem::path& path);
void write_bins_csv(const std::vector<BinRow>& bins, const std::string& ontology,
                    const std::string& model_name, const std::filesystem::path& path);

}  // namespace ontolink
