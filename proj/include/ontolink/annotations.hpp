#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontolink/curie.hpp"

namespace ontolink {

enum class AnnotationSource { HPOA, SWISSPROT_GO };

// Per-identifier usage counts from a curated corpus. Identifiers never seen
// count as zero.
struct AnnotationTable {
    std::map<Curie, std::uint64_t> counts;
    std::uint64_t total_entries = 0;
    AnnotationSource source = AnnotationSource::HPOA;

    std::uint64_t count_for(const Curie& id) const {
        auto it = counts.find(id);
        return it == counts.end() ? 0 : it->second;
    }
};

inline std::uint64_t annotation_count(const AnnotationTable& t, const Curie& id) {
    return t.count_for(id);
}

// Rows/lines that could not be used, with a few samples for diagnostics.
struct SkipReport {
    std::size_t skipped = 0;
    std::vector<std::string> samples;  // "line N: reason", capped

    void add(std::size_t line_no, const std::string& reason);
};

struct ParsedAnnotations {
    AnnotationTable table;
    SkipReport skips;
};

// phenotype.hpoa: tab-separated; '#' lines are comments; the first
// non-comment line names the columns and must contain `hpo_id`.
// Malformed rows are skipped and tallied; total_entries counts all data rows.
ParsedAnnotations parse_hpoa(std::string_view text);

// uniprot_sprot.dat: counts `DR   GO; GO:ddddddd; A:...;` cross-reference
// lines. `aspect` (one of C/F/P) restricts to that GO hierarchy; nullopt
// counts every aspect. total_entries counts the matching lines.
ParsedAnnotations parse_swissprot_go(std::string_view text,
                                     std::optional<char> aspect = std::nullopt);

// curie,count rows in identifier order.
void write_annotation_counts_csv(const AnnotationTable& table,
                                 const std::filesystem::path& path);

}  // namespace ontolink
