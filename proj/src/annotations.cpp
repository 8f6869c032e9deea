#include "ontolink/annotations.hpp"

#include <algorithm>

#include "ontolink/errors.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

namespace {
constexpr std::size_t kMaxSkipSamples = 20;
}

void SkipReport::add(std::size_t line_no, const std::string& reason) {
    ++skipped;
    if (samples.size() < kMaxSkipSamples) {
        samples.push_back("line " + std::to_string(line_no) + ": " + reason);
    }
}

ParsedAnnotations parse_hpoa(std::string_view text) {
    ParsedAnnotations out;
    out.table.source = AnnotationSource::HPOA;

    LineReader reader(text);
    std::string_view line;
    std::size_t line_no = 0;
    std::optional<std::size_t> hpo_col;

    while (reader.next(line, line_no)) {
        if (line.empty()) continue;
        if (line.front() == '#') continue;
        auto fields = split(line, '\t');
        if (!hpo_col) {
            // header row
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (trim(fields[i]) == "hpo_id") {
                    hpo_col = i;
                    break;
                }
            }
            if (!hpo_col) {
                throw ParseError("HPOA header has no hpo_id column", line_no);
            }
            continue;
        }
        ++out.table.total_entries;
        if (fields.size() <= *hpo_col) {
            out.skips.add(line_no, "row has no hpo_id field");
            continue;
        }
        auto id = Curie::parse(trim(fields[*hpo_col]));
        if (!id) {
            out.skips.add(line_no, "malformed CURIE '" + std::string(trim(fields[*hpo_col])) + "'");
            continue;
        }
        ++out.table.counts[*id];
    }
    // a file with no non-comment lines at all is an empty table
    return out;
}

ParsedAnnotations parse_swissprot_go(std::string_view text, std::optional<char> aspect) {
    if (aspect && *aspect != 'C' && *aspect != 'F' && *aspect != 'P') {
        throw ConfigError(std::string("invalid GO aspect filter '") + *aspect +
                          "' (expected C, F, or P)");
    }
    ParsedAnnotations out;
    out.table.source = AnnotationSource::SWISSPROT_GO;

    LineReader reader(text);
    std::string_view line;
    std::size_t line_no = 0;
    while (reader.next(line, line_no)) {
        if (line.rfind("DR   GO;", 0) != 0) continue;
        // DR   GO; GO:0005737; C:cytoplasm; IEA:UniProtKB-KW.
        auto fields = split(line.substr(2), ';');  // drop "DR"
        if (fields.size() < 3) {
            out.skips.add(line_no, "too few fields in DR GO line");
            continue;
        }
        auto id = Curie::parse(trim(fields[1]));
        if (!id) {
            out.skips.add(line_no, "malformed CURIE '" + std::string(trim(fields[1])) + "'");
            continue;
        }
        std::string_view aspect_field = trim(fields[2]);
        if (aspect_field.empty() ||
            (aspect_field[0] != 'C' && aspect_field[0] != 'F' && aspect_field[0] != 'P')) {
            out.skips.add(line_no, "unknown aspect code in DR GO line");
            continue;
        }
        if (aspect && aspect_field[0] != *aspect) continue;  // filtered, not skipped
        ++out.table.total_entries;
        ++out.table.counts[*id];
    }
    return out;
}

void write_annotation_counts_csv(const AnnotationTable& table,
                                 const std::filesystem::path& path) {
    std::string out = "curie,count\n";
    for (const auto& [id, count] : table.counts) {
        out += id.str();
        out += "," + std::to_string(count) + "\n";
    }
    write_file(path, out);
}

}  // namespace ontolink
