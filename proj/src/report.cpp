#include "ontolink/report.hpp"

#include <algorithm>
#include <cstdio>

#include "ontolink/errors.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

DesertReport desert_report(const Dataset& ds) {
    DesertReport r;
    std::size_t used = 0, used_correct = 0, unused_correct = 0;
    for (const auto& row : ds.rows) {
        if (row.features.no_annotation) {
            ++r.unused_count;
            r.unused_terms.push_back(row.features.term_id);
            if (row.label) ++unused_correct;
        } else {
            ++used;
            if (row.label) ++used_correct;
        }
    }
    if (!ds.rows.empty()) {
        r.unused_fraction = static_cast<double>(r.unused_count) / ds.rows.size();
    }
    if (r.unused_count > 0) {
        r.correct_among_unused = static_cast<double>(unused_correct) / r.unused_count;
    }
    if (used > 0) {
        r.correct_among_used = static_cast<double>(used_correct) / used;
    }
    std::sort(r.unused_terms.begin(), r.unused_terms.end());
    return r;
}

namespace {

std::string bin_label(std::uint64_t lo, std::uint64_t hi) {
    if (lo == hi) return std::to_string(lo);
    return std::to_string(lo) + "-" + std::to_string(hi);
}

}  // namespace

std::vector<BinRow> annotation_bins(const Dataset& ds,
                                    const std::vector<std::uint64_t>& upper_edges) {
    std::uint64_t max_count = 0;
    for (const auto& row : ds.rows) {
        max_count = std::max(max_count, row.features.annotation_count);
    }

    std::vector<BinRow> bins;
    bins.push_back(BinRow{"0", 0, 0, 0, 0, 0.0});
    if (!upper_edges.empty()) {
        std::uint64_t lo = 1;
        for (std::uint64_t hi : upper_edges) {
            if (hi < lo) throw ConfigError("bin edges must be strictly increasing");
            bins.push_back(BinRow{bin_label(lo, hi), lo, hi, 0, 0, 0.0});
            lo = hi + 1;
        }
        if (max_count >= lo) {
            throw ConfigError("bin edges do not cover the maximum annotation count " +
                              std::to_string(max_count));
        }
    } else {
        std::uint64_t lo = 1;
        while (lo <= std::max<std::uint64_t>(max_count, 1)) {
            std::uint64_t hi = lo * 2 - 1;
            bins.push_back(BinRow{bin_label(lo, hi), lo, hi, 0, 0, 0.0});
            if (lo > max_count / 2) break;  // avoid overflow; loop exits next anyway
            lo *= 2;
        }
    }

    for (const auto& row : ds.rows) {
        std::uint64_t c = row.features.annotation_count;
        for (auto& bin : bins) {
            if (c >= bin.lo && c <= bin.hi) {
                ++bin.total;
                if (row.label) ++bin.correct;
                break;
            }
        }
    }
    for (auto& bin : bins) {
        bin.accuracy = bin.total ? static_cast<double>(bin.correct) / bin.total : 0.0;
    }
    return bins;
}

ReconciliationReport reconcile_annotations(const AnnotationTable& table,
                                           const OntologyGraph& g,
                                           std::size_t max_samples) {
    ReconciliationReport r;
    for (const auto& [id, count] : table.counts) {
        (void)count;
        if (g.terms().count(id)) continue;
        ++r.unknown_count;
        if (r.samples.size() < max_samples) r.samples.push_back(id);
    }
    return r;
}

void add_annotation_rows(ProfileReport& profile, const OntologyGraph& g,
                         const AnnotationTable& table) {
    std::size_t n = 0, unused = 0;
    std::uint64_t total_annotations = 0;
    for (const auto& [id, rec] : g.terms()) {
        if (rec.obsolete) continue;
        ++n;
        std::uint64_t c = table.count_for(id);
        total_annotations += c;
        if (c == 0) ++unused;
    }
    if (n > 0) {
        profile.unused_fraction = static_cast<double>(unused) / n;
        profile.mean_annotations_per_term = static_cast<double>(total_annotations) / n;
    }
}

namespace {

std::string opt_str(const std::optional<double>& v, int precision = 10) {
    return v ? format_double(*v, precision) : "";
}

}  // namespace

void write_profile_csv(const ProfileReport& p, const std::string& ontology,
                       const std::filesystem::path& path) {
    std::string out = "ontology,metric,value\n";
    auto row = [&](const char* metric, const std::string& value) {
        out += csv_field(ontology);
        out += ",";
        out += metric;
        out += "," + value + "\n";
    };
    row("concepts", std::to_string(p.concepts));
    row("leaf_fraction", format_double(p.leaf_fraction, 10));
    row("mean_depth", opt_str(p.mean_depth));
    row("unigram_fraction", format_double(p.unigram_fraction, 10));
    row("mean_label_length", opt_str(p.mean_label_length));
    row("leading_000_fraction", format_double(p.leading_000_fraction, 10));
    row("mean_identifier_entropy", opt_str(p.mean_identifier_entropy));
    row("unused_fraction", opt_str(p.unused_fraction));
    row("mean_annotations_per_term", opt_str(p.mean_annotations_per_term));
    write_file(path, out);
}

void write_profile_text(const ProfileReport& p, const std::string& ontology,
                        const std::filesystem::path& path) {
    auto pct = [](double f) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * f);
        return std::string(buf);
    };
    auto num = [](const std::optional<double>& v) {
        if (!v) return std::string("n/a");
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", *v);
        return std::string(buf);
    };
    std::string out;
    out += "Ontology profile: " + ontology + "\n";
    out += "  Concepts:                  " + std::to_string(p.concepts) + "\n";
    out += "  Terms that are a leaf:     " + pct(p.leaf_fraction) + "\n";
    out += "  Hierarchy depth (mean):    " + num(p.mean_depth) + "\n";
    out += "  Unigram terms:             " + pct(p.unigram_fraction) + "\n";
    out += "  Length of term (mean):     " + num(p.mean_label_length) + "\n";
    out += "  Leading 000 identifiers:   " + pct(p.leading_000_fraction) + "\n";
    out += "  Identifier entropy (mean): " + num(p.mean_identifier_entropy) + "\n";
    if (p.unused_fraction) {
        out += "  Unused identifiers:        " + pct(*p.unused_fraction) + "\n";
    }
    if (p.mean_annotations_per_term) {
        out += "  Annotations per term:      " + num(p.mean_annotations_per_term) + "\n";
    }
    write_file(path, out);
}

void write_desert_csv(const DesertReport& r, const std::string& ontology,
                      const std::string& model_name, const std::filesystem::path& path) {
    std::string out =
        "ontology,model_name,unused_count,unused_fraction,correct_among_unused,"
        "correct_among_used\n";
    out += csv_field(ontology) + "," + csv_field(model_name);
    out += "," + std::to_string(r.unused_count);
    out += "," + format_double(r.unused_fraction, 10);
    out += "," + format_double(r.correct_among_unused, 10);
    out += "," + format_double(r.correct_among_used, 10);
    out += "\n";
    write_file(path, out);
}

void write_desert_terms(const DesertReport& r, const std::filesystem::path& path) {
    std::string out;
    for (const auto& id : r.unused_terms) {
        out += id.str();
        out += "\n";
    }
    write_file(path, out);
}

void write_bins_csv(const std::vector<BinRow>& bins, const std::string& ontology,
                    const std::string& model_name, const std::filesystem::path& path) {
    std::string out = "ontology,model_name,bin,lo,hi,total,correct,accuracy\n";
    for (const auto& b : bins) {
        out += csv_field(ontology) + "," + csv_field(model_name);
        out += "," + b.label;
        out += "," + std::to_string(b.lo);
        out += "," + std::to_string(b.hi);
        out += "," + std::to_string(b.total);
        out += "," + std::to_string(b.correct);
        out += "," + format_double(b.accuracy, 10);
        out += "\n";
    }
    write_file(path, out);
}

}  // namespace ontolink
