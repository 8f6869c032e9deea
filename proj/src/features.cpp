#include "ontolink/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>

#include "ontolink/errors.hpp"
#include "ontolink/corpus.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

const std::array<const char*, kFeatureCount> kFeatureNames = {
    "pmc_terms",      "pmc_identifiers",    "no_annotation",
    "annotation_count", "characters",       "leading_000",
    "identifier_entropy", "leaf",           "depth",
};

double string_entropy_bits(std::string_view s) {
    if (s.empty()) return 0.0;
    std::array<std::size_t, 256> freq{};
    for (unsigned char c : s) ++freq[c];
    const double n = static_cast<double>(s.size());
    double h = 0.0;
    for (std::size_t f : freq) {
        if (f == 0) continue;
        double p = f / n;
        h -= p * std::log2(p);
    }
    return h < 0.0 ? 0.0 : h;
}

double identifier_entropy(const Curie& id) { return string_entropy_bits(id.str()); }

bool leading_000(const Curie& id) {
    return id.digits().compare(0, 3, "000") == 0;
}

FeatureVector build_feature_vector(const TermRecord& term, const OntologyGraph& g,
                                   const AnnotationTable& annotations,
                                   const CorpusLookupFn& corpus) {
    FeatureVector v;
    v.term_id = term.id;
    v.pmc_terms = corpus(term_query(term.name));
    v.pmc_identifiers = corpus(identifier_query(term.id));
    v.annotation_count = annotations.count_for(term.id);
    v.no_annotation = (v.annotation_count == 0);
    v.characters = utf8_length(term.name);
    v.leading_000 = leading_000(term.id);
    v.identifier_entropy = identifier_entropy(term.id);
    v.leaf = g.is_leaf(term.id);
    v.depth = g.depth(term.id);
    return v;
}

std::string ontology_kind_name(OntologyKind k) {
    return k == OntologyKind::HPO ? "HPO" : "GO-CC";
}

OntologyKind parse_ontology_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "hpo") return OntologyKind::HPO;
    if (lower == "go-cc" || lower == "go_cc" || lower == "gocc") return OntologyKind::GO_CC;
    throw ConfigError("unknown ontology kind '" + std::string(name) + "' (expected hpo or go-cc)");
}

Dataset build_dataset(const std::vector<FeatureVector>& vectors,
                      const std::map<Curie, bool>& probe_correct,
                      OntologyKind ontology, std::string model_name,
                      JoinReport* report, double max_mismatch_fraction) {
    Dataset ds;
    ds.ontology = ontology;
    ds.model_name = std::move(model_name);

    JoinReport local;
    JoinReport& jr = report ? *report : local;

    std::set<Curie> vector_ids;
    std::map<Curie, const FeatureVector*> by_id;
    for (const auto& v : vectors) {
        if (!by_id.emplace(v.term_id, &v).second) {
            throw Error("duplicate feature vector for term " + v.term_id.str());
        }
        vector_ids.insert(v.term_id);
    }

    for (const auto& [id, fv] : by_id) {
        auto it = probe_correct.find(id);
        if (it == probe_correct.end()) {
            jr.vectors_without_probe.push_back(id);
            continue;
        }
        ds.rows.push_back(DatasetRow{*fv, it->second});
        ++jr.matched;
    }
    for (const auto& [id, correct] : probe_correct) {
        (void)correct;
        if (!vector_ids.count(id)) jr.probes_without_vector.push_back(id);
    }

    std::size_t larger = std::max(vectors.size(), probe_correct.size());
    std::size_t orphans = jr.vectors_without_probe.size() + jr.probes_without_vector.size();
    if (larger > 0) {
        double frac = static_cast<double>(orphans) / static_cast<double>(larger);
        if (frac > max_mismatch_fraction) {
            throw Error("feature/probe join mismatch " + format_double(frac, 4) +
                        " exceeds threshold " + format_double(max_mismatch_fraction, 4) +
                        " (" + std::to_string(orphans) + " orphans)");
        }
    }
    return ds;
}

std::array<double, kFeatureCount> feature_values(const FeatureVector& v) {
    return {static_cast<double>(v.pmc_terms),
            static_cast<double>(v.pmc_identifiers),
            v.no_annotation ? 1.0 : 0.0,
            static_cast<double>(v.annotation_count),
            static_cast<double>(v.characters),
            v.leading_000 ? 1.0 : 0.0,
            v.identifier_entropy,
            v.leaf ? 1.0 : 0.0,
            static_cast<double>(v.depth)};
}

void write_features_csv(const Dataset& ds, const std::filesystem::path& path) {
    std::string out = "term_id";
    for (const char* name : kFeatureNames) {
        out += ",";
        out += name;
    }
    out += ",label\n";
    for (const auto& row : ds.rows) {
        const auto& v = row.features;
        out += v.term_id.str();
        out += "," + std::to_string(v.pmc_terms);
        out += "," + std::to_string(v.pmc_identifiers);
        out += v.no_annotation ? ",1" : ",0";
        out += "," + std::to_string(v.annotation_count);
        out += "," + std::to_string(v.characters);
        out += v.leading_000 ? ",1" : ",0";
        out += "," + format_double(v.identifier_entropy, 17);
        out += v.leaf ? ",1" : ",0";
        out += "," + std::to_string(v.depth);
        out += row.label ? ",1\n" : ",0\n";
    }
    write_file(path, out);
}

namespace {

std::uint64_t parse_u64(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        auto v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad unsigned value '" + s + "' in features CSV", line_no);
    }
}

bool parse_bool01(const std::string& s, std::size_t line_no) {
    if (s == "0") return false;
    if (s == "1") return true;
    throw ParseError("bad boolean value '" + s + "' in features CSV", line_no);
}

}  // namespace

Dataset read_features_csv(const std::filesystem::path& path, OntologyKind ontology,
                          std::string model_name) {
    std::string text = read_file(path);
    Dataset ds;
    ds.ontology = ontology;
    ds.model_name = std::move(model_name);

    LineReader reader(text);
    std::string_view line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (reader.next(line, line_no)) {
        if (trim(line).empty()) continue;
        if (!header_seen) {
            header_seen = true;  // fixed column order; header is not re-derived
            continue;
        }
        auto f = csv_split(line);
        if (f.size() != kFeatureCount + 2) {
            throw ParseError("expected " + std::to_string(kFeatureCount + 2) +
                                 " columns in features CSV, got " + std::to_string(f.size()),
                             line_no);
        }
        auto id = Curie::parse(f[0]);
        if (!id) throw ParseError("bad term_id '" + f[0] + "' in features CSV", line_no);
        FeatureVector v;
        v.term_id = *id;
        v.pmc_terms = parse_u64(f[1], line_no);
        v.pmc_identifiers = parse_u64(f[2], line_no);
        v.no_annotation = parse_bool01(f[3], line_no);
        v.annotation_count = parse_u64(f[4], line_no);
        v.characters = parse_u64(f[5], line_no);
        v.leading_000 = parse_bool01(f[6], line_no);
        try {
            v.identifier_entropy = std::stod(f[7]);
        } catch (const std::exception&) {
            throw ParseError("bad entropy value '" + f[7] + "' in features CSV", line_no);
        }
        v.leaf = parse_bool01(f[8], line_no);
        v.depth = parse_u64(f[9], line_no);
        bool label = parse_bool01(f[10], line_no);
        ds.rows.push_back(DatasetRow{std::move(v), label});
    }
    return ds;
}

}  // namespace ontolink
