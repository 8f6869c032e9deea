#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ontolink/curie.hpp"
#include "ontolink/features.hpp"
#include "ontolink/probe.hpp"

namespace ontolink {

// Everything a pipeline run needs; file values first, flags override.
struct RunConfig {
    OntologyKind ontology = OntologyKind::HPO;
    std::filesystem::path ontology_path;
    std::filesystem::path annotation_path;
    std::optional<char> annotation_aspect;  // defaults to C for GO-CC inputs
    std::optional<Curie> root_override;
    std::filesystem::path corpus_cache_path;
    std::filesystem::path probe_cache_path;
    ProviderConfig provider;
    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 0;
    bool offline = false;

    double join_threshold = 0.1;            // dataset join mismatch tolerance
    std::vector<std::uint64_t> bin_edges;   // custom histogram upper edges
    std::size_t zipf_sample = 2000;
    double zipf_jitter = 0.05;
    std::string corpus_endpoint =
        "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/esearch.fcgi";
    int corpus_throttle_ms = 1000;
    int corpus_backoff_ms = 1000;

    // Effective aspect filter for annotation parsing.
    std::optional<char> effective_aspect() const {
        if (annotation_aspect) return annotation_aspect;
        if (ontology == OntologyKind::GO_CC) return 'C';
        return std::nullopt;
    }
};

// `key = value` lines; '#' starts a comment. Unknown keys are rejected.
RunConfig load_config(const std::filesystem::path& path);
void apply_config_line(RunConfig& cfg, std::string_view key, std::string_view value);

}  // namespace ontolink
