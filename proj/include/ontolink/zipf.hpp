#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ontolink/annotations.hpp"
#include "ontolink/curie.hpp"

namespace ontolink {

enum class ZipfCategory { NO_ANNOTATION, CORRECT, INCORRECT };

const char* zipf_category_name(ZipfCategory c);   // no_annotation/correct/incorrect
const char* zipf_category_color(ZipfCategory c);  // red/green/blue

struct ZipfPoint {
    Curie term_id;
    std::size_t rank = 0;       // 1 = most annotated
    std::uint64_t count = 0;
    double x = 0.0;             // log10(rank)
    double y = 0.0;             // log10(count + 0.1); exactly -1 when count = 0
    ZipfCategory category = ZipfCategory::NO_ANNOTATION;
    double x_jittered = 0.0;
    double y_jittered = 0.0;
};

struct RankedTerm {
    Curie id;
    std::uint64_t count = 0;
};

// Descending by count, ties by CURIE order; ranks are the resulting 1..N.
std::vector<RankedTerm> rank_terms(const AnnotationTable& table,
                                   const std::vector<Curie>& terms);

struct ZipfSample {
    std::vector<ZipfPoint> points;       // ordered by rank
    bool population_clipped = false;     // sample_n exceeded the population
};

// Seeded uniform sample without replacement of sample_n terms; categories
// from `correctness` (must cover every non-zero-count sampled term); jitter
// is uniform in [-amplitude, +amplitude] per coordinate.
ZipfSample zipf_points(const std::vector<RankedTerm>& ranked,
                       const std::map<Curie, bool>& correctness,
                       std::size_t sample_n = 2000, std::uint64_t seed = 0,
                       double jitter_amplitude = 0.05);

// Deterministic standalone scatter plot of the jittered points.
// Throws Error when `points` is empty.
std::string render_svg(const std::vector<ZipfPoint>& points);

// term_id,rank,count,x,y,category,x_jittered,y_jittered
void write_zipf_csv(const std::vector<ZipfPoint>& points,
                    const std::filesystem::path& path);

}  // namespace ontolink
