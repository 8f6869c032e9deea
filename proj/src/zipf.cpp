#include "ontolink/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "ontolink/errors.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

const char* zipf_category_name(ZipfCategory c) {
    switch (c) {
        case ZipfCategory::NO_ANNOTATION: return "no_annotation";
        case ZipfCategory::CORRECT: return "correct";
        case ZipfCategory::INCORRECT: return "incorrect";
    }
    return "?";
}

const char* zipf_category_color(ZipfCategory c) {
    switch (c) {
        case ZipfCategory::NO_ANNOTATION: return "red";
        case ZipfCategory::CORRECT: return "green";
        case ZipfCategory::INCORRECT: return "blue";
    }
    return "black";
}

std::vector<RankedTerm> rank_terms(const AnnotationTable& table,
                                   const std::vector<Curie>& terms) {
    std::vector<RankedTerm> out;
    out.reserve(terms.size());
    for (const auto& id : terms) out.push_back(RankedTerm{id, table.count_for(id)});
    std::sort(out.begin(), out.end(), [](const RankedTerm& a, const RankedTerm& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.id < b.id;
    });
    return out;
}

namespace {

// Bounded draw and unit double from the raw generator, spelled out so the
// byte-for-byte output contract does not depend on library distributions.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
}

}  // namespace

ZipfSample zipf_points(const std::vector<RankedTerm>& ranked,
                       const std::map<Curie, bool>& correctness,
                       std::size_t sample_n, std::uint64_t seed,
                       double jitter_amplitude) {
    ZipfSample out;
    std::size_t n = ranked.size();
    if (n == 0) return out;

    std::size_t take = sample_n;
    if (take > n) {
        take = n;
        out.population_clipped = true;
    }

    // partial Fisher-Yates over rank indices
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<std::size_t> chosen(idx.begin(), idx.begin() + take);
    std::sort(chosen.begin(), chosen.end());

    out.points.reserve(take);
    for (std::size_t i : chosen) {
        const RankedTerm& term = ranked[i];
        ZipfPoint p;
        p.term_id = term.id;
        p.rank = i + 1;
        p.count = term.count;
        p.x = std::log10(static_cast<double>(p.rank));
        p.y = term.count == 0
                  ? -1.0  // log10(0 + 0.1) exactly
                  : std::log10(static_cast<double>(term.count) + 0.1);
        if (term.count == 0) {
            p.category = ZipfCategory::NO_ANNOTATION;
        } else {
            auto it = correctness.find(term.id);
            if (it == correctness.end()) {
                throw Error("no probe result for ranked term " + term.id.str());
            }
            p.category = it->second ? ZipfCategory::CORRECT : ZipfCategory::INCORRECT;
        }
        p.x_jittered = p.x + jitter_amplitude * (2.0 * unit_double(rng) - 1.0);
        p.y_jittered = p.y + jitter_amplitude * (2.0 * unit_double(rng) - 1.0);
        out.points.push_back(std::move(p));
    }
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<ZipfPoint>& points) {
    if (points.empty()) throw Error("no zipf points to render");

    constexpr double kW = 760.0, kH = 560.0;
    constexpr double kLeft = 70.0, kRight = 180.0, kTop = 30.0, kBottom = 60.0;
    const double plot_w = kW - kLeft - kRight;
    const double plot_h = kH - kTop - kBottom;

    double xmin = points[0].x_jittered, xmax = xmin;
    double ymin = points[0].y_jittered, ymax = ymin;
    for (const auto& p : points) {
        xmin = std::min(xmin, p.x_jittered);
        xmax = std::max(xmax, p.x_jittered);
        ymin = std::min(ymin, p.y_jittered);
        ymax = std::max(ymax, p.y_jittered);
    }
    if (xmax - xmin < 1e-9) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-9) ymax = ymin + 1.0;
    double xpad = 0.04 * (xmax - xmin), ypad = 0.04 * (ymax - ymin);
    xmin -= xpad, xmax += xpad, ymin -= ypad, ymax += ypad;

    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kW) +
           "\" height=\"" + fmt(kH) + "\" viewBox=\"0 0 " + fmt(kW) + " " + fmt(kH) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kW) + "\" height=\"" + fmt(kH) +
           "\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(plot_w) +
           "\" height=\"" + fmt(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

    // axis labels and extreme ticks
    svg += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" + fmt(kH - 15) +
           "\" text-anchor=\"middle\" font-size=\"15\">log10(rank)</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-size=\"15\" transform=\"rotate(-90 20 " +
           fmt(kTop + plot_h / 2) + ")\">log10(count + 0.1)</text>\n";
    svg += "<text x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kH - 38) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + fmt(xmin) + "</text>\n";
    svg += "<text x=\"" + fmt(kLeft + plot_w) + "\" y=\"" + fmt(kH - 38) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + fmt(xmax) + "</text>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(sy(ymin)) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt(ymin) + "</text>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(sy(ymax) + 10) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt(ymax) + "</text>\n";

    for (const auto& p : points) {
        svg += "<circle class=\"pt\" cx=\"" + fmt(sx(p.x_jittered)) + "\" cy=\"" +
               fmt(sy(p.y_jittered)) + "\" r=\"2.2\" fill=\"" +
               zipf_category_color(p.category) + "\" fill-opacity=\"0.65\"/>\n";
    }

    const ZipfCategory cats[] = {ZipfCategory::NO_ANNOTATION, ZipfCategory::CORRECT,
                                 ZipfCategory::INCORRECT};
    const char* legend_text[] = {"no annotations", "correctly linked", "incorrectly linked"};
    double lx = kLeft + plot_w + 18.0, ly = kTop + 18.0;
    for (int i = 0; i < 3; ++i) {
        svg += "<circle class=\"key\" cx=\"" + fmt(lx) + "\" cy=\"" + fmt(ly) +
               "\" r=\"5\" fill=\"" + zipf_category_color(cats[i]) + "\"/>\n";
        svg += "<text x=\"" + fmt(lx + 12) + "\" y=\"" + fmt(ly + 4.5) +
               "\" font-size=\"13\">" + legend_text[i] + "</text>\n";
        ly += 24.0;
    }
    svg += "</svg>\n";
    return svg;
}

void write_zipf_csv(const std::vector<ZipfPoint>& points,
                    const std::filesystem::path& path) {
    std::string out = "term_id,rank,count,x,y,category,x_jittered,y_jittered\n";
    for (const auto& p : points) {
        out += p.term_id.str();
        out += "," + std::to_string(p.rank);
        out += "," + std::to_string(p.count);
        out += "," + format_double(p.x, 17);
        out += "," + format_double(p.y, 17);
        out += ",";
        out += zipf_category_name(p.category);
        out += "," + format_double(p.x_jittered, 17);
        out += "," + format_double(p.y_jittered, 17);
        out += "\n";
    }
    write_file(path, out);
}

}  // namespace ontolink
