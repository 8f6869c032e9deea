#include "ontolink/config.hpp"

#include <charconv>

#include "ontolink/errors.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

namespace {

std::uint64_t to_u64(std::string_view key, std::string_view value) {
    std::uint64_t out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("config key " + std::string(key) + " expects an unsigned integer, got '" +
                          std::string(value) + "'");
    }
    return out;
}

double to_double(std::string_view key, std::string_view value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(std::string(value), &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + std::string(key) + " expects a number, got '" +
                          std::string(value) + "'");
    }
}

bool to_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("config key " + std::string(key) + " expects true/false, got '" +
                      std::string(value) + "'");
}

}  // namespace

void apply_config_line(RunConfig& cfg, std::string_view key, std::string_view value) {
    if (key == "ontology") {
        cfg.ontology = parse_ontology_kind(value);
    } else if (key == "ontology_path") {
        cfg.ontology_path = std::string(value);
    } else if (key == "annotation_path") {
        cfg.annotation_path = std::string(value);
    } else if (key == "aspect") {
        if (value.size() != 1) throw ConfigError("aspect expects a single letter C/F/P");
        cfg.annotation_aspect = value[0];
    } else if (key == "root") {
        auto id = Curie::parse(value);
        if (!id) throw ConfigError("root is not a valid CURIE: '" + std::string(value) + "'");
        cfg.root_override = *id;
    } else if (key == "corpus_cache") {
        cfg.corpus_cache_path = std::string(value);
    } else if (key == "probe_cache") {
        cfg.probe_cache_path = std::string(value);
    } else if (key == "output_dir") {
        cfg.output_dir = std::string(value);
    } else if (key == "seed") {
        cfg.seed = to_u64(key, value);
    } else if (key == "offline") {
        cfg.offline = to_bool(key, value);
    } else if (key == "provider_endpoint") {
        cfg.provider.endpoint = std::string(value);
    } else if (key == "provider_model") {
        cfg.provider.model = std::string(value);
    } else if (key == "provider_key_env") {
        cfg.provider.credential_env = std::string(value);
    } else if (key == "max_in_flight") {
        cfg.provider.max_in_flight = static_cast<int>(to_u64(key, value));
    } else if (key == "join_threshold") {
        cfg.join_threshold = to_double(key, value);
    } else if (key == "bin_edges") {
        cfg.bin_edges.clear();
        for (auto part : split(value, ',')) {
            cfg.bin_edges.push_back(to_u64(key, trim(part)));
        }
    } else if (key == "zipf_sample") {
        cfg.zipf_sample = to_u64(key, value);
    } else if (key == "zipf_jitter") {
        cfg.zipf_jitter = to_double(key, value);
    } else if (key == "corpus_endpoint") {
        cfg.corpus_endpoint = std::string(value);
    } else if (key == "corpus_throttle_ms") {
        cfg.corpus_throttle_ms = static_cast<int>(to_u64(key, value));
    } else if (key == "corpus_backoff_ms") {
        cfg.corpus_backoff_ms = static_cast<int>(to_u64(key, value));
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

RunConfig load_config(const std::filesystem::path& path) {
    RunConfig cfg;
    std::string text = read_file(path);
    LineReader reader(text);
    std::string_view line;
    std::size_t line_no = 0;
    while (reader.next(line, line_no)) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              " is not key = value: '" + std::string(t) + "'");
        }
        apply_config_line(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace ontolink
