#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "ontolink/curie.hpp"
#include "ontolink/http.hpp"

namespace ontolink {

// One resolved PMC hit count.
struct CorpusCount {
    std::string query;
    std::uint64_t count = 0;
    std::string retrieved_at;  // ISO 8601 UTC
    enum class Source { LIVE, CACHE } source = Source::CACHE;
};

// Append-only JSON-lines cache {query, count, retrieved_at}; the last entry
// for a query wins. A truncated final line (crash mid-append) is skipped on
// load, so reruns always resume from everything fully written.
class CorpusCache {
public:
    explicit CorpusCache(std::filesystem::path file);

    std::optional<CorpusCount> lookup(const std::string& query) const;
    void store(const std::string& query, std::uint64_t count,
               const std::string& retrieved_at);

    std::size_t size() const;
    std::size_t malformed_lines() const { return malformed_; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::map<std::string, CorpusCount> entries_;
    std::ofstream append_;
    std::size_t malformed_ = 0;
    mutable std::mutex mu_;
};

// Phrase query for a term label: the label wrapped in double quotes.
std::string term_query(std::string_view label);
// Phrase query for an identifier: the canonical CURIE text in double quotes.
std::string identifier_query(const Curie& id);

struct PmcClientOptions {
    std::string endpoint = "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/esearch.fcgi";
    std::string api_key;  // optional; see NCBI_API_KEY
    bool offline = false;
    std::chrono::milliseconds throttle{1000};
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{1000};
    std::filesystem::path failure_log;  // optional append-only log
};

// E-Utilities esearch counter. Cache hits never touch the network; live
// requests are serialized and spaced at least `throttle` apart.
class PmcCounter {
public:
    PmcCounter(CorpusCache& cache, HttpClient* client, PmcClientOptions options);

    // Throws MissingFeatureError on an offline cache miss, NetworkError after
    // exhausted retries, ProtocolError on unusable response bodies.
    CorpusCount count(const std::string& query);

    std::size_t live_requests() const { return live_requests_; }

private:
    CorpusCount fetch_live(const std::string& query);
    void log_failure(const std::string& query, const std::string& error);

    CorpusCache& cache_;
    HttpClient* client_;
    PmcClientOptions options_;
    std::mutex mu_;  // serializes live traffic; the throttle is process-global
    std::chrono::steady_clock::time_point last_request_{};
    bool any_request_ = false;
    std::size_t live_requests_ = 0;
};

// Parse an esearch JSON body to `esearchresult.count`. ProtocolError when
// the field is missing or non-numeric.
std::uint64_t parse_esearch_count(const std::string& body);

std::string iso8601_utc_now();

}  // namespace ontolink
