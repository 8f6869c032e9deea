#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontolink/curie.hpp"
#include "ontolink/http.hpp"
#include "ontolink/obo.hpp"

namespace ontolink {

// Outcome of one term->identifier query.
struct ProbeResult {
    Curie term_id;  // ground truth
    std::string term_label;
    std::string raw_response;  // verbatim
    std::optional<Curie> predicted;
    bool correct = false;  // predicted present and exactly equal to term_id
    std::string model_name;
};

// The query template, e.g.
//   What is the HPO ID for 'Ataxia'? Return only the code in format HP:1234567
// The HP prefix is spelled out as "HPO" in the question; other prefixes are
// used verbatim. Throws std::invalid_argument on an empty label.
std::string build_prompt(std::string_view label, std::string_view prefix);

// First occurrence of `<prefix>:` followed by a run of exactly seven digits
// (a longer digit run is not a valid code and scanning continues past it).
std::optional<Curie> parse_response(std::string_view text, std::string_view prefix);

// Pure scoring of one exchange.
ProbeResult score_response(const Curie& term_id, std::string_view label,
                           std::string_view raw_response, std::string_view model_name);

// Append-only JSON-lines record of every exchange, keyed by term_id with
// last entry winning; replays never touch the network.
class ProbeCache {
public:
    struct Entry {
        std::string prompt;
        std::string raw_response;
        std::string model_name;
        std::string timestamp;
    };

    explicit ProbeCache(std::filesystem::path file);

    std::optional<Entry> lookup(const Curie& term_id) const;
    void store(const Curie& term_id, const Entry& entry);
    std::size_t size() const;

private:
    std::filesystem::path path_;
    std::map<Curie, Entry> entries_;
    std::ofstream append_;
    mutable std::mutex mu_;
};

// Chat-completion seam; the HTTP implementation posts an OpenAI-style
// payload with temperature 0 and a single completion.
class ChatClient {
public:
    virtual ~ChatClient() = default;
    virtual std::string complete(const std::string& prompt) = 0;
};

struct ProviderConfig {
    std::string endpoint;  // e.g. https://api.openai.com/v1/chat/completions
    std::string model;
    std::string credential_env;  // env var holding the bearer token
    bool offline = false;
    int max_in_flight = 1;
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{1000};
};

// Throws ConfigError when the credential env var is unset/empty.
std::unique_ptr<ChatClient> make_chat_client(const ProviderConfig& provider,
                                             HttpClient* http);

struct ProbeRun {
    std::vector<ProbeResult> results;  // sorted by term_id; resolved terms only
    std::vector<Curie> unresolved;     // transport failures / offline misses

    // Fraction correct. Unresolved terms count against the denominator unless
    // the run is flagged partial.
    double accuracy(bool partial) const;
};

// One result per term: cached exchanges replay without the client, misses go
// live through `client` (nullptr or provider.offline makes misses
// unresolved). Order of `terms` does not affect the output.
ProbeRun run_probe(const std::vector<TermRecord>& terms, const ProviderConfig& provider,
                   ProbeCache& cache, ChatClient* client);

// probe_results.csv: term_id,label,predicted,correct
void write_probe_csv(const std::vector<ProbeResult>& results,
                     const std::filesystem::path& path);
// Correctness flags keyed by term id, as needed for dataset joins.
std::map<Curie, bool> read_probe_csv(const std::filesystem::path& path);

}  // namespace ontolink
