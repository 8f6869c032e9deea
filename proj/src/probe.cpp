#include "ontolink/probe.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "ontolink/corpus.hpp"  // iso8601_utc_now
#include "ontolink/errors.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

using nlohmann::json;

std::string build_prompt(std::string_view label, std::string_view prefix) {
    if (label.empty()) throw std::invalid_argument("cannot build a prompt for an empty label");
    std::string shown = (prefix == "HP") ? "HPO" : std::string(prefix);
    std::string out = "What is the " + shown + " ID for '" + std::string(label) +
                      "'? Return only the code in format " + std::string(prefix) + ":1234567";
    return out;
}

std::optional<Curie> parse_response(std::string_view text, std::string_view prefix) {
    std::string needle = std::string(prefix) + ":";
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string_view::npos) {
        std::size_t digits_start = pos + needle.size();
        std::size_t n = 0;
        while (digits_start + n < text.size() &&
               text[digits_start + n] >= '0' && text[digits_start + n] <= '9') {
            ++n;
        }
        if (n == Curie::kDigitCount) {
            return Curie(std::string(prefix),
                         std::string(text.substr(digits_start, Curie::kDigitCount)));
        }
        pos = digits_start + n;
    }
    return std::nullopt;
}

ProbeResult score_response(const Curie& term_id, std::string_view label,
                           std::string_view raw_response, std::string_view model_name) {
    ProbeResult r;
    r.term_id = term_id;
    r.term_label = std::string(label);
    r.raw_response = std::string(raw_response);
    r.predicted = parse_response(raw_response, term_id.prefix());
    r.correct = r.predicted.has_value() && *r.predicted == term_id;
    r.model_name = std::string(model_name);
    return r;
}

ProbeCache::ProbeCache(std::filesystem::path file) : path_(std::move(file)) {
    if (std::filesystem::exists(path_)) {
        std::string text = read_file(path_);
        LineReader reader(text);
        std::string_view line;
        std::size_t line_no = 0;
        while (reader.next(line, line_no)) {
            if (trim(line).empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("term_id") || !j.contains("raw_response")) {
                continue;  // torn final append
            }
            auto id = Curie::parse(j["term_id"].get<std::string>());
            if (!id) continue;
            Entry e;
            e.prompt = j.value("prompt", "");
            e.raw_response = j["raw_response"].get<std::string>();
            e.model_name = j.value("model_name", "");
            e.timestamp = j.value("timestamp", "");
            entries_[*id] = std::move(e);
        }
    }
    append_.open(path_, std::ios::app | std::ios::binary);
    if (!append_) throw Error("cannot open probe cache for append: " + path_.string());
}

std::optional<ProbeCache::Entry> ProbeCache::lookup(const Curie& term_id) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(term_id);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ProbeCache::store(const Curie& term_id, const Entry& entry) {
    std::lock_guard lock(mu_);
    json j{{"term_id", term_id.str()},
           {"prompt", entry.prompt},
           {"raw_response", entry.raw_response},
           {"model_name", entry.model_name},
           {"timestamp", entry.timestamp}};
    append_ << j.dump() << '\n';
    append_.flush();
    entries_[term_id] = entry;
}

std::size_t ProbeCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

namespace {

class HttpChatClient : public ChatClient {
public:
    HttpChatClient(ProviderConfig provider, HttpClient* http, std::string key)
        : provider_(std::move(provider)), http_(http), key_(std::move(key)) {}

    std::string complete(const std::string& prompt) override {
        json payload{{"model", provider_.model},
                     {"messages", json::array({json{{"role", "user"}, {"content", prompt}}})},
                     {"temperature", 0},
                     {"n", 1}};
        HttpHeaders headers{{"Authorization", "Bearer " + key_}};
        HttpResponse res = http_->post_json(provider_.endpoint, payload.dump(), headers);
        if (res.status != 200) {
            throw NetworkError("chat endpoint returned HTTP " + std::to_string(res.status));
        }
        json j = json::parse(res.body, nullptr, false);
        if (j.is_discarded()) throw ProtocolError("chat response is not valid JSON");
        try {
            return j.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception&) {
            throw ProtocolError("chat response lacks choices[0].message.content");
        }
    }

private:
    ProviderConfig provider_;
    HttpClient* http_;
    std::string key_;
};

}  // namespace

std::unique_ptr<ChatClient> make_chat_client(const ProviderConfig& provider,
                                             HttpClient* http) {
    const char* key = provider.credential_env.empty()
                          ? nullptr
                          : std::getenv(provider.credential_env.c_str());
    if (key == nullptr || *key == '\0') {
        throw ConfigError("credential env var " +
                          (provider.credential_env.empty() ? std::string("<unset>")
                                                           : provider.credential_env) +
                          " is empty; cannot probe live");
    }
    return std::make_unique<HttpChatClient>(provider, http, key);
}

double ProbeRun::accuracy(bool partial) const {
    std::size_t correct = 0;
    for (const auto& r : results) {
        if (r.correct) ++correct;
    }
    std::size_t denom = results.size() + (partial ? 0 : unresolved.size());
    return denom == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(denom);
}

ProbeRun run_probe(const std::vector<TermRecord>& terms, const ProviderConfig& provider,
                   ProbeCache& cache, ChatClient* client) {
    // deterministic work order regardless of caller ordering
    std::vector<const TermRecord*> work;
    work.reserve(terms.size());
    for (const auto& t : terms) {
        if (!t.obsolete) work.push_back(&t);
    }
    std::sort(work.begin(), work.end(),
              [](const TermRecord* a, const TermRecord* b) { return a->id < b->id; });

    std::vector<std::optional<ProbeResult>> slots(work.size());
    std::vector<Curie> unresolved;
    std::mutex unresolved_mu;

    auto process = [&](std::size_t i) {
        const TermRecord& term = *work[i];
        if (auto hit = cache.lookup(term.id)) {
            slots[i] = score_response(term.id, term.name, hit->raw_response, hit->model_name);
            return;
        }
        if (provider.offline || client == nullptr) {
            std::lock_guard lock(unresolved_mu);
            unresolved.push_back(term.id);
            return;
        }
        std::string prompt = build_prompt(term.name, term.id.prefix());
        auto backoff = provider.initial_backoff;
        for (int attempt = 1; attempt <= provider.max_attempts; ++attempt) {
            try {
                std::string raw = client->complete(prompt);
                ProbeCache::Entry entry{prompt, raw, provider.model, iso8601_utc_now()};
                cache.store(term.id, entry);
                slots[i] = score_response(term.id, term.name, raw, provider.model);
                return;
            } catch (const NetworkError&) {
                if (attempt < provider.max_attempts) {
                    std::this_thread::sleep_for(backoff);
                    backoff *= 2;
                }
            }
        }
        std::lock_guard lock(unresolved_mu);
        unresolved.push_back(term.id);
    };

    int workers = std::max(1, provider.max_in_flight);
    if (workers == 1 || work.size() <= 1) {
        for (std::size_t i = 0; i < work.size(); ++i) process(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < work.size();
                     i = next.fetch_add(1)) {
                    process(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    ProbeRun run;
    for (auto& slot : slots) {
        if (slot) run.results.push_back(std::move(*slot));
    }
    std::sort(unresolved.begin(), unresolved.end());
    run.unresolved = std::move(unresolved);
    return run;
}

void write_probe_csv(const std::vector<ProbeResult>& results,
                     const std::filesystem::path& path) {
    std::string out = "term_id,label,predicted,correct\n";
    for (const auto& r : results) {
        out += r.term_id.str();
        out += "," + csv_field(r.term_label);
        out += ",";
        if (r.predicted) out += r.predicted->str();
        out += r.correct ? ",1\n" : ",0\n";
    }
    write_file(path, out);
}

std::map<Curie, bool> read_probe_csv(const std::filesystem::path& path) {
    std::string text = read_file(path);
    std::map<Curie, bool> out;
    LineReader reader(text);
    std::string_view line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (reader.next(line, line_no)) {
        if (trim(line).empty()) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto f = csv_split(line);
        if (f.size() != 4) {
            throw ParseError("expected 4 columns in probe CSV, got " + std::to_string(f.size()),
                             line_no);
        }
        auto id = Curie::parse(f[0]);
        if (!id) throw ParseError("bad term_id '" + f[0] + "' in probe CSV", line_no);
        bool correct;
        if (f[3] == "0") correct = false;
        else if (f[3] == "1") correct = true;
        else throw ParseError("bad correct flag '" + f[3] + "' in probe CSV", line_no);
        out[*id] = correct;
    }
    return out;
}

}  // namespace ontolink
