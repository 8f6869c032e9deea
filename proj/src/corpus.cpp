#include "ontolink/corpus.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ctime>
#include <thread>

#include "ontolink/errors.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

using nlohmann::json;

CorpusCache::CorpusCache(std::filesystem::path file) : path_(std::move(file)) {
    if (std::filesystem::exists(path_)) {
        std::string text = read_file(path_);
        LineReader reader(text);
        std::string_view line;
        std::size_t line_no = 0;
        while (reader.next(line, line_no)) {
            if (trim(line).empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("query") || !j.contains("count")) {
                ++malformed_;  // tolerated: typically a torn final append
                continue;
            }
            CorpusCount e;
            e.query = j["query"].get<std::string>();
            e.count = j["count"].get<std::uint64_t>();
            e.retrieved_at = j.value("retrieved_at", "");
            e.source = CorpusCount::Source::CACHE;
            entries_[e.query] = std::move(e);  // last entry wins
        }
    }
    append_.open(path_, std::ios::app | std::ios::binary);
    if (!append_) throw Error("cannot open corpus cache for append: " + path_.string());
}

std::optional<CorpusCount> CorpusCache::lookup(const std::string& query) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(query);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CorpusCache::store(const std::string& query, std::uint64_t count,
                        const std::string& retrieved_at) {
    std::lock_guard lock(mu_);
    json j{{"query", query}, {"count", count}, {"retrieved_at", retrieved_at}};
    append_ << j.dump() << '\n';
    append_.flush();
    CorpusCount e;
    e.query = query;
    e.count = count;
    e.retrieved_at = retrieved_at;
    e.source = CorpusCount::Source::CACHE;
    entries_[query] = std::move(e);
}

std::size_t CorpusCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

std::string term_query(std::string_view label) {
    return "\"" + std::string(label) + "\"";
}

std::string identifier_query(const Curie& id) { return "\"" + id.str() + "\""; }

std::uint64_t parse_esearch_count(const std::string& body) {
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded()) throw ProtocolError("esearch response is not valid JSON");
    if (!j.contains("esearchresult") || !j["esearchresult"].contains("count")) {
        throw ProtocolError("esearch response lacks esearchresult.count");
    }
    const auto& c = j["esearchresult"]["count"];
    std::string text = c.is_string() ? c.get<std::string>() : c.dump();
    try {
        std::size_t pos = 0;
        auto v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ProtocolError("esearch count is not a natural number: '" + text + "'");
    }
}

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

PmcCounter::PmcCounter(CorpusCache& cache, HttpClient* client, PmcClientOptions options)
    : cache_(cache), client_(client), options_(std::move(options)) {}

CorpusCount PmcCounter::count(const std::string& query) {
    if (query.empty()) throw Error("empty corpus query");
    if (auto hit = cache_.lookup(query)) {
        return *hit;
    }
    if (options_.offline || client_ == nullptr) {
        throw MissingFeatureError("offline corpus cache has no entry for query " + query);
    }
    return fetch_live(query);
}

CorpusCount PmcCounter::fetch_live(const std::string& query) {
    std::lock_guard lock(mu_);
    std::string url = options_.endpoint + "?db=pmc&retmode=json&term=" + url_encode(query);
    if (!options_.api_key.empty()) {
        url += "&api_key=" + url_encode(options_.api_key);
    }

    auto backoff = options_.initial_backoff;
    std::string last_error;
    for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
        if (any_request_) {
            auto elapsed = std::chrono::steady_clock::now() - last_request_;
            if (elapsed < options_.throttle) {
                std::this_thread::sleep_for(options_.throttle - elapsed);
            }
        }
        last_request_ = std::chrono::steady_clock::now();
        any_request_ = true;
        ++live_requests_;

        try {
            HttpResponse res = client_->get(url);
            if (res.status == 200) {
                std::uint64_t n;
                try {
                    n = parse_esearch_count(res.body);
                } catch (const ProtocolError& e) {
                    log_failure(query, e.what());
                    throw;  // deterministic server-side problem; retrying is pointless
                }
                CorpusCount out;
                out.query = query;
                out.count = n;
                out.retrieved_at = iso8601_utc_now();
                out.source = CorpusCount::Source::LIVE;
                cache_.store(query, n, out.retrieved_at);
                return out;
            }
            last_error = "HTTP status " + std::to_string(res.status);
        } catch (const ProtocolError&) {
            throw;
        } catch (const NetworkError& e) {
            last_error = e.what();
        }

        if (attempt < options_.max_attempts) {
            std::this_thread::sleep_for(backoff);
            backoff *= 2;
        }
    }
    log_failure(query, last_error);
    throw NetworkError("esearch query failed after " + std::to_string(options_.max_attempts) +
                       " attempts: " + last_error);
}

void PmcCounter::log_failure(const std::string& query, const std::string& error) {
    if (options_.failure_log.empty()) return;
    std::ofstream log(options_.failure_log, std::ios::app);
    log << iso8601_utc_now() << '\t' << query << '\t' << error << '\n';
}

}  // namespace ontolink
