#pragma once

// Shared fixture builders and fakes for the test suites.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ontolink/curie.hpp"
#include "ontolink/errors.hpp"
#include "ontolink/http.hpp"
#include "ontolink/probe.hpp"

namespace testsupport {

// Unique scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("ontolink_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

struct OboTerm {
    std::string id;
    std::string name;
    std::vector<std::string> is_a;
    bool obsolete = false;
};

inline std::string obo_text(const std::vector<OboTerm>& terms,
                            const std::string& header = "format-version: 1.2\n") {
    std::string out = header + "\n";
    for (const auto& t : terms) {
        out += "[Term]\n";
        out += "id: " + t.id + "\n";
        if (!t.name.empty()) out += "name: " + t.name + "\n";
        for (const auto& p : t.is_a) out += "is_a: " + p + "\n";
        if (t.obsolete) out += "is_obsolete: true\n";
        out += "\n";
    }
    return out;
}

inline std::string hpoa_text(const std::vector<std::string>& hpo_ids) {
    std::string out = "#description: fixture\n";
    out += "database_id\tdisease_name\tqualifier\thpo_id\treference\n";
    int n = 0;
    for (const auto& id : hpo_ids) {
        out += "OMIM:" + std::to_string(100000 + n++) + "\tdisease\t\t" + id + "\tPMID:1\n";
    }
    return out;
}

// DR lines for (go_id, aspect) pairs inside a minimal SwissProt entry.
inline std::string swissprot_text(
    const std::vector<std::pair<std::string, char>>& refs) {
    std::string out = "ID   TEST_HUMAN              Reviewed;         100 AA.\n";
    out += "AC   P00001;\n";
    for (const auto& [id, aspect] : refs) {
        out += "DR   GO; " + id + "; " + std::string(1, aspect) + ":something; IEA:Fixture.\n";
    }
    out += "SQ   SEQUENCE   100 AA;  10000 MW;  0000000000000000 CRC64;\n";
    out += "//\n";
    return out;
}

inline ontolink::Curie curie(const std::string& text) {
    auto c = ontolink::Curie::parse(text);
    if (!c) throw std::runtime_error("bad fixture curie: " + text);
    return *c;
}

// Scripted HTTP transport: pops responses in order, records requests.
class FakeHttpClient : public ontolink::HttpClient {
public:
    struct Scripted {
        bool transport_failure = false;
        int status = 200;
        std::string body;
    };

    std::vector<Scripted> script;
    std::vector<std::string> get_urls;
    std::vector<std::string> post_bodies;

    ontolink::HttpResponse get(const std::string& url) override {
        get_urls.push_back(url);
        return next();
    }
    ontolink::HttpResponse post_json(const std::string& url, const std::string& body,
                                     const ontolink::HttpHeaders&) override {
        get_urls.push_back(url);
        post_bodies.push_back(body);
        return next();
    }

private:
    ontolink::HttpResponse next() {
        if (script.empty()) throw ontolink::NetworkError("fake transport: script exhausted");
        Scripted s = script.front();
        script.erase(script.begin());
        if (s.transport_failure) throw ontolink::NetworkError("fake transport failure");
        return ontolink::HttpResponse{s.status, s.body};
    }
};

// Chat stub answering from a fixed map; unknown prompts raise transport errors.
class FakeChatClient : public ontolink::ChatClient {
public:
    std::map<std::string, std::string> replies;  // prompt -> raw response
    bool always_fail = false;
    std::atomic<int> calls{0};

    std::string complete(const std::string& prompt) override {
        ++calls;
        if (always_fail) throw ontolink::NetworkError("fake chat transport failure");
        auto it = replies.find(prompt);
        if (it == replies.end()) throw ontolink::NetworkError("fake chat: no scripted reply");
        return it->second;
    }
};

}  // namespace testsupport
