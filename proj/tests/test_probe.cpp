#include <doctest.h>

#include <cstdlib>

#include "ontolink/errors.hpp"
#include "ontolink/probe.hpp"
#include "ontolink/textio.hpp"
#include "support/fixtures.hpp"

using namespace ontolink;
using testsupport::curie;
using testsupport::FakeChatClient;
using testsupport::TempDir;

namespace {

std::vector<TermRecord> fixture_terms() {
    std::vector<TermRecord> terms;
    auto add = [&](const char* id, const char* name) {
        TermRecord t;
        t.id = curie(id);
        t.name = name;
        terms.push_back(t);
    };
    add("HP:0000001", "All");
    add("HP:0000118", "Phenotypic abnormality");
    add("HP:0001251", "Ataxia");
    add("HP:0004322", "Short stature");
    return terms;
}

ProviderConfig offline_provider() {
    ProviderConfig p;
    p.model = "fixture-model";
    p.offline = true;
    return p;
}

}  // namespace

TEST_SUITE("probe") {

TEST_CASE("prompt template") {
    CHECK(build_prompt("Ataxia", "HP") ==
          "What is the HPO ID for 'Ataxia'? Return only the code in format HP:1234567");
    CHECK(build_prompt("cytoplasm", "GO") ==
          "What is the GO ID for 'cytoplasm'? Return only the code in format GO:1234567");
    CHECK_THROWS_AS(build_prompt("", "HP"), std::invalid_argument);
}

TEST_CASE("response parsing") {
    CHECK(parse_response("HP:0001251", "HP") == curie("HP:0001251"));
    CHECK(parse_response("The ID is HP:0000118.", "HP") == curie("HP:0000118"));
    CHECK(parse_response("  HP:0000118\n", "HP") == curie("HP:0000118"));
    CHECK_FALSE(parse_response("I don't know", "HP").has_value());
    CHECK_FALSE(parse_response("hp:0001251", "HP").has_value());  // case-sensitive
    CHECK_FALSE(parse_response("HP:123", "HP").has_value());      // short run
    CHECK_FALSE(parse_response("HP:00012510", "HP").has_value()); // 8-digit run
    // an overlong run is skipped, a later exact code is picked up
    CHECK(parse_response("HP:00012510 or HP:0000118", "HP") == curie("HP:0000118"));
    // first of several exact matches wins
    CHECK(parse_response("HP:0000001, HP:0000002", "HP") == curie("HP:0000001"));
    // prefix mismatch finds nothing
    CHECK_FALSE(parse_response("GO:0005737", "HP").has_value());
}

TEST_CASE("scoring soundness") {
    auto r = score_response(curie("HP:0001251"), "Ataxia", "HP:0001251", "m");
    CHECK(r.correct);
    REQUIRE(r.predicted.has_value());
    CHECK(*r.predicted == r.term_id);

    auto wrong = score_response(curie("HP:0001251"), "Ataxia", "HP:0001252", "m");
    CHECK_FALSE(wrong.correct);
    CHECK(wrong.predicted == curie("HP:0001252"));
    CHECK(wrong.raw_response == "HP:0001252");

    auto none = score_response(curie("HP:0001251"), "Ataxia", "no idea", "m");
    CHECK_FALSE(none.correct);
    CHECK_FALSE(none.predicted.has_value());
}

TEST_CASE("replay from a prebuilt cache: 2 of 4 correct") {
    TempDir tmp("probe_replay");
    {
        ProbeCache cache(tmp.file("probe.jsonl"));
        auto put = [&](const char* id, const char* raw) {
            cache.store(curie(id), {"prompt", raw, "archived-model", "t"});
        };
        put("HP:0000001", "HP:0000001");              // correct
        put("HP:0000118", "HP:0000118 is the code");  // correct
        put("HP:0001251", "HP:0001999");              // wrong id
        put("HP:0004322", "unknown");                 // no code at all
    }
    ProbeCache cache(tmp.file("probe.jsonl"));
    auto run = run_probe(fixture_terms(), offline_provider(), cache, nullptr);
    REQUIRE(run.results.size() == 4);         // coverage: every term resolved
    CHECK(run.unresolved.empty());
    CHECK(run.accuracy(false) == 0.5);
    CHECK(run.results[0].model_name == "archived-model");  // replay keeps provenance

    // byte-identical CSV across two replays
    write_probe_csv(run.results, tmp.file("a.csv"));
    auto run2 = run_probe(fixture_terms(), offline_provider(), cache, nullptr);
    write_probe_csv(run2.results, tmp.file("b.csv"));
    CHECK(read_file(tmp.file("a.csv")) == read_file(tmp.file("b.csv")));
}

TEST_CASE("offline misses become unresolved, excluded only when partial") {
    TempDir tmp("probe_partial");
    {
        ProbeCache cache(tmp.file("probe.jsonl"));
        cache.store(curie("HP:0000001"), {"p", "HP:0000001", "m", "t"});
        cache.store(curie("HP:0000118"), {"p", "nope", "m", "t"});
    }
    ProbeCache cache(tmp.file("probe.jsonl"));
    auto run = run_probe(fixture_terms(), offline_provider(), cache, nullptr);
    CHECK(run.results.size() == 2);
    CHECK(run.unresolved == std::vector<Curie>{curie("HP:0001251"), curie("HP:0004322")});
    CHECK(run.accuracy(true) == 0.5);   // partial: unresolved excluded
    CHECK(run.accuracy(false) == 0.25); // complete-run accounting
}

TEST_CASE("live probing fills the cache and scores") {
    TempDir tmp("probe_live");
    ProbeCache cache(tmp.file("probe.jsonl"));
    FakeChatClient chat;
    for (const auto& t : fixture_terms()) {
        chat.replies[build_prompt(t.name, "HP")] =
            t.id == curie("HP:0001251") ? "HP:9999999" : t.id.str();
    }
    ProviderConfig provider;
    provider.model = "live-model";
    provider.initial_backoff = std::chrono::milliseconds(1);
    auto run = run_probe(fixture_terms(), provider, cache, &chat);
    REQUIRE(run.results.size() == 4);
    CHECK(run.accuracy(false) == 0.75);
    CHECK(cache.size() == 4);
    CHECK(run.results[2].model_name == "live-model");

    // second run replays entirely from cache
    int calls_before = chat.calls;
    auto replay = run_probe(fixture_terms(), provider, cache, &chat);
    CHECK(chat.calls == calls_before);
    CHECK(replay.results.size() == 4);
}

TEST_CASE("transport failures mark terms unresolved after retries") {
    TempDir tmp("probe_fail");
    ProbeCache cache(tmp.file("probe.jsonl"));
    FakeChatClient chat;
    chat.always_fail = true;
    ProviderConfig provider;
    provider.model = "m";
    provider.max_attempts = 2;
    provider.initial_backoff = std::chrono::milliseconds(1);
    auto run = run_probe(fixture_terms(), provider, cache, &chat);
    CHECK(run.results.empty());
    CHECK(run.unresolved.size() == 4);
    CHECK(chat.calls == 8);  // 2 attempts per term
}

TEST_CASE("concurrent runs produce the serial result") {
    TempDir tmp_serial("probe_serial");
    TempDir tmp_conc("probe_conc");
    FakeChatClient chat;
    std::vector<TermRecord> terms;
    for (int i = 0; i < 40; ++i) {
        TermRecord t;
        char digits[8];
        std::snprintf(digits, sizeof(digits), "%07d", i);
        t.id = Curie("HP", digits);
        t.name = "term " + std::to_string(i);
        terms.push_back(t);
        chat.replies[build_prompt(t.name, "HP")] = (i % 3 == 0) ? t.id.str() : "no clue";
    }
    ProviderConfig serial;
    serial.model = "m";
    ProviderConfig concurrent = serial;
    concurrent.max_in_flight = 8;

    ProbeCache cache_a(tmp_serial.file("probe.jsonl"));
    ProbeCache cache_b(tmp_conc.file("probe.jsonl"));
    auto a = run_probe(terms, serial, cache_a, &chat);
    auto b = run_probe(terms, concurrent, cache_b, &chat);
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].term_id == b.results[i].term_id);
        CHECK(a.results[i].correct == b.results[i].correct);
        CHECK(a.results[i].raw_response == b.results[i].raw_response);
    }
    CHECK(a.accuracy(false) == b.accuracy(false));
}

TEST_CASE("obsolete terms are not probed") {
    TempDir tmp("probe_obsolete");
    ProbeCache cache(tmp.file("probe.jsonl"));
    auto terms = fixture_terms();
    terms[1].obsolete = true;
    auto run = run_probe(terms, offline_provider(), cache, nullptr);
    CHECK(run.results.size() + run.unresolved.size() == 3);
}

TEST_CASE("probe csv round trip keeps labels with commas intact") {
    TempDir tmp("probe_csv");
    std::vector<ProbeResult> results;
    results.push_back(score_response(curie("HP:0000001"), "All, everything", "HP:0000001", "m"));
    results.push_back(score_response(curie("HP:0000118"), "quote \" label", "nope", "m"));
    write_probe_csv(results, tmp.file("probe.csv"));
    auto loaded = read_probe_csv(tmp.file("probe.csv"));
    REQUIRE(loaded.size() == 2);
    CHECK(loaded.at(curie("HP:0000001")) == true);
    CHECK(loaded.at(curie("HP:0000118")) == false);
}

TEST_CASE("missing credential env is a config error") {
    ProviderConfig p;
    p.endpoint = "https://example.test/v1/chat/completions";
    p.model = "m";
    p.credential_env = "ONTOLINK_TEST_MISSING_KEY";
    ::unsetenv("ONTOLINK_TEST_MISSING_KEY");
    CHECK_THROWS_AS(make_chat_client(p, nullptr), ConfigError);
}

TEST_CASE("http chat client posts temperature-0 payloads and parses content") {
    testsupport::FakeHttpClient http;
    http.script.push_back(
        {false, 200,
         R"({"choices":[{"message":{"role":"assistant","content":"HP:0001251"}}]})"});
    ProviderConfig p;
    p.endpoint = "https://api.example.test/v1/chat/completions";
    p.model = "test-model";
    p.credential_env = "ONTOLINK_TEST_KEY";
    ::setenv("ONTOLINK_TEST_KEY", "abc123", 1);
    auto chat = make_chat_client(p, &http);
    CHECK(chat->complete("what?") == "HP:0001251");
    REQUIRE(http.post_bodies.size() == 1);
    CHECK(http.post_bodies[0].find("\"temperature\":0") != std::string::npos);
    CHECK(http.post_bodies[0].find("\"model\":\"test-model\"") != std::string::npos);
    CHECK(http.post_bodies[0].find("what?") != std::string::npos);

    http.script.push_back({false, 200, R"({"unexpected":true})"});
    CHECK_THROWS_AS(chat->complete("again"), ProtocolError);
    ::unsetenv("ONTOLINK_TEST_KEY");
}

}  // TEST_SUITE
