#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "ontolink/http.hpp"

#include "ontolink/errors.hpp"

namespace ontolink {

std::pair<std::string, std::string> split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("URL has no scheme: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        return {url, "/"};
    }
    return {url.substr(0, path_start), url.substr(path_start)};
}

namespace {

class HttplibClient : public HttpClient {
public:
    HttpResponse get(const std::string& url) override {
        auto [origin, path] = split_url(url);
        httplib::Client cli(origin);
        cli.set_connection_timeout(15);
        cli.set_read_timeout(60);
        auto res = cli.Get(path);
        if (!res) {
            throw NetworkError("GET " + url + " failed: " + httplib::to_string(res.error()));
        }
        return HttpResponse{res->status, res->body};
    }

    HttpResponse post_json(const std::string& url, const std::string& body,
                           const HttpHeaders& headers) override {
        auto [origin, path] = split_url(url);
        httplib::Client cli(origin);
        cli.set_connection_timeout(15);
        cli.set_read_timeout(300);
        httplib::Headers h(headers.begin(), headers.end());
        auto res = cli.Post(path, h, body, "application/json");
        if (!res) {
            throw NetworkError("POST " + url + " failed: " + httplib::to_string(res.error()));
        }
        return HttpResponse{res->status, res->body};
    }
};

}  // namespace

std::unique_ptr<HttpClient> make_default_http_client() {
    return std::make_unique<HttplibClient>();
}

}  // namespace ontolink
