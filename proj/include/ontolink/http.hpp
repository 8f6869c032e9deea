#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ontolink {

struct HttpResponse {
    int status = 0;
    std::string body;
};

using HttpHeaders = std::vector<std::pair<std::string, std::string>>;

// Transport seam: production code talks to an httplib-backed instance,
// tests substitute fakes. Implementations throw NetworkError on transport
// failure (unreachable host, TLS failure); HTTP error statuses are returned,
// not thrown.
class HttpClient {
public:
    virtual ~HttpClient() = default;
    virtual HttpResponse get(const std::string& url) = 0;
    virtual HttpResponse post_json(const std::string& url, const std::string& body,
                                   const HttpHeaders& headers) = 0;
};

std::unique_ptr<HttpClient> make_default_http_client();

// "scheme://host[:port]" and "/path..." halves of an absolute URL.
std::pair<std::string, std::string> split_url(const std::string& url);

}  // namespace ontolink
