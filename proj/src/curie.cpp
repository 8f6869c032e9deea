#include "ontolink/curie.hpp"

#include <cctype>
#include <stdexcept>

namespace ontolink {

namespace {

bool valid_prefix(std::string_view p) {
    if (p.empty()) return false;
    for (char c : p) {
        if (c < 'A' || c > 'Z') return false;
    }
    return true;
}

bool valid_digits(std::string_view d) {
    if (d.size() != Curie::kDigitCount) return false;
    for (char c : d) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Curie::Curie(std::string prefix, std::string digits)
    : prefix_(std::move(prefix)), digits_(std::move(digits)) {
    if (!valid_prefix(prefix_)) {
        throw std::invalid_argument("CURIE prefix must be 1+ uppercase ASCII letters: '" + prefix_ + "'");
    }
    if (!valid_digits(digits_)) {
        throw std::invalid_argument("CURIE digit block must be exactly 7 decimal digits: '" + digits_ + "'");
    }
}

std::optional<Curie> Curie::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    std::string_view prefix = text.substr(0, colon);
    std::string_view digits = text.substr(colon + 1);
    if (!valid_prefix(prefix) || !valid_digits(digits)) return std::nullopt;
    Curie c;
    c.prefix_ = std::string(prefix);
    c.digits_ = std::string(digits);
    return c;
}

}  // namespace ontolink
